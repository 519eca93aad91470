#pragma once

#include "vinberg/linalg.hpp"
#include "vinberg/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <string>
#include <utility>

namespace vinberg {

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

// Exact signature of a symmetric integer matrix. Symmetric elimination with
// diagonal pivoting; when every remaining diagonal entry vanishes a 2x2
// hyperbolic block is eliminated instead. Throws Error("degenerate") on a
// singular matrix.
Signature signature_of(const IntMatrix& gram);

/// An integral quadratic form on Z^{dim+1} given by its Gram matrix.
///
/// Construction validates symmetry and non-degeneracy and computes the
/// signature once. The object is immutable afterwards.
class QuadraticForm {
public:
    QuadraticForm(std::size_t dim, IntMatrix gram);

    static QuadraticForm diagonal(const IntVector& entries);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t ambient() const noexcept { return dim_ + 1; }
    const IntMatrix& gram() const noexcept { return gram_; }
    const Signature& signature() const noexcept { return signature_; }
    bool is_diagonal() const noexcept { return diagonal_; }

    // Signature (dim, 1): the only forms the engine accepts.
    bool is_admissible() const noexcept;

    Integer inner(const LorentzVector& u, const LorentzVector& v) const;
    Integer norm(const LorentzVector& u) const { return inner(u, u); }

    // Row vector u^T * gram, so that inner(u, x) = dot(covector(u), x).
    IntVector covector(const LorentzVector& u) const;

    // x - 2 (e,x)/(e,e) e, exact. Throws Error("not a root direction") if (e,e) <= 0.
    RatVector reflect(const LorentzVector& e, const LorentzVector& x) const;

    // Matrix of the reflection in e acting on column vectors.
    RatMatrix reflection_matrix(const LorentzVector& e) const;

    // Stable textual digest of the Gram matrix (hex FNV-1a).
    std::string digest() const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.dim_ == b.dim_ && a.gram_ == b.gram_;
    }

private:
    void check_length(const LorentzVector& v) const;

    std::size_t dim_;
    IntMatrix gram_;
    Signature signature_;
    bool diagonal_ = false;
};

/// A primitive timelike lattice vector anchoring the distance ordering.
class ControlVector {
public:
    ControlVector(const QuadraticForm& form, LorentzVector u0);

    const LorentzVector& vector() const noexcept { return u0_; }
    // (u0, u0), always negative.
    const Integer& norm() const noexcept { return q_; }

private:
    LorentzVector u0_;
    Integer q_;
};

// For diagonal forms: the basis vector sitting on the (unique) negative entry.
LorentzVector default_control(const QuadraticForm& form);

// JSON form input: {"dim": n, "gram": [[...]]} or {"dim": n, "diag": [...]};
// integers may be JSON numbers or decimal strings.
QuadraticForm form_from_json(const nlohmann::json& j);
nlohmann::json form_to_json(const QuadraticForm& form);

// Integer JSON encoding: numbers below 2^53 in magnitude, strings otherwise.
Integer integer_from_json(const nlohmann::json& j);

std::string fnv1a_hex(const std::string& text);

} // namespace vinberg
