#pragma once

#include "vinberg/forms.hpp"

#include <vector>

namespace vinberg {

/// A primitive crystallographic vector with positive norm.
///
/// `level` is the non-negative integer a = -(e, u0) for the control vector the
/// root was produced against; chamber roots have level 0.
struct Root {
    LorentzVector e;
    Integer norm;
    Integer level;

    friend bool operator==(const Root&, const Root&) = default;
};

// Sorted, duplicate-free list of candidate norms s.
using NormSet = std::vector<Integer>;

// v / gcd(v). Throws Error("zero") for the zero vector.
LorentzVector normalize(const IntVector& v);

// 2 (e, v_i) / (e, e) is integral for every basis vector v_i.
bool is_crystallographic(const QuadraticForm& form, const LorentzVector& e);

// Exponent of the discriminant group Z^{n+1}* / Z^{n+1}: the largest
// invariant factor of the Gram matrix.
Integer discriminant_exponent(const QuadraticForm& form);

// All positive divisors of 2 * discriminant_exponent(form). Every norm of a
// primitive crystallographic vector lies in this set.
NormSet admissible_norms(const QuadraticForm& form);

// Complete list of primitive crystallographic e with (e,e) = s and
// (e,u0) = -a, in lexicographic order.
//
// The slice {(x,u0) = -a} is parameterized by eliminating the coordinate with
// the largest |(G u0)_i|; the form restricted to the slice is positive definite
// and its lattice points of value s are found by exact Fincke-Pohst search on
// an LDL^T decomposition.
std::vector<Root> enumerate_roots_at(const QuadraticForm& form, const ControlVector& u0, const Integer& s,
                                     const Integer& a);

// Roots orthogonal to u0 over every admissible norm, grouped by norm and
// lexicographic within a norm. Both e and -e are present.
std::vector<Root> stabilizer_roots(const QuadraticForm& form, const ControlVector& u0);

} // namespace vinberg
