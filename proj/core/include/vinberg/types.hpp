#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace vinberg {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// A vector in the ambient lattice Z^{n+1}; its pairing comes from the form.
using LorentzVector = IntVector;

// Every failure carries a short machine-readable code ("shape", "degenerate",
// ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
    // always "p/q", also for integral values
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text);

Integer gcd_of(const IntVector& v);

// Floor and ceiling of a rational, exact.
Integer floor_of(const Rational& x);
Integer ceil_of(const Rational& x);

// Lexicographic comparison of integer tuples (the canonical order everywhere).
bool lex_less(const IntVector& a, const IntVector& b);

} // namespace vinberg
