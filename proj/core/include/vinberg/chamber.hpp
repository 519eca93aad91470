#pragma once

#include "vinberg/roots.hpp"

#include <vector>

namespace vinberg {

// Simple roots of the finite reflection group fixing the control point.
// Pairwise products are non-positive; at most dim roots.
struct ChamberSystem {
    std::vector<Root> simple_roots;

    std::size_t size() const noexcept { return simple_roots.size(); }
};

// A root is positive when its first nonzero coordinate is positive.
bool is_lex_positive(const IntVector& v);

// Positive roots that are not a positive rational combination of two other
// positive roots. Throws Error("not orthogonal") if some root has nonzero
// product with u0.
ChamberSystem simple_system(const QuadraticForm& form, const ControlVector& u0, const std::vector<Root>& roots);

inline ChamberSystem stabilizer_chamber(const QuadraticForm& form, const ControlVector& u0) {
    return simple_system(form, u0, stabilizer_roots(form, u0));
}

} // namespace vinberg
