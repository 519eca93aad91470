#include "vinberg/chamber.hpp"

#include <algorithm>

namespace vinberg {

bool is_lex_positive(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0)
            return x > 0;
    return false;
}

namespace {

// r = alpha p + beta q with alpha, beta > 0.
bool positive_combination(const IntVector& r, const IntVector& p, const IntVector& q) {
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Integer det = p[i] * q[j] - p[j] * q[i];
            if (det == 0)
                continue;
            const Rational alpha = make_rational(r[i] * q[j] - r[j] * q[i], det);
            const Rational beta = make_rational(p[i] * r[j] - p[j] * r[i], det);
            if (alpha <= 0 || beta <= 0)
                return false;
            for (std::size_t l = 0; l < n; ++l)
                if (alpha * p[l] + beta * q[l] != r[l])
                    return false;
            return true;
        }
    return false; // p and q proportional
}

} // namespace

ChamberSystem simple_system(const QuadraticForm& form, const ControlVector& u0, const std::vector<Root>& roots) {
    std::vector<const Root*> positive;
    for (const auto& r : roots) {
        if (form.inner(r.e, u0.vector()) != 0)
            throw Error("not orthogonal", "chamber input root is not orthogonal to the control vector");
        if (is_lex_positive(r.e))
            positive.push_back(&r);
    }
    std::sort(positive.begin(), positive.end(), [](const Root* a, const Root* b) { return lex_less(a->e, b->e); });

    ChamberSystem out;
    for (const Root* r : positive) {
        bool decomposable = false;
        for (std::size_t i = 0; i < positive.size() && !decomposable; ++i) {
            if (positive[i] == r)
                continue;
            for (std::size_t j = i + 1; j < positive.size() && !decomposable; ++j) {
                if (positive[j] == r)
                    continue;
                decomposable = positive_combination(r->e, positive[i]->e, positive[j]->e);
            }
        }
        if (!decomposable)
            out.simple_roots.push_back(*r);
    }
    return out;
}

} // namespace vinberg
