#include "vinberg/roots.hpp"

#include <algorithm>
#include <functional>

namespace vinberg {

LorentzVector normalize(const IntVector& v) {
    return primitive(v);
}

bool is_crystallographic(const QuadraticForm& form, const LorentzVector& e) {
    const Integer s = form.norm(e);
    if (s <= 0)
        return false;
    for (const auto& c : form.covector(e)) {
        const Integer twice = 2 * c;
        if (!mpz_divisible_p(twice.get_mpz_t(), s.get_mpz_t()))
            return false;
    }
    return true;
}

Integer discriminant_exponent(const QuadraticForm& form) {
    const Integer det = determinant(form.gram());
    const RatMatrix inv = inverse(to_rational(form.gram()));
    // adj(G) = det * G^{-1}; the largest invariant factor is |det| / gcd(adj).
    Integer g = 0;
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            Rational entry = inv(i, j) * det;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), entry.get_num_mpz_t());
        }
    return abs(det) / g;
}

NormSet admissible_norms(const QuadraticForm& form) {
    const Integer bound = 2 * discriminant_exponent(form);
    NormSet small, large;
    for (Integer d = 1; d * d <= bound; ++d) {
        if (!mpz_divisible_p(bound.get_mpz_t(), d.get_mpz_t()))
            continue;
        small.push_back(d);
        if (d * d != bound)
            large.push_back(bound / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

bool is_square(const Integer& x, Integer& root) {
    if (x < 0)
        return false;
    mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
    return root * root == x;
}

// sqrt(r) for r >= 0 when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& out) {
    Integer n, d;
    if (!is_square(r.get_num(), n) || !is_square(r.get_den(), d))
        return false;
    out = make_rational(n, d);
    return true;
}

// Integer upper bound on sqrt(r) for r >= 0.
Integer sqrt_ceiling(const Rational& r) {
    Integer root;
    const Integer f = floor_of(r);
    mpz_sqrt(root.get_mpz_t(), f.get_mpz_t());
    return root + 1;
}

struct Slice {
    std::size_t pivot;
    std::vector<std::size_t> free;
    RatMatrix basis; // ambient x free
    RatVector offset;
};

// x = offset + basis * y parameterizes {x : c.x = -a}.
Slice parameterize(const IntVector& c, const Integer& a) {
    Slice sl;
    sl.pivot = 0;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (abs(c[i]) > abs(c[sl.pivot]))
            sl.pivot = i;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (i != sl.pivot)
            sl.free.push_back(i);
    const Integer& cp = c[sl.pivot];
    sl.offset.assign(c.size(), Rational(0));
    sl.offset[sl.pivot] = make_rational(-a, cp);
    sl.basis = RatMatrix(c.size(), sl.free.size());
    for (std::size_t k = 0; k < sl.free.size(); ++k) {
        sl.basis(sl.free[k], k) = 1;
        sl.basis(sl.pivot, k) = make_rational(-c[sl.free[k]], cp);
    }
    return sl;
}

} // namespace

std::vector<Root> enumerate_roots_at(const QuadraticForm& form, const ControlVector& u0, const Integer& s,
                                     const Integer& a) {
    if (s <= 0)
        throw Error("norm", "root norm must be positive, got " + s.get_str());
    if (a < 0)
        throw Error("level", "level a = -(e,u0) must be non-negative, got " + a.get_str());
    if (u0.vector().size() != form.ambient())
        throw Error("shape", "control vector does not match the form");

    const IntVector c = form.covector(u0.vector());
    const Slice sl = parameterize(c, a);
    const std::size_t ambient = form.ambient();
    const std::size_t k = sl.free.size();
    const RatMatrix g = to_rational(form.gram());

    // Restricted form Q(y) = y^T A y + 2 b^T y + c0.
    RatMatrix gm(ambient, k);
    for (std::size_t i = 0; i < ambient; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < ambient; ++l)
                if (g(i, l) != 0 && sl.basis(l, j) != 0)
                    gm(i, j) += g(i, l) * sl.basis(l, j);
    RatMatrix A(k, k);
    RatVector b(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < ambient; ++l)
                if (sl.basis(l, i) != 0)
                    A(i, j) += sl.basis(l, i) * gm(l, j);
        for (std::size_t l = 0; l < ambient; ++l)
            if (sl.offset[l] != 0)
                b[i] += gm(l, i) * sl.offset[l];
    }
    Rational c0 = 0;
    for (std::size_t i = 0; i < ambient; ++i)
        for (std::size_t j = 0; j < ambient; ++j)
            c0 += sl.offset[i] * g(i, j) * sl.offset[j];

    // Center y* = -A^{-1} b and minimum value of Q.
    const RatMatrix ainv = inverse(A);
    RatVector center(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            center[i] -= ainv(i, j) * b[j];
    Rational qmin = c0;
    for (std::size_t i = 0; i < k; ++i)
        qmin += b[i] * center[i];
    const Rational radius = Rational(s) - qmin;
    if (radius < 0)
        return {};

    // A = L D L^T with L unit lower triangular.
    RatMatrix L = RatMatrix::identity(k);
    RatVector d(k);
    for (std::size_t j = 0; j < k; ++j) {
        d[j] = A(j, j);
        for (std::size_t m = 0; m < j; ++m)
            d[j] -= L(j, m) * L(j, m) * d[m];
        if (d[j] <= 0)
            throw Error("degenerate", "form is not positive definite on the control slice");
        for (std::size_t i = j + 1; i < k; ++i) {
            Rational v = A(i, j);
            for (std::size_t m = 0; m < j; ++m)
                v -= L(i, m) * L(j, m) * d[m];
            L(i, j) = v / d[j];
        }
    }

    std::vector<Root> found;
    IntVector y(k);
    RatVector z(k); // y - center

    auto emit = [&]() {
        RatVector x = sl.offset;
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < ambient; ++l)
                if (sl.basis(l, j) != 0)
                    x[l] += sl.basis(l, j) * y[j];
        IntVector xi(ambient);
        for (std::size_t l = 0; l < ambient; ++l) {
            if (x[l].get_den() != 1)
                return;
            xi[l] = x[l].get_num();
        }
        if (gcd_of(xi) != 1)
            return;
        if (form.norm(xi) != s || form.inner(xi, u0.vector()) != -a)
            return;
        if (!is_crystallographic(form, xi))
            return;
        found.push_back(Root{std::move(xi), s, a});
    };

    // Coordinates are fixed from the last one down; term i of the LDL sum
    // involves z_i and the already fixed z_j, j > i.
    std::function<void(std::size_t, const Rational&)> search = [&](std::size_t i, const Rational& rem) {
        Rational shift = 0;
        for (std::size_t j = i + 1; j < k; ++j)
            shift += L(j, i) * z[j];
        const Rational mid = center[i] - shift;
        const Rational r = rem / d[i];
        if (i == 0) {
            // Last coordinate: solve d_0 (y_0 - mid)^2 = rem exactly.
            Rational root;
            if (!rational_sqrt(r, root))
                return;
            const Rational lo = mid - root, hi = mid + root;
            for (const Rational* cand : {&lo, &hi}) {
                if (cand->get_den() == 1) {
                    y[0] = cand->get_num();
                    z[0] = *cand - center[0];
                    emit();
                }
                if (root == 0)
                    break;
            }
            return;
        }
        const Integer span = sqrt_ceiling(r);
        const Integer lo = floor_of(mid) - span;
        const Integer hi = ceil_of(mid) + span;
        for (Integer yi = lo; yi <= hi; ++yi) {
            const Rational t = Rational(yi) - mid;
            const Rational used = t * t;
            if (used > r)
                continue;
            y[i] = yi;
            z[i] = Rational(yi) - center[i];
            search(i - 1, rem - d[i] * used);
        }
    };

    if (k == 0) {
        if (radius == 0)
            emit();
    } else {
        search(k - 1, radius);
    }

    std::sort(found.begin(), found.end(), [](const Root& l, const Root& r) { return lex_less(l.e, r.e); });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::vector<Root> stabilizer_roots(const QuadraticForm& form, const ControlVector& u0) {
    std::vector<Root> all;
    for (const auto& s : admissible_norms(form)) {
        auto part = enumerate_roots_at(form, u0, s, 0);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return all;
}

} // namespace vinberg
