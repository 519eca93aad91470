#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::int64_t inner(const I64Matrix& g, const I64Vector& u, const I64Vector& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            s += u[i] * g[i][j] * v[j];
    return s;
}

namespace {

std::vector<std::vector<long double>> float_inverse(const I64Matrix& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long double>(g[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[p][c]))
                p = r;
        std::swap(a[p], a[c]);
        if (std::fabs(a[c][c]) < 1e-12L)
            throw std::runtime_error("singular gram");
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c)
                continue;
            const long double f = a[r][c] / a[c][c];
            for (std::size_t k = 0; k < 2 * n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    std::vector<std::vector<long double>> inv(n, std::vector<long double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j] / a[i][i];
    return inv;
}

std::int64_t gcd_all(const I64Vector& v) {
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x);
    return g;
}

} // namespace

std::map<std::pair<std::int64_t, std::int64_t>, std::vector<I64Vector>>
box_roots(const I64Matrix& g, const I64Vector& u0, std::int64_t max_s, std::int64_t max_a) {
    const std::size_t d = g.size();
    const std::int64_t q = inner(g, u0, u0);
    if (q >= 0)
        throw std::runtime_error("control vector not timelike");
    // H = G - 2 (G u0)(G u0)^T / q is positive definite, H^{-1} = G^{-1} - 2 u0 u0^T / q,
    // and x^T H x = s + 2 a^2 / |q| on the slice.
    const auto ginv = float_inverse(g);
    const long double t = static_cast<long double>(max_s) + 2.0L * max_a * max_a / static_cast<long double>(-q);
    std::vector<std::int64_t> box(d);
    for (std::size_t i = 0; i < d; ++i) {
        const long double hii = ginv[i][i] + 2.0L * u0[i] * u0[i] / static_cast<long double>(-q);
        box[i] = static_cast<std::int64_t>(std::floor(std::sqrt(std::max(0.0L, t * hii)) + 1e-6L));
    }

    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<I64Vector>> out;
    I64Vector x(d);
    for (std::size_t i = 0; i < d; ++i)
        x[i] = -box[i];
    while (true) {
        const std::int64_t s = inner(g, x, x);
        if (s > 0 && s <= max_s) {
            std::int64_t p = 0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    p += x[i] * g[i][j] * u0[j];
            const std::int64_t a = -p;
            if (a >= 0 && a <= max_a && gcd_all(x) == 1) {
                bool crys = true;
                for (std::size_t i = 0; i < d && crys; ++i) {
                    std::int64_t gx = 0;
                    for (std::size_t j = 0; j < d; ++j)
                        gx += g[i][j] * x[j];
                    crys = (2 * gx) % s == 0;
                }
                if (crys)
                    out[{s, a}].push_back(x);
            }
        }
        std::size_t k = d;
        while (k > 0) {
            --k;
            if (x[k] < box[k]) {
                ++x[k];
                break;
            }
            x[k] = -box[k];
            if (k == 0) {
                for (auto& [key, list] : out)
                    std::sort(list.begin(), list.end());
                return out;
            }
        }
    }
}

namespace {

mpz_class det(std::vector<ZVector> m) {
    // Laplace expansion along the first row; sizes here are at most 5.
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    mpz_class total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<ZVector> minor;
        for (std::size_t r = 1; r < n; ++r) {
            ZVector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        const mpz_class term = m[0][c] * det(minor);
        total += (c % 2 == 0) ? term : mpz_class(-term);
    }
    return total;
}

ZVector make_primitive(ZVector v) {
    mpz_class g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    if (g != 0)
        for (auto& x : v)
            x /= g;
    return v;
}

} // namespace

std::size_t rank(std::vector<ZVector> rows, std::size_t d) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const mpz_class f = rows[i][c], h = rows[r][c];
            for (std::size_t k = 0; k < d; ++k)
                rows[i][k] = rows[i][k] * h - rows[r][k] * f;
        }
        ++r;
    }
    return r;
}

std::vector<ZVector> subset_rays(const std::vector<ZVector>& constraints, std::size_t d) {
    std::set<ZVector> found;
    const std::size_t m = constraints.size();
    if (d == 1) {
        for (int sign : {1, -1}) {
            bool ok = true;
            for (const auto& c : constraints)
                ok = ok && c[0] * sign <= 0;
            if (ok)
                found.insert(ZVector{sign});
        }
        return {found.begin(), found.end()};
    }
    if (m + 1 < d)
        return {};
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(d - 1), true);
    do {
        std::vector<ZVector> sub;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i])
                sub.push_back(constraints[i]);
        if (rank(sub, d) != d - 1)
            continue;
        // Generalized cross product: v_k = (-1)^k det(sub without column k).
        ZVector v(d);
        for (std::size_t k = 0; k < d; ++k) {
            std::vector<ZVector> minor;
            for (const auto& row : sub) {
                ZVector r;
                for (std::size_t j = 0; j < d; ++j)
                    if (j != k)
                        r.push_back(row[j]);
                minor.push_back(r);
            }
            v[k] = det(minor);
            if (k % 2 == 1)
                v[k] = -v[k];
        }
        v = make_primitive(v);
        for (int sign : {1, -1}) {
            ZVector w = v;
            for (auto& x : w)
                x *= sign;
            bool ok = true;
            for (const auto& c : constraints) {
                mpz_class p = 0;
                for (std::size_t j = 0; j < d; ++j)
                    p += c[j] * w[j];
                if (p > 0) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                found.insert(w);
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {found.begin(), found.end()};
}

long double ball_volume(int n, long double r) {
    const long double sphere =
        2.0L * std::pow(3.14159265358979323846264338327950288L, n / 2.0L) / std::tgamma(n / 2.0L);
    const int steps = 20000;
    const long double h = r / steps;
    long double sum = 0;
    for (int i = 0; i <= steps; ++i) {
        const long double w = (i == 0 || i == steps) ? 1 : (i % 2 ? 4 : 2);
        sum += w * std::pow(std::sinh(i * h), static_cast<long double>(n - 1));
    }
    return sphere * sum * h / 3;
}

namespace {

bool lex_pos(const I64Vector& v) {
    for (auto x : v)
        if (x != 0)
            return x > 0;
    return false;
}

// Whether target = sum c_i basis_i with rational c_i >= 0, by exact
// elimination on the (small) system basis^T c = target.
bool nonneg_combination(const std::vector<I64Vector>& basis, const I64Vector& target) {
    const std::size_t k = basis.size(), d = target.size();
    std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(k + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = basis[j][i];
        a[i][k] = target[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < d; ++c) {
        std::size_t p = r;
        while (p < d && a[p][c] == 0)
            ++p;
        if (p == d)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < d; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j <= k; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < d; ++i)
        if (a[i][k] != 0)
            return false;
    if (pivot_col.size() != k)
        return false; // the chamber basis is always independent
    for (std::size_t i = 0; i < r; ++i)
        if (a[i][k] / a[i][pivot_col[i]] < 0)
            return false;
    return true;
}

} // namespace

BruteVinberg vinberg(const I64Matrix& g, const I64Vector& u0, std::int64_t max_a) {
    const std::size_t d = g.size();
    // Norm of any root divides 2 det(G); scanning up to 2|det| is a safe superset.
    std::vector<ZVector> rows;
    for (const auto& r : g)
        rows.push_back(ZVector(r.begin(), r.end()));
    const std::int64_t det_g = std::abs(det(rows).get_si());
    const auto all = box_roots(g, u0, 2 * det_g, max_a);

    std::vector<I64Vector> positive;
    for (const auto& [key, list] : all)
        if (key.second == 0)
            for (const auto& e : list)
                if (lex_pos(e))
                    positive.push_back(e);

    BruteVinberg out;
    // Chamber: the smallest subset of positive roots, pairwise non-acute, that
    // spans every positive root with non-negative coefficients.
    std::vector<I64Vector> chamber;
    const std::size_t p = positive.size();
    bool done = p == 0;
    for (std::size_t size = 1; size < d && !done; ++size) {
        std::vector<bool> pick(p, false);
        if (size > p)
            break;
        std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
        do {
            std::vector<I64Vector> sub;
            for (std::size_t i = 0; i < p; ++i)
                if (pick[i])
                    sub.push_back(positive[i]);
            bool ok = true;
            for (std::size_t i = 0; i < sub.size() && ok; ++i)
                for (std::size_t j = i + 1; j < sub.size() && ok; ++j)
                    ok = inner(g, sub[i], sub[j]) <= 0;
            for (const auto& r : positive)
                ok = ok && nonneg_combination(sub, r);
            if (ok) {
                chamber = sub;
                done = true;
                break;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    out.roots = chamber;
    out.chamber = chamber.size();

    struct Cand {
        std::int64_t a, s;
        I64Vector e;
    };
    std::vector<Cand> cands;
    for (const auto& [key, list] : all)
        if (key.second > 0)
            for (const auto& e : list)
                cands.push_back({key.second, key.first, e});
    const std::int64_t q = -inner(g, u0, u0);
    // Order by a^2/(s q), then s, then lexicographically.
    std::sort(cands.begin(), cands.end(), [&](const Cand& x, const Cand& y) {
        const mpz_class lx = mpz_class(x.a) * x.a * y.s, ly = mpz_class(y.a) * y.a * x.s;
        if (lx != ly)
            return lx < ly;
        if (x.s != y.s)
            return x.s < y.s;
        return x.e < y.e;
    });
    (void)q;

    auto finite_test = [&](BruteVinberg& st) {
        std::vector<ZVector> cons;
        for (const auto& e : st.roots) {
            ZVector c(d);
            for (std::size_t i = 0; i < d; ++i) {
                std::int64_t s = 0;
                for (std::size_t j = 0; j < d; ++j)
                    s += g[i][j] * e[j];
                c[i] = s;
            }
            cons.push_back(c);
        }
        if (rank(cons, d) < d)
            return false;
        const auto rays = subset_rays(cons, d);
        if (rays.empty())
            return false;
        st.proper = st.ideal = 0;
        for (const auto& v : rays) {
            mpz_class n = 0, pu = 0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    n += v[i] * g[i][j] * v[j];
                    pu += v[i] * g[i][j] * u0[j];
                }
            if (n > 0 || pu > 0)
                return false;
            (n < 0 ? st.proper : st.ideal)++;
        }
        return true;
    };

    std::size_t i = 0;
    while (i < cands.size() && !out.finite) {
        std::size_t j = i;
        const auto same_key = [&](const Cand& x, const Cand& y) {
            return mpz_class(x.a) * x.a * y.s == mpz_class(y.a) * y.a * x.s;
        };
        bool accepted = false;
        while (j < cands.size() && same_key(cands[i], cands[j])) {
            bool ok = true;
            for (const auto& r : out.roots)
                ok = ok && inner(g, r, cands[j].e) <= 0;
            if (ok) {
                out.roots.push_back(cands[j].e);
                accepted = true;
            }
            ++j;
        }
        if (accepted)
            out.finite = finite_test(out);
        i = j;
    }
    return out;
}

} // namespace oracle
