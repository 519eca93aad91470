#include "vinberg/linalg.hpp"

#include <algorithm>
#include <utility>

namespace vinberg {

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0)
        throw Error("parse", "not a rational number: '" + text + "'");
    r.canonicalize();
    return r;
}

Integer gcd_of(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Integer floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

bool lex_less(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntMatrix from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty())
        return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw Error("shape", "ragged matrix rows");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j);
    return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw Error("shape", "matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
    if (a.cols() != v.size())
        throw Error("shape", "matrix-vector dimension mismatch");
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        out[i] = dot(a.row(i), v);
    return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.size() != b.size())
        throw Error("shape", "dot product of vectors with different lengths");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Integer determinant(const IntMatrix& input) {
    if (input.rows() != input.cols())
        throw Error("shape", "determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// Fraction-free row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(IntMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(r, j), m(p, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Integer f = m(i, c), g = m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = g * m(i, j) - f * m(r, j);
            Integer h = 0;
            for (std::size_t j = 0; j < m.cols(); ++j)
                mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), m(i, j).get_mpz_t());
            if (h > 1)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), h.get_mpz_t());
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const IntMatrix& m) {
    IntMatrix w = m;
    return echelon(w).size();
}

std::size_t rank_of_rows(const std::vector<IntVector>& rows, std::size_t width) {
    if (rows.empty())
        return 0;
    IntMatrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    return rank(m);
}

RatMatrix inverse(const RatMatrix& input) {
    if (input.rows() != input.cols())
        throw Error("shape", "inverse of a non-square matrix");
    const std::size_t n = input.rows();
    RatMatrix a = input;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw Error("degenerate", "matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(c, j), a(p, j));
                std::swap(inv(c, j), inv(p, j));
            }
        Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0)
                continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::vector<IntVector> null_space(const IntMatrix& input) {
    IntMatrix m = input;
    const auto pivots = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<IntVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        // Row r of the echelon form reads m(r,p_r) x_{p_r} + m(r,free) x_free = 0.
        RatVector x(m.cols());
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = make_rational(-m(r, free), m(r, pivots[r]));
        basis.push_back(primitive(x));
    }
    return basis;
}

IntVector primitive(const IntVector& v) {
    Integer g = gcd_of(v);
    if (g == 0)
        throw Error("zero", "cannot normalize the zero vector");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return out;
}

IntVector primitive(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        scaled[i] = v[i].get_num() * (l / v[i].get_den());
    return primitive(scaled);
}

} // namespace vinberg
