#pragma once

#include "vinberg/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace vinberg {

// Dense row-major matrix over an exact scalar.
template <typename T> class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> row_vector(std::size_t i) const {
        auto r = row(i);
        return {r.begin(), r.end()};
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix from_rows(const std::vector<IntVector>& rows);
RatMatrix to_rational(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

// Bareiss fraction-free determinant.
Integer determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank_of_rows(const std::vector<IntVector>& rows, std::size_t width);

// Exact inverse; throws Error("degenerate") when singular.
RatMatrix inverse(const RatMatrix& m);

// Integer basis (primitive vectors) of the right null space {x : m x = 0}.
std::vector<IntVector> null_space(const IntMatrix& m);

// Divides by the gcd of the entries. Zero vector throws Error("zero").
IntVector primitive(const IntVector& v);

// Clears denominators and makes the result primitive; sign is preserved.
IntVector primitive(const RatVector& v);

} // namespace vinberg
