#pragma once

#include "vc1/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace vc1 {

/// Dense matrix over the rationals. All eliminations are exact; there is no
/// floating point anywhere in this module.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_symmetric() const
    {
        if (rows_ != cols_)
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

namespace detail {

// Row-reduces a copy of m to reduced row echelon form. Returns the pivot
// column of each pivot row; the reduced matrix is written back to m.
inline std::vector<std::size_t> rref(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(row, j));
        Rational inv = m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(const Matrix& m)
{
    Matrix w = m;
    return detail::rref(w).size();
}

/// Exact basis of the right kernel; empty when the matrix has full column rank.
inline std::vector<std::vector<Rational>> nullspace(const Matrix& m)
{
    Matrix w = m;
    std::vector<std::size_t> pivots = detail::rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -w(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational det(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: matrix not square");
    Matrix w = m;
    const std::size_t n = w.rows();
    Rational d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w(piv, col) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(w(piv, j), w(col, j));
            d = -d;
        }
        d *= w(col, col);
        Rational inv = w(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w(i, col) == 0)
                continue;
            Rational f = w(i, col) / inv;
            for (std::size_t j = col; j < n; ++j)
                w(i, j) -= f * w(col, j);
        }
    }
    return d;
}

/// Solves M v = b for square nonsingular M; throws on a singular matrix.
inline std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& b)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("solve: matrix not square");
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: size mismatch");
    const std::size_t n = m.rows();
    Matrix w(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            w(i, j) = m(i, j);
        w(i, n) = b[i];
    }
    std::vector<std::size_t> pivots = detail::rref(w);
    if (pivots.size() != n || pivots.back() == n)
        throw std::domain_error("solve: singular matrix");
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = w(i, n);
    return v;
}

} // namespace vc1
