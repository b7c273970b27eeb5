#ifndef CUBINV_MATRIX_HPP
#define CUBINV_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace cubinv {

/// Dense matrix of exact rationals; all elimination is exact, so singularity
/// detection is exact as well.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("matrix product shape mismatch");
        RatMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Rational determinant() const {
        if (rows_ != cols_) throw dimension_mismatch("determinant of non-square matrix");
        RatMatrix m = *this;
        Rational det(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
            if (pivot == rows_) return Rational(0);
            if (pivot != col) {
                m.swap_rows(pivot, col);
                det = -det;
            }
            det *= m.at(col, col);
            for (std::size_t r = col + 1; r < rows_; ++r) {
                if (m.at(r, col).is_zero()) continue;
                Rational factor = m.at(r, col) / m.at(col, col);
                for (std::size_t c = col; c < cols_; ++c)
                    m.at(r, c) -= factor * m.at(col, c);
            }
        }
        return det;
    }

    /// Unique exact solution of A x = b; throws singular_matrix when A is
    /// singular, dimension_mismatch when shapes disagree.
    std::vector<Rational> solve(const std::vector<Rational>& b) const {
        if (rows_ != cols_) throw dimension_mismatch("solve requires a square matrix");
        if (b.size() != rows_) throw dimension_mismatch("solve: rhs length != rows");
        RatMatrix m = *this;
        std::vector<Rational> rhs = b;
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
            if (pivot == rows_) throw singular_matrix("singular system in solve");
            if (pivot != col) {
                m.swap_rows(pivot, col);
                std::swap(rhs[pivot], rhs[col]);
            }
            for (std::size_t r = col + 1; r < rows_; ++r) {
                if (m.at(r, col).is_zero()) continue;
                Rational factor = m.at(r, col) / m.at(col, col);
                for (std::size_t c = col; c < cols_; ++c)
                    m.at(r, c) -= factor * m.at(col, c);
                rhs[r] -= factor * rhs[col];
            }
        }
        std::vector<Rational> x(cols_, Rational(0));
        for (std::size_t i = cols_; i-- > 0;) {
            Rational acc = rhs[i];
            for (std::size_t j = i + 1; j < cols_; ++j) acc -= m.at(i, j) * x[j];
            x[i] = acc / m.at(i, i);
        }
        return x;
    }

    RatMatrix inverse() const {
        if (rows_ != cols_) throw dimension_mismatch("inverse of non-square matrix");
        RatMatrix m = *this;
        RatMatrix inv = identity(rows_);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
            if (pivot == rows_) throw singular_matrix("matrix not invertible");
            if (pivot != col) {
                m.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            Rational p = m.at(col, col);
            for (std::size_t c = 0; c < cols_; ++c) {
                m.at(col, c) /= p;
                inv.at(col, c) /= p;
            }
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == col || m.at(r, col).is_zero()) continue;
                Rational factor = m.at(r, col);
                for (std::size_t c = 0; c < cols_; ++c) {
                    m.at(r, c) -= factor * m.at(col, c);
                    inv.at(r, c) -= factor * inv.at(col, c);
                }
            }
        }
        return inv;
    }

private:
    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }

    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

} // namespace cubinv

#endif
