#pragma once

#include "ctrace/rational.hpp"

#include <cstddef>
#include <vector>

namespace ctrace::qlinalg {

using QVector = std::vector<Rational>;

/// Dense matrix over the rationals, row-major. Zero-dimensional shapes
/// (0 x n, n x 0, 0 x 0) are valid.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    /// Throws InputError on ragged rows.
    static QMatrix from_rows(const std::vector<QVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    QMatrix transpose() const;

    /// Matrix-vector product; throws InputError when length(v) != cols.
    QVector apply(const QVector& v) const;

    /// Matrix product; throws InputError on inner-dimension mismatch.
    QMatrix operator*(const QMatrix& other) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    /// Row-space dimension, computed by fraction-free (Bareiss) elimination
    /// over the integers after clearing row denominators.
    std::size_t rank() const;

    /// Basis of the right kernel from the reduced-echelon parametrization:
    /// one vector per free column, free columns in ascending order, the free
    /// coordinate set to 1. Vectors satisfy apply(v) == 0 exactly.
    std::vector<QVector> kernel_basis() const;

    /// Reduced row echelon form; pivot columns (ascending) are appended to
    /// *pivot_cols when provided. Pivot choice: first nonzero entry scanning
    /// columns left to right, rows top to bottom.
    QMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

} // namespace ctrace::qlinalg
