#include "ctrace/matrix.hpp"

#include "ctrace/errors.hpp"

#include <gmpxx.h>

#include <sstream>

namespace ctrace::qlinalg {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

QVector QMatrix::apply(const QVector& v) const {
    if (v.size() != cols_)
        throw InputError("matrix-vector shape mismatch: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " applied to length " + std::to_string(v.size()));
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols_; ++j)
            acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_)
        throw InputError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " * " + std::to_string(other.rows_) + "x" +
                         std::to_string(other.cols_));
    QMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += at(i, k) * other.at(k, j);
        }
    return out;
}

std::size_t QMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0)
        return 0;

    // Clear denominators row by row (rank-preserving), then run fraction-free
    // elimination over the integers. Intermediate entries are minors of the
    // scaled matrix, so each division below is exact.
    std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
        mpz_class row_lcm(1);
        for (std::size_t j = 0; j < cols_; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
                    at(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < cols_; ++j)
            m[i][j] = at(i, j).numerator() * (row_lcm / at(i, j).denominator());
    }

    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows_)
            continue;
        std::swap(m[r], m[pivot]);

        for (std::size_t i = r + 1; i < rows_; ++i) {
            for (std::size_t j = c + 1; j < cols_; ++j) {
                mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0)
                    throw Error("fraction-free elimination produced an inexact division");
                m[i][j] = q;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

QMatrix QMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
    QMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && m.at(pivot, c).is_zero())
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m.at(r, j), m.at(pivot, j));

        const Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < cols_; ++j)
            m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            const Rational factor = m.at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                m.at(i, j) -= factor * m.at(r, j);
        }
        if (pivot_cols)
            pivot_cols->push_back(c);
        ++r;
    }
    return m;
}

std::vector<QVector> QMatrix::kernel_basis() const {
    std::vector<std::size_t> pivots;
    const QMatrix r = rref(&pivots);

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f])
            continue;
        QVector v(cols_);
        v[f] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j == 0 ? "" : " ") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace ctrace::qlinalg
