#include "krawtchouk/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace krawtchouk {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("DenseMatrix: entry count does not match dimensions");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<Rational>& diag) {
    DenseMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix addition: dimension mismatch");
    DenseMatrix result(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) result.entries_[k] = entries_[k] + other.entries_[k];
    return result;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix subtraction: dimension mismatch");
    DenseMatrix result(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) result.entries_[k] = entries_[k] - other.entries_[k];
    return result;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: inner dimensions disagree");
    DenseMatrix result(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& b = other(k, j);
                if (b != 0) result(i, j) += a * b;
            }
        }
    }
    return result;
}

DenseMatrix DenseMatrix::operator*(const Rational& scalar) const {
    DenseMatrix result(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) result.entries_[k] = entries_[k] * scalar;
    return result;
}

DenseMatrix DenseMatrix::power(unsigned exponent) const {
    if (!is_square()) throw std::invalid_argument("matrix power: matrix is not square");
    DenseMatrix result = identity(rows_);
    for (unsigned i = 0; i < exponent; ++i) result = result * (*this);
    return result;
}

std::vector<Rational> DenseMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply: vector length does not match columns");
    std::vector<Rational> result(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) result[i] += (*this)(i, j) * v[j];
    return result;
}

std::vector<Rational> DenseMatrix::apply_left(const std::vector<Rational>& v) const {
    if (v.size() != rows_) throw std::invalid_argument("matrix apply_left: vector length does not match rows");
    std::vector<Rational> result(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[i] != 0) result[j] += v[i] * (*this)(i, j);
    return result;
}

bool DenseMatrix::is_zero() const {
    for (const Rational& e : entries_)
        if (e != 0) return false;
    return true;
}

std::size_t DenseMatrix::nonzero_count() const {
    std::size_t count = 0;
    for (const Rational& e : entries_)
        if (e != 0) ++count;
    return count;
}

std::vector<Rational> DenseMatrix::diagonal_entries() const {
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    std::vector<Rational> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = (*this)(i, i);
    return diag;
}

Rational DenseMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant: matrix is not square");
    DenseMatrix work = *this;
    const std::size_t n = rows_;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
            det = -det;
        }
        det *= work(col, col);
        const Rational inv_pivot = Rational(1) / work(col, col);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (work(row, col) == 0) continue;
            const Rational factor = work(row, col) * inv_pivot;
            for (std::size_t j = col; j < n; ++j) work(row, j) -= factor * work(col, j);
        }
    }
    return det;
}

DenseMatrix DenseMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = rows_;
    DenseMatrix work = *this;
    DenseMatrix result = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse: matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(result(pivot, j), result(col, j));
            }
        }
        const Rational inv_pivot = Rational(1) / work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) *= inv_pivot;
            result(col, j) *= inv_pivot;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || work(row, col) == 0) continue;
            const Rational factor = work(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                work(row, j) -= factor * work(col, j);
                result(row, j) -= factor * result(col, j);
            }
        }
    }
    return result;
}

}  // namespace krawtchouk
