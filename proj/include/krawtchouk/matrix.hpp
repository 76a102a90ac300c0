#pragma once

#include <cstddef>
#include <vector>

#include "krawtchouk/rational.hpp"

namespace krawtchouk {

/// Row-major dense matrix of exact rationals.
///
/// All operations are exact; there is no floating point anywhere near this
/// type. Dimension mismatches throw std::invalid_argument.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(const std::vector<Rational>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const DenseMatrix& other) const = default;

    DenseMatrix transpose() const;
    DenseMatrix operator+(const DenseMatrix& other) const;
    DenseMatrix operator-(const DenseMatrix& other) const;
    DenseMatrix operator*(const DenseMatrix& other) const;
    DenseMatrix operator*(const Rational& scalar) const;

    /// M^k by repeated multiplication; M must be square.
    DenseMatrix power(unsigned exponent) const;

    /// Matrix-vector product M*v.
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    /// Row-vector product v^T * M.
    std::vector<Rational> apply_left(const std::vector<Rational>& v) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    /// Number of nonzero entries; the "defect norm" used by identity checks.
    std::size_t nonzero_count() const;

    std::vector<Rational> diagonal_entries() const;

    /// Exact determinant via fraction-free elimination on a working copy.
    Rational determinant() const;

    /// Exact inverse via Gauss-Jordan; throws std::domain_error when singular.
    DenseMatrix inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

}  // namespace krawtchouk
