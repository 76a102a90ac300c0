#pragma once

#include <span>

#include "krawtchouk/matrix.hpp"
#include "krawtchouk/series.hpp"

namespace krawtchouk {

/// Evaluates a truncated power series at a nilpotent matrix:
/// sum_{k < nilpotency_bound} coeffs[k] * M^k.
///
/// M must be square and satisfy M^nilpotency_bound = 0; the nilpotency is
/// verified and its failure throws std::invalid_argument. Coefficients past
/// the end of `coeffs` are treated as zero, which is harmless because the
/// corresponding powers of M vanish anyway when coeffs covers the bound.
DenseMatrix poly_of_nilpotent(std::span<const Rational> coeffs, const DenseMatrix& m,
                              unsigned nilpotency_bound);

DenseMatrix poly_of_nilpotent(const TruncatedSeries& series, const DenseMatrix& m,
                              unsigned nilpotency_bound);

}  // namespace krawtchouk
