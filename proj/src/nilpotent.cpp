#include "krawtchouk/nilpotent.hpp"

#include <stdexcept>

namespace krawtchouk {

DenseMatrix poly_of_nilpotent(std::span<const Rational> coeffs, const DenseMatrix& m,
                              unsigned nilpotency_bound) {
    if (!m.is_square()) throw std::invalid_argument("poly_of_nilpotent: matrix is not square");

    DenseMatrix result(m.rows(), m.cols());
    DenseMatrix power = DenseMatrix::identity(m.rows());
    for (unsigned k = 0; k < nilpotency_bound; ++k) {
        if (k < coeffs.size() && coeffs[k] != 0) result = result + power * coeffs[k];
        power = power * m;
    }
    if (!power.is_zero())
        throw std::invalid_argument("poly_of_nilpotent: matrix is not nilpotent at the stated bound");
    return result;
}

DenseMatrix poly_of_nilpotent(const TruncatedSeries& series, const DenseMatrix& m,
                              unsigned nilpotency_bound) {
    return poly_of_nilpotent(
        std::span<const Rational>(series.coefficients().data(), series.coefficients().size()), m,
        nilpotency_bound);
}

}  // namespace krawtchouk
