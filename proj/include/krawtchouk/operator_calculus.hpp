#pragma once

#include <vector>

#include "krawtchouk/matrix.hpp"
#include "krawtchouk/univariate.hpp"

namespace krawtchouk {

/// Polynomial in one variable, coefficients[k] multiplying x^k. Trailing
/// zeros are permitted; degree() ignores them.
struct Polynomial {
    std::vector<Rational> coefficients;

    unsigned degree() const;
    Rational evaluate(const Rational& x) const;
};

/// Matrix of differentiation on the monomial basis {1, x, ..., x^N}:
/// superdiagonal (1, 2, ..., N), zero elsewhere, nilpotent of index N+1.
/// Applying it to a coefficient vector differentiates the polynomial.
struct DerivativeMatrix {
    unsigned level = 0;  // N
    DenseMatrix matrix;  // (N+1) x (N+1)
};

DerivativeMatrix derivative_matrix(unsigned level);

/// The two operator matrices the expansion needs, both polynomials in the
/// derivative matrix: step_matrix = p e^D + q e^{-D} and sinh_matrix = sinh D.
DenseMatrix step_operator_matrix(unsigned level, const Rational& p);
DenseMatrix sinh_operator_matrix(unsigned level);

/// Krawtchouk expansion coefficients of f at level N:
///   coeffs[n] = (1/n!) (p e^D + q e^{-D})^{N-n} (sinh D)^n f |_{x=0}
/// where "at 0" reads off the constant coefficient. The result satisfies the
/// reconstruction f(N - 2j) = sum_n coeffs[n] * n! * phi(n, j) for every
/// grid column j. deg f must not exceed N.
std::vector<Rational> expansion_coefficients(const Polynomial& f, unsigned level,
                                             const Rational& p);

/// True iff the expansion coefficients up to deg f are all positive
/// (strictly, when p > 1/2) or all nonnegative (when p <= 1/2).
bool positivity_check(const Polynomial& f, unsigned level, const Rational& p);

/// Bivariate polynomial: coefficients(i, j) multiplies x^i y^j.
struct BivariatePolynomial {
    DenseMatrix coefficients;

    unsigned degree_x() const;
    unsigned degree_y() const;
    Rational evaluate(const Rational& x, const Rational& y) const;
};

/// Tensor-product expansion over the product basis K_n(x,N) K_m(y,M):
/// applies the univariate operators in each variable independently and
/// returns the (N+1) x (M+1) coefficient matrix.
DenseMatrix expansion_coefficients_2d(const BivariatePolynomial& f, unsigned level_x,
                                      unsigned level_y, const Rational& p1, const Rational& p2);

}  // namespace krawtchouk
