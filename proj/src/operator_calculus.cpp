#include "krawtchouk/operator_calculus.hpp"

#include <stdexcept>

#include "krawtchouk/nilpotent.hpp"
#include "krawtchouk/series.hpp"

namespace krawtchouk {

unsigned Polynomial::degree() const {
    for (std::size_t k = coefficients.size(); k-- > 0;)
        if (coefficients[k] != 0) return static_cast<unsigned>(k);
    return 0;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational result = 0;
    for (std::size_t k = coefficients.size(); k-- > 0;) result = result * x + coefficients[k];
    return result;
}

DerivativeMatrix derivative_matrix(unsigned level) {
    DenseMatrix m(level + 1, level + 1);
    for (unsigned k = 0; k < level; ++k) m(k, k + 1) = k + 1;
    return DerivativeMatrix{level, std::move(m)};
}

DenseMatrix step_operator_matrix(unsigned level, const Rational& p) {
    const Rational q = Rational(1) - p;
    // coefficient of D^k in p e^D + q e^{-D} is (p + (-1)^k q) / k!
    std::vector<Rational> coeffs(level + 1);
    Rational inv_fact = 1;
    for (unsigned k = 0; k <= level; ++k) {
        if (k > 0) inv_fact /= k;
        coeffs[k] = (k % 2 == 0 ? Rational(p + q) : Rational(p - q)) * inv_fact;
    }
    return poly_of_nilpotent(coeffs, derivative_matrix(level).matrix, level + 1);
}

DenseMatrix sinh_operator_matrix(unsigned level) {
    return poly_of_nilpotent(TruncatedSeries::sinh_series(level), derivative_matrix(level).matrix,
                             level + 1);
}

std::vector<Rational> expansion_coefficients(const Polynomial& f, unsigned level,
                                             const Rational& p) {
    if (f.degree() > level) throw std::domain_error("expansion_coefficients: deg f exceeds level");
    if (p <= 0 || p >= 1)
        throw std::domain_error("expansion_coefficients: p must lie strictly between 0 and 1");

    std::vector<Rational> column(f.coefficients.begin(), f.coefficients.end());
    column.resize(level + 1, Rational(0));

    const DenseMatrix step = step_operator_matrix(level, p);
    const DenseMatrix sinh_op = sinh_operator_matrix(level);

    // Apply (sinh D)^n incrementally, then the remaining step-operator power.
    std::vector<Rational> coeffs(level + 1, Rational(0));
    std::vector<Rational> sinh_applied = column;
    Rational inv_nfact = 1;
    for (unsigned n = 0; n <= level; ++n) {
        if (n > 0) {
            sinh_applied = sinh_op.apply(sinh_applied);
            inv_nfact /= n;
        }
        std::vector<Rational> result = sinh_applied;
        for (unsigned k = 0; k < level - n; ++k) result = step.apply(result);
        coeffs[n] = result[0] * inv_nfact;
    }
    return coeffs;
}

bool positivity_check(const Polynomial& f, unsigned level, const Rational& p) {
    const std::vector<Rational> coeffs = expansion_coefficients(f, level, p);
    const bool strict = p > Rational(1, 2);
    const unsigned top = f.degree();
    for (unsigned n = 0; n <= top; ++n) {
        if (strict ? coeffs[n] <= 0 : coeffs[n] < 0) return false;
    }
    return true;
}

unsigned BivariatePolynomial::degree_x() const {
    for (std::size_t i = coefficients.rows(); i-- > 0;)
        for (std::size_t j = 0; j < coefficients.cols(); ++j)
            if (coefficients(i, j) != 0) return static_cast<unsigned>(i);
    return 0;
}

unsigned BivariatePolynomial::degree_y() const {
    for (std::size_t j = coefficients.cols(); j-- > 0;)
        for (std::size_t i = 0; i < coefficients.rows(); ++i)
            if (coefficients(i, j) != 0) return static_cast<unsigned>(j);
    return 0;
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational result = 0;
    Rational x_power = 1;
    for (std::size_t i = 0; i < coefficients.rows(); ++i) {
        Rational y_power = 1;
        for (std::size_t j = 0; j < coefficients.cols(); ++j) {
            if (coefficients(i, j) != 0) result += coefficients(i, j) * x_power * y_power;
            y_power *= y;
        }
        x_power *= x;
    }
    return result;
}

DenseMatrix expansion_coefficients_2d(const BivariatePolynomial& f, unsigned level_x,
                                      unsigned level_y, const Rational& p1, const Rational& p2) {
    if (f.degree_x() > level_x || f.degree_y() > level_y)
        throw std::domain_error("expansion_coefficients_2d: polynomial degree exceeds a level");

    // Pad the coefficient grid, expand along x for each fixed y-power, then
    // along y for each fixed output row; independence of the variables makes
    // the two passes commute.
    DenseMatrix padded(level_x + 1, level_y + 1);
    for (std::size_t i = 0; i < f.coefficients.rows() && i <= level_x; ++i)
        for (std::size_t j = 0; j < f.coefficients.cols() && j <= level_y; ++j)
            padded(i, j) = f.coefficients(i, j);

    DenseMatrix after_x(level_x + 1, level_y + 1);
    for (unsigned j = 0; j <= level_y; ++j) {
        Polynomial slice;
        slice.coefficients.resize(level_x + 1);
        for (unsigned i = 0; i <= level_x; ++i) slice.coefficients[i] = padded(i, j);
        const std::vector<Rational> expanded = expansion_coefficients(slice, level_x, p1);
        for (unsigned n = 0; n <= level_x; ++n) after_x(n, j) = expanded[n];
    }

    DenseMatrix result(level_x + 1, level_y + 1);
    for (unsigned n = 0; n <= level_x; ++n) {
        Polynomial slice;
        slice.coefficients.resize(level_y + 1);
        for (unsigned j = 0; j <= level_y; ++j) slice.coefficients[j] = after_x(n, j);
        const std::vector<Rational> expanded = expansion_coefficients(slice, level_y, p2);
        for (unsigned m = 0; m <= level_y; ++m) result(n, m) = expanded[m];
    }
    return result;
}

}  // namespace krawtchouk
