#include "krawtchouk/univariate.hpp"

#include <stdexcept>

namespace krawtchouk {

long long grid_point(unsigned level, unsigned j) {
    return static_cast<long long>(level) - 2 * static_cast<long long>(j);
}

KravchukBasis kravchuk_matrix(unsigned level, const Rational& p) {
    if (p <= 0 || p >= 1) throw std::domain_error("kravchuk_matrix: p must lie strictly between 0 and 1");
    const Rational q = Rational(1) - p;
    const unsigned n = level + 1;

    KravchukBasis basis;
    basis.level = level;
    basis.p = p;
    basis.q = q;
    basis.phi = DenseMatrix(n, n);
    for (unsigned j = 0; j < n; ++j) {
        const TruncatedSeries column = column_generating_series(level, p, j, level);
        for (unsigned i = 0; i < n; ++i) basis.phi(i, j) = column[i];
    }

    std::vector<Rational> weight_diag(n);
    std::vector<Rational> norm_diag(n);
    const Rational four_pq = Rational(4) * p * q;
    for (unsigned j = 0; j < n; ++j) {
        weight_diag[j] = binomial(level, j) * pow_rational(p, level - j) * pow_rational(q, j);
        norm_diag[j] = binomial(level, j) * pow_rational(four_pq, j);
    }
    basis.weights = DenseMatrix::diagonal(weight_diag);
    basis.norms = DenseMatrix::diagonal(norm_diag);
    return basis;
}

Rational kn_value(const KravchukBasis& basis, unsigned n, unsigned j) {
    if (n > basis.level || j > basis.level) throw std::domain_error("kn_value: index exceeds level");
    return Rational(factorial(n)) * basis.phi(n, j);
}

Rational squared_norm(unsigned level, const Rational& p, unsigned n) {
    if (n > level) throw std::domain_error("squared_norm: degree exceeds level");
    if (p <= 0 || p >= 1) throw std::domain_error("squared_norm: p must lie strictly between 0 and 1");
    const Rational q = Rational(1) - p;
    const Rational nfact(factorial(n));
    return nfact * nfact * binomial(level, n) * pow_rational(Rational(4) * p * q, n);
}

DenseMatrix orthogonality_defect(const KravchukBasis& basis) {
    return basis.phi * basis.weights * basis.phi.transpose() - basis.norms;
}

DenseMatrix inverse_kravchuk(const KravchukBasis& basis) {
    // Gamma is invertible because pq != 0; invert the diagonal directly.
    std::vector<Rational> inv_norms(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) inv_norms[i] = Rational(1) / basis.norms(i, i);
    return basis.weights * basis.phi.transpose() * DenseMatrix::diagonal(inv_norms);
}

InvolutionIdentity involution_identity(const KravchukBasis& basis) {
    const unsigned n = basis.level + 1;
    const Rational two_p = Rational(2) * basis.p;
    std::vector<Rational> scale_diag(n);
    std::vector<Rational> scale_prime_diag(n);
    for (unsigned j = 0; j < n; ++j) {
        scale_diag[j] = pow_rational(two_p, basis.level - j);
        scale_prime_diag[j] = pow_rational(two_p, j);
    }
    InvolutionIdentity identity{DenseMatrix::diagonal(scale_diag),
                                DenseMatrix::diagonal(scale_prime_diag), DenseMatrix()};
    const Rational two_pow_n = pow_rational(Rational(2), basis.level);
    identity.defect =
        basis.phi * identity.scale * basis.phi - identity.scale_prime * two_pow_n;
    return identity;
}

DenseMatrix involution_inverse(const KravchukBasis& basis) {
    const InvolutionIdentity identity = involution_identity(basis);
    std::vector<Rational> inv_prime(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        inv_prime[j] = Rational(1) / identity.scale_prime(j, j);
    const Rational scale = pow_rational(Rational(2), -static_cast<long long>(basis.level));
    return (identity.scale * basis.phi * DenseMatrix::diagonal(inv_prime)) * scale;
}

Rational determinant_phi(const KravchukBasis& basis) { return basis.phi.determinant(); }

int expected_determinant_sign(unsigned level) {
    const unsigned r = level % 4;
    return (r == 0 || r == 3) ? 1 : -1;
}

AppellFunctions appell_functions(const Rational& p, unsigned order) {
    if (order < 1) throw std::domain_error("appell_functions: order must be at least 1");
    if (p <= 0 || p >= 1) throw std::domain_error("appell_functions: p must lie strictly between 0 and 1");
    const Rational q = Rational(1) - p;

    const TruncatedSeries log1p = TruncatedSeries::log1p_series(order);
    // log(1 + a v) as a polynomial in v: substitute a*v into log(1+w).
    const auto log_linear = [&](const Rational& a) {
        TruncatedSeries s(order);
        Rational power = 1;
        for (unsigned k = 1; k <= order; ++k) {
            power *= a;
            s[k] = log1p[k] * power;
        }
        return s;
    };

    TruncatedSeries u = (log_linear(q * 2) - log_linear(p * -2)) * Rational(1, 2);

    // p e^z + q e^{-z}: coefficient of z^k is (p + (-1)^k q) / k!.
    TruncatedSeries cosh_like(order);
    Rational inv_fact = 1;
    for (unsigned k = 0; k <= order; ++k) {
        if (k > 0) inv_fact /= k;
        cosh_like[k] = (k % 2 == 0 ? Rational(p + q) : Rational(p - q)) * inv_fact;
    }

    TruncatedSeries shifted = cosh_like;
    shifted[0] = 0;  // p + q = 1, so this is the zero-constant part
    TruncatedSeries h = TruncatedSeries::log1p_series(order).compose(shifted);

    TruncatedSeries v = TruncatedSeries::sinh_series(order).divide(cosh_like);

    return AppellFunctions{std::move(u), std::move(h), std::move(v), order};
}

TruncatedSeries column_generating_series(unsigned level, const Rational& p, unsigned j,
                                         unsigned order) {
    if (j > level) throw std::domain_error("column_generating_series: column exceeds level");
    const Rational q = Rational(1) - p;
    return TruncatedSeries::binomial_power(q * 2, level - j, order) *
           TruncatedSeries::binomial_power(p * -2, j, order);
}

TruncatedSeries appell_identity_defect(const Rational& p, unsigned level, unsigned j,
                                       unsigned order) {
    const AppellFunctions appell = appell_functions(p, order);
    const Rational x(grid_point(level, j));
    // x u(v) - N h(u(v)) has zero constant term, so the exponential composes.
    const TruncatedSeries exponent =
        appell.u * x - appell.h.compose(appell.u) * Rational(level);
    const TruncatedSeries rhs = TruncatedSeries::exp_series(order).compose(exponent);
    return column_generating_series(level, p, j, order) - rhs;
}

std::vector<Rational> transform(const KravchukBasis& basis, const std::vector<Rational>& data,
                                TransformSide side) {
    if (data.size() != basis.size())
        throw std::invalid_argument("transform: data length does not match level + 1");
    return side == TransformSide::Left ? basis.phi.apply(data) : basis.phi.apply_left(data);
}

}  // namespace krawtchouk
