#include "krawtchouk/series.hpp"

#include <stdexcept>
#include <utility>

namespace krawtchouk {

TruncatedSeries::TruncatedSeries(unsigned order)
    : order_(order), coefficients_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Rational> coefficients)
    : order_(order), coefficients_(std::move(coefficients)) {
    coefficients_.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::variable(unsigned order) {
    TruncatedSeries s(order);
    if (order >= 1) s[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::constant(unsigned order, const Rational& value) {
    TruncatedSeries s(order);
    s[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::exp_series(unsigned order) {
    TruncatedSeries s(order);
    Rational term = 1;
    s[0] = term;
    for (unsigned k = 1; k <= order; ++k) {
        term /= k;
        s[k] = term;
    }
    return s;
}

TruncatedSeries TruncatedSeries::sinh_series(unsigned order) {
    TruncatedSeries s(order);
    Rational term = 1;
    for (unsigned k = 1; k <= order; ++k) {
        term /= k;
        if (k % 2 == 1) s[k] = term;
    }
    return s;
}

TruncatedSeries TruncatedSeries::cosh_series(unsigned order) {
    TruncatedSeries s(order);
    Rational term = 1;
    s[0] = term;
    for (unsigned k = 1; k <= order; ++k) {
        term /= k;
        if (k % 2 == 0) s[k] = term;
    }
    return s;
}

TruncatedSeries TruncatedSeries::log1p_series(unsigned order) {
    TruncatedSeries s(order);
    for (unsigned k = 1; k <= order; ++k) {
        s[k] = Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return s;
}

TruncatedSeries TruncatedSeries::binomial_power(const Rational& a, unsigned m, unsigned order) {
    TruncatedSeries s(order);
    Rational coeff = 1;  // C(m,k) a^k built incrementally
    s[0] = coeff;
    const unsigned top = m < order ? m : order;
    for (unsigned k = 1; k <= top; ++k) {
        coeff *= a;
        coeff *= m - k + 1;
        coeff /= k;
        s[k] = coeff;
    }
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const Rational& c : coefficients_)
        if (c != 0) return false;
    return true;
}

void TruncatedSeries::check_same_order(const TruncatedSeries& other) const {
    if (order_ != other.order_) throw std::invalid_argument("series operation: truncation orders differ");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    check_same_order(other);
    TruncatedSeries result(order_);
    for (unsigned k = 0; k <= order_; ++k) result[k] = coefficients_[k] + other.coefficients_[k];
    return result;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    check_same_order(other);
    TruncatedSeries result(order_);
    for (unsigned k = 0; k <= order_; ++k) result[k] = coefficients_[k] - other.coefficients_[k];
    return result;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    check_same_order(other);
    TruncatedSeries result(order_);
    for (unsigned i = 0; i <= order_; ++i) {
        if (coefficients_[i] == 0) continue;
        for (unsigned j = 0; i + j <= order_; ++j) {
            if (other.coefficients_[j] == 0) continue;
            result[i + j] += coefficients_[i] * other.coefficients_[j];
        }
    }
    return result;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& scalar) const {
    TruncatedSeries result(order_);
    for (unsigned k = 0; k <= order_; ++k) result[k] = coefficients_[k] * scalar;
    return result;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    check_same_order(inner);
    if (inner.coefficients_[0] != 0)
        throw std::invalid_argument("series composition: inner series has nonzero constant term");
    // Horner evaluation in the truncated ring.
    TruncatedSeries result = constant(order_, coefficients_[order_]);
    for (unsigned k = order_; k-- > 0;) {
        result = result * inner;
        result[0] += coefficients_[k];
    }
    return result;
}

TruncatedSeries TruncatedSeries::divide(const TruncatedSeries& divisor) const {
    check_same_order(divisor);
    if (divisor.coefficients_[0] == 0)
        throw std::invalid_argument("series division: divisor has zero constant term");
    TruncatedSeries result(order_);
    const Rational lead = divisor.coefficients_[0];
    for (unsigned n = 0; n <= order_; ++n) {
        Rational acc = coefficients_[n];
        for (unsigned k = 0; k < n; ++k) {
            if (result[k] != 0 && divisor.coefficients_[n - k] != 0)
                acc -= result[k] * divisor.coefficients_[n - k];
        }
        result[n] = acc / lead;
    }
    return result;
}

}  // namespace krawtchouk
