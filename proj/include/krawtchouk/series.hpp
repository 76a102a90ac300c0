#pragma once

#include <vector>

#include "krawtchouk/rational.hpp"

namespace krawtchouk {

/// Truncated formal power series: coefficients[k] is the coefficient of the
/// k-th power of the formal variable, k = 0..order. Products and compositions
/// truncate at `order`; composition requires the inner series to have zero
/// constant term.
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned order);
    TruncatedSeries(unsigned order, std::vector<Rational> coefficients);

    /// The formal variable itself, truncated at `order`.
    static TruncatedSeries variable(unsigned order);
    static TruncatedSeries constant(unsigned order, const Rational& value);

    /// exp:   1, 1, 1/2!, 1/3!, ...
    static TruncatedSeries exp_series(unsigned order);
    /// sinh:  0, 1, 0, 1/3!, 0, 1/5!, ...
    static TruncatedSeries sinh_series(unsigned order);
    /// cosh:  1, 0, 1/2!, 0, 1/4!, ...
    static TruncatedSeries cosh_series(unsigned order);
    /// log(1+w): 0, 1, -1/2, 1/3, ...
    static TruncatedSeries log1p_series(unsigned order);
    /// (1 + a v)^m for integer m >= 0, truncated.
    static TruncatedSeries binomial_power(const Rational& a, unsigned m, unsigned order);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const Rational& operator[](unsigned k) const { return coefficients_[k]; }
    Rational& operator[](unsigned k) { return coefficients_[k]; }

    bool operator==(const TruncatedSeries& other) const = default;
    bool is_zero() const;

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const Rational& scalar) const;

    /// this(inner); inner must have zero constant term.
    TruncatedSeries compose(const TruncatedSeries& inner) const;

    /// this / divisor; divisor must have nonzero constant term.
    TruncatedSeries divide(const TruncatedSeries& divisor) const;

private:
    void check_same_order(const TruncatedSeries& other) const;

    unsigned order_;
    std::vector<Rational> coefficients_;
};

}  // namespace krawtchouk
