#include "krawtchouk/rational.hpp"

#include <stdexcept>

namespace krawtchouk {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
    throw std::invalid_argument("rational parse error at position " + std::to_string(pos) + " in \"" +
                                std::string(text) + "\": " + what);
}

BigInt parse_integer(std::string_view text, std::size_t begin, std::size_t end, std::string_view full) {
    if (begin == end) parse_fail(full, begin, "expected digits");
    std::size_t i = begin;
    bool negative = false;
    if (full[i] == '-' || full[i] == '+') {
        negative = full[i] == '-';
        ++i;
        if (i == end) parse_fail(full, i, "expected digits after sign");
    }
    BigInt value = 0;
    for (; i < end; ++i) {
        const char c = full[i];
        if (c < '0' || c > '9') parse_fail(full, i, std::string("unexpected character '") + c + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
    while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t' || text[end - 1] == '\r')) --end;
    if (begin == end) parse_fail(text, begin, "empty token");

    const std::size_t slash = text.find('/', begin);
    if (slash == std::string_view::npos || slash >= end) {
        return Rational(parse_integer(text, begin, end, text));
    }
    const BigInt num = parse_integer(text, begin, slash, text);
    const BigInt den = parse_integer(text, slash + 1, end, text);
    if (den == 0) throw std::domain_error("rational denominator is zero in \"" + std::string(text) + "\"");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Rational pow_rational(const Rational& base, long long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero cannot be raised to a negative power");
        return pow_rational(Rational(denominator(base), numerator(base)), -exponent);
    }
    Rational result = 1;
    Rational square = base;
    unsigned long long e = static_cast<unsigned long long>(exponent);
    while (e != 0) {
        if (e & 1) result *= square;
        e >>= 1;
        if (e != 0) square *= square;
    }
    return result;
}

BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("binomial: k exceeds n");
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return Rational(result);
}

Rational multinomial(std::span<const unsigned> parts) {
    unsigned total = 0;
    BigInt result = 1;
    for (const unsigned part : parts) {
        // running product of binomials keeps every intermediate an integer
        for (unsigned i = 1; i <= part; ++i) {
            result *= total + i;
            result /= i;
        }
        total += part;
    }
    return Rational(result);
}

Rational multinomial(const std::vector<unsigned>& parts) {
    return multinomial(std::span<const unsigned>(parts.data(), parts.size()));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        values.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return values;
}

}  // namespace krawtchouk
