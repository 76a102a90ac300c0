#include "krawtchouk/coding.hpp"

#include <stdexcept>

#include "krawtchouk/series.hpp"

namespace krawtchouk {

namespace {

constexpr std::uint64_t kEnumerationBudget = 1'000'000;

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned mod_inverse(unsigned a, unsigned p) {
    // p is prime and a != 0 mod p; Fermat via repeated squaring.
    unsigned long long result = 1, base = a % p;
    unsigned e = p - 2;
    while (e != 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<unsigned>(result);
}

/// Row-reduces mod p; returns the nonzero rows (a basis of the row space).
std::vector<std::vector<unsigned>> row_reduce(std::vector<std::vector<unsigned>> rows, unsigned p,
                                              unsigned length) {
    std::vector<std::vector<unsigned>> basis;
    std::size_t pivot_col = 0;
    std::size_t next_row = 0;
    while (next_row < rows.size() && pivot_col < length) {
        std::size_t pivot = next_row;
        while (pivot < rows.size() && rows[pivot][pivot_col] % p == 0) ++pivot;
        if (pivot == rows.size()) {
            ++pivot_col;
            continue;
        }
        std::swap(rows[pivot], rows[next_row]);
        const unsigned inv = mod_inverse(rows[next_row][pivot_col] % p, p);
        for (unsigned& x : rows[next_row]) x = static_cast<unsigned>(1ull * x * inv % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row) continue;
            const unsigned factor = rows[r][pivot_col] % p;
            if (factor == 0) continue;
            for (std::size_t c = 0; c < length; ++c)
                rows[r][c] = (rows[r][c] + 1ull * (p - factor) * rows[next_row][c]) % p;
        }
        ++next_row;
        ++pivot_col;
    }
    rows.resize(next_row);
    return rows;
}

unsigned hamming_weight(const Word& w) {
    unsigned weight = 0;
    for (const auto symbol : w)
        if (symbol != 0) ++weight;
    return weight;
}

unsigned hamming_distance(const Word& a, const Word& b) {
    unsigned distance = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++distance;
    return distance;
}

}  // namespace

CodingKrawtchouk coding_matrix(unsigned length, unsigned alphabet) {
    if (alphabet < 2) throw std::domain_error("coding_matrix: alphabet size must be at least 2");
    const unsigned n = length + 1;
    CodingKrawtchouk ck{length, alphabet, DenseMatrix(n, n)};
    for (unsigned j = 0; j < n; ++j) {
        const TruncatedSeries column =
            TruncatedSeries::binomial_power(Rational(alphabet - 1), length - j, length) *
            TruncatedSeries::binomial_power(Rational(-1), j, length);
        for (unsigned i = 0; i < n; ++i) ck.kmatrix(i, j) = column[i];
    }
    return ck;
}

std::vector<Rational> krawtchouk_transform_vec(const CodingKrawtchouk& ck,
                                               const std::vector<Rational>& v) {
    if (v.size() != ck.length + 1)
        throw std::invalid_argument("krawtchouk_transform_vec: vector length does not match N + 1");
    return ck.kmatrix.apply(v);
}

LinearCode::LinearCode(unsigned field_order, unsigned length,
                       std::vector<std::vector<unsigned>> generator_rows)
    : field_order_(field_order), length_(length) {
    if (!is_prime(field_order)) throw std::domain_error("LinearCode: field order must be prime");
    if (length == 0) throw std::domain_error("LinearCode: length must be positive");
    for (const auto& row : generator_rows)
        if (row.size() != length) throw std::invalid_argument("LinearCode: generator row length mismatch");
    basis_ = row_reduce(std::move(generator_rows), field_order, length);
}

BigInt LinearCode::codeword_count() const {
    BigInt count = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) count *= field_order_;
    return count;
}

const std::vector<Word>& LinearCode::codewords() const {
    if (!codewords_.empty()) return codewords_;
    const BigInt count = codeword_count();
    if (count > kEnumerationBudget)
        throw std::runtime_error("LinearCode: enumeration budget exceeded (" + count.str() +
                                 " codewords)");
    const std::size_t total = static_cast<std::size_t>(count);
    codewords_.reserve(total);
    Word current(length_, 0);
    std::vector<unsigned> digits(basis_.size(), 0);
    codewords_.push_back(current);
    // Odometer over coefficient tuples; each step adds one basis row.
    for (std::size_t n = 1; n < total; ++n) {
        std::size_t pos = 0;
        while (true) {
            digits[pos] = (digits[pos] + 1) % field_order_;
            for (std::size_t c = 0; c < length_; ++c)
                current[c] = static_cast<std::uint8_t>((current[c] + basis_[pos][c]) % field_order_);
            if (digits[pos] != 0) break;
            ++pos;
        }
        codewords_.push_back(current);
    }
    return codewords_;
}

LinearCode LinearCode::dual() const {
    // Null space from the reduced basis: one dual generator per free column.
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(length_, false);
    for (const auto& row : basis_) {
        for (std::size_t c = 0; c < length_; ++c) {
            if (row[c] != 0) {
                pivot_cols.push_back(c);
                is_pivot[c] = true;
                break;
            }
        }
    }
    std::vector<std::vector<unsigned>> dual_rows;
    for (std::size_t free_col = 0; free_col < length_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<unsigned> v(length_, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < basis_.size(); ++r)
            v[pivot_cols[r]] = (field_order_ - basis_[r][free_col] % field_order_) % field_order_;
        dual_rows.push_back(std::move(v));
    }
    if (dual_rows.empty()) dual_rows.push_back(std::vector<unsigned>(length_, 0));
    return LinearCode(field_order_, length_, std::move(dual_rows));
}

std::vector<Rational> weight_distribution(const LinearCode& code) {
    std::vector<Rational> distribution(code.length() + 1, Rational(0));
    for (const Word& w : code.codewords()) distribution[hamming_weight(w)] += 1;
    return distribution;
}

bool macwilliams_check(const LinearCode& code) {
    const CodingKrawtchouk ck = coding_matrix(code.length(), code.field_order());
    std::vector<Rational> transformed = krawtchouk_transform_vec(ck, weight_distribution(code));
    const Rational scale = Rational(1) / Rational(BigInt(code.codeword_count()));
    for (Rational& x : transformed) x *= scale;
    return transformed == weight_distribution(code.dual());
}

std::vector<Rational> distance_enumerator(const std::vector<Word>& words) {
    if (words.empty()) throw std::invalid_argument("distance_enumerator: empty word list");
    const std::size_t length = words.front().size();
    for (const Word& w : words)
        if (w.size() != length) throw std::invalid_argument("distance_enumerator: ragged word list");
    std::vector<Rational> enumerator(length + 1, Rational(0));
    for (const Word& u : words)
        for (const Word& v : words) ++enumerator[hamming_distance(u, v)];
    const Rational scale = Rational(1) / Rational(BigInt(words.size()));
    for (Rational& x : enumerator) x *= scale;
    return enumerator;
}

bool delsarte_check(const std::vector<Word>& words, unsigned alphabet) {
    const std::vector<Rational> enumerator = distance_enumerator(words);
    const CodingKrawtchouk ck = coding_matrix(static_cast<unsigned>(enumerator.size() - 1), alphabet);
    for (const Rational& component : krawtchouk_transform_vec(ck, enumerator))
        if (component < 0) return false;
    return true;
}

}  // namespace krawtchouk
