#pragma once

#include <cstdint>
#include <vector>

#include "krawtchouk/matrix.hpp"

namespace krawtchouk {

/// Coding-theory Krawtchouk matrix for word length N and alphabet size s:
/// kmatrix(i, j) is the coefficient of v^i in (1 + (s-1)v)^(N-j) (1-v)^j.
/// Relates to the basis matrix by K_i(j; N, s) = (2p)^{-i} phi(i, j) with
/// p = 1/s; the alphabet condition s >= 2 corresponds to p <= 1/2.
struct CodingKrawtchouk {
    unsigned length = 0;    // N
    unsigned alphabet = 2;  // s
    DenseMatrix kmatrix;
};

CodingKrawtchouk coding_matrix(unsigned length, unsigned alphabet);

/// Transform components: result[i] = sum_j K_i(j; N, s) v[j].
std::vector<Rational> krawtchouk_transform_vec(const CodingKrawtchouk& ck,
                                               const std::vector<Rational>& v);

/// A word over the alphabet {0, ..., s-1}.
using Word = std::vector<std::uint8_t>;

/// Linear code over the prime field F_s, given by generator rows. The rows
/// are reduced to a basis on construction, so the codeword count is exactly
/// s^rank. Enumeration is exhaustive and refuses to run past the budget of
/// one million codewords.
class LinearCode {
public:
    LinearCode(unsigned field_order, unsigned length, std::vector<std::vector<unsigned>> generator_rows);

    unsigned field_order() const { return field_order_; }
    unsigned length() const { return length_; }
    unsigned rank() const { return static_cast<unsigned>(basis_.size()); }
    BigInt codeword_count() const;

    const std::vector<Word>& codewords() const;

    /// Dual code: the null space of the generator over F_s.
    LinearCode dual() const;

private:
    unsigned field_order_;
    unsigned length_;
    std::vector<std::vector<unsigned>> basis_;  // row-reduced, mod s
    mutable std::vector<Word> codewords_;       // cached enumeration
};

/// Count of codewords by Hamming weight, length N+1, via enumeration.
std::vector<Rational> weight_distribution(const LinearCode& code);

/// Exact statement checked: weight_distribution(dual) equals
/// (1/|code|) * K * weight_distribution(code) componentwise.
bool macwilliams_check(const LinearCode& code);

/// Distance enumerator of an arbitrary word list: entry j counts ordered
/// pairs at Hamming distance j, divided by the number of words, so entry 0
/// is always 1. Throws on ragged input.
std::vector<Rational> distance_enumerator(const std::vector<Word>& words);

/// Delsarte nonnegativity: true iff every component of the Krawtchouk
/// transform of the distance enumerator is >= 0.
bool delsarte_check(const std::vector<Word>& words, unsigned alphabet);

}  // namespace krawtchouk
