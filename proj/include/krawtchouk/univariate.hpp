#pragma once

#include <vector>

#include "krawtchouk/matrix.hpp"
#include "krawtchouk/series.hpp"

namespace krawtchouk {

/// One univariate Krawtchouk transform instance at level N and parameter p.
///
/// phi is the (N+1)x(N+1) Kravchuk matrix: phi(i, j) is the coefficient of
/// v^i in (1 + 2qv)^(N-j) (1 - 2pv)^j, so rows index polynomials and columns
/// index grid points x = N - 2j. weights (B) is the diagonal of binomial
/// probabilities C(N,j) p^(N-j) q^j and norms (Gamma) the diagonal of
/// factorial-free squared norms C(N,i) (4pq)^i.
struct KravchukBasis {
    unsigned level = 0;  // N
    Rational p;
    Rational q;  // 1 - p
    DenseMatrix phi;
    DenseMatrix weights;  // B
    DenseMatrix norms;    // Gamma

    std::size_t size() const { return level + 1; }
};

/// Grid point for column j: x = N - 2j.
long long grid_point(unsigned level, unsigned j);

/// Builds the basis for level N and p in (0,1); throws std::domain_error
/// otherwise.
KravchukBasis kravchuk_matrix(unsigned level, const Rational& p);

/// Value of the n-th Krawtchouk polynomial at the j-th grid point, with the
/// factorial scaling: K_n(x_j) = n! * phi(n, j).
Rational kn_value(const KravchukBasis& basis, unsigned n, unsigned j);

/// Squared norm (n!)^2 C(N,n) (4pq)^n; throws std::domain_error for n > N.
Rational squared_norm(unsigned level, const Rational& p, unsigned n);

/// Phi B Phi^T - Gamma; all-zero on every valid basis.
DenseMatrix orthogonality_defect(const KravchukBasis& basis);

/// Exact inverse via B Phi^T Gamma^{-1}.
DenseMatrix inverse_kravchuk(const KravchukBasis& basis);

/// The scaled involution: with P = diag((2p)^(N-j)) and P' = diag((2p)^j),
/// Phi P Phi = 2^N P'. Returns P, P' and the (always zero) defect.
struct InvolutionIdentity {
    DenseMatrix scale;        // P
    DenseMatrix scale_prime;  // P'
    DenseMatrix defect;       // Phi P Phi - 2^N P'
};
InvolutionIdentity involution_identity(const KravchukBasis& basis);

/// The inverse obtained from the involution: 2^{-N} P Phi P'^{-1}.
DenseMatrix involution_inverse(const KravchukBasis& basis);

/// det Phi; equals +-2^{N(N+1)/2} with + exactly when N = 0, 3 (mod 4).
Rational determinant_phi(const KravchukBasis& basis);

/// Sign the determinant is expected to carry at level N.
int expected_determinant_sign(unsigned level);

/// The series triple of the canonical Appell system for step parameter p:
///   u(v) = (1/2) log((1 + 2qv) / (1 - 2pv))
///   h(z) = log(p e^z + q e^{-z})
///   v(z) = sinh z / (p e^z + q e^{-z})
/// u and v are mutually inverse up to the truncation order; all three vanish
/// at the origin.
struct AppellFunctions {
    TruncatedSeries u;
    TruncatedSeries h;
    TruncatedSeries v;
    unsigned order;
};

AppellFunctions appell_functions(const Rational& p, unsigned order);

/// Coefficients of (1 + 2qv)^(N-j) (1 - 2pv)^j as a truncated series; the
/// column-j generating function of the basis.
TruncatedSeries column_generating_series(unsigned level, const Rational& p, unsigned j,
                                         unsigned order);

/// Difference between the column-j generating function and
/// exp(x u(v) - N h(u(v))) at x = N - 2j, truncated at `order`. Zero on all
/// grid points.
TruncatedSeries appell_identity_defect(const Rational& p, unsigned level, unsigned j,
                                       unsigned order);

enum class TransformSide { Left, Right };

/// Phi * data (Left) or data^T * Phi (Right); lengths must match N+1.
std::vector<Rational> transform(const KravchukBasis& basis, const std::vector<Rational>& data,
                                TransformSide side = TransformSide::Left);

}  // namespace krawtchouk
