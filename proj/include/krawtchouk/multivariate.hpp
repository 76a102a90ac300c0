#pragma once

#include <vector>

#include "krawtchouk/matrix.hpp"

namespace krawtchouk {

/// Exponent tuple of a monomial; all indices at level N sum to N.
using MultiIndex = std::vector<unsigned>;

/// All multi-indices with `variables` entries and total degree `level`, in
/// descending lexicographic order, e.g. for (3, 2):
/// (2,0,0), (1,1,0), (1,0,1), (0,2,0), (0,1,1), (0,0,2).
/// The count is C(level + variables - 1, variables - 1).
std::vector<MultiIndex> enumerate_multiindices(unsigned variables, unsigned level);

/// Symmetric-power representation of a base matrix at a level: with
/// y = A x, entry (n, m) is the coefficient of x^m in y^n. The map
/// A -> induced(A) is a multiplicative homomorphism at each level.
struct InducedMatrix {
    DenseMatrix base;
    unsigned level = 0;
    DenseMatrix matrix;
    std::vector<MultiIndex> ordering;
};

InducedMatrix induced_matrix(const DenseMatrix& base, unsigned level);

/// Diagonal matrix of multinomial coefficients C(level; n) over the standard
/// multi-index ordering.
DenseMatrix multinomial_diagonal(unsigned variables, unsigned level);

/// induced(A^T) - B^{-1} induced(A)^T B with B the multinomial diagonal;
/// identically zero.
DenseMatrix transpose_lemma_defect(const DenseMatrix& base, unsigned level);

/// Reflection 2 v v^T / (v^T v) - I: symmetric, orthogonal, squares to the
/// identity. Throws std::domain_error on the zero vector.
DenseMatrix reflection_from_vector(const std::vector<Rational>& v);

/// Multivariate Krawtchouk system at level N built from a base matrix A and
/// a probability vector: phi = induced(A)^T, weighted by the multinomial
/// distribution diagonal B * Pbar, with squared norms B * Dbar. Requires
/// A^T P A diagonal with positive diagonal.
struct MultivariateKravchuk {
    unsigned dimension = 0;  // d; matrices act on d+1 variables
    unsigned level = 0;      // N
    DenseMatrix base;        // A
    std::vector<Rational> probabilities;
    std::vector<Rational> norm_base;  // diagonal of A^T P A
    std::vector<MultiIndex> ordering;
    DenseMatrix phi;                // induced(A)^T
    DenseMatrix weight_diagonal;    // B Pbar
    DenseMatrix norm_diagonal;      // B Dbar

    std::size_t size() const { return phi.rows(); }
};

MultivariateKravchuk build_multivariate(const DenseMatrix& base,
                                        const std::vector<Rational>& probabilities,
                                        unsigned level);

/// Phi (B Pbar) Phi^T - B Dbar; identically zero for a valid instance.
DenseMatrix multivariate_orthogonality_defect(const MultivariateKravchuk& mk);

/// Exact inverse (B Pbar) Phi^T (B Dbar)^{-1}.
DenseMatrix multivariate_inverse(const MultivariateKravchuk& mk);

/// Phi * data; lengths must match the induced dimension C(N+d, d).
std::vector<Rational> multivariate_transform(const MultivariateKravchuk& mk,
                                             const std::vector<Rational>& data);

/// Floating-point realization of the square-root construction
/// P^{-1/2} W D^{1/2}; returns the entries row-major. The companion check
/// reports the largest off-diagonal magnitude of A^T P A, which should stay
/// below 1e-12 for an orthogonal W. Experimentation only — never feeds the
/// exact paths.
std::vector<std::vector<double>> sqrt_construction(const std::vector<std::vector<double>>& w,
                                                   const std::vector<double>& probabilities,
                                                   const std::vector<double>& norm_diag);
double sqrt_construction_defect(const std::vector<std::vector<double>>& a,
                                const std::vector<double>& probabilities);

}  // namespace krawtchouk
