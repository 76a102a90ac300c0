#include "krawtchouk/multivariate.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace krawtchouk {

namespace {

void enumerate_recursive(unsigned variables, unsigned remaining, MultiIndex& prefix,
                         std::vector<MultiIndex>& out) {
    if (prefix.size() + 1 == variables) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        prefix.push_back(e);
        enumerate_recursive(variables, remaining - e, prefix, out);
        prefix.pop_back();
    }
}

bool is_diagonal_base(const DenseMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    return true;
}

/// Product of diag entries raised to the exponents of a multi-index.
Rational monomial_power(const std::vector<Rational>& values, const MultiIndex& exponents) {
    Rational result = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        result *= pow_rational(values[i], exponents[i]);
    return result;
}

}  // namespace

std::vector<MultiIndex> enumerate_multiindices(unsigned variables, unsigned level) {
    if (variables == 0) throw std::domain_error("enumerate_multiindices: need at least one variable");
    std::vector<MultiIndex> out;
    MultiIndex prefix;
    enumerate_recursive(variables, level, prefix, out);
    return out;
}

InducedMatrix induced_matrix(const DenseMatrix& base, unsigned level) {
    if (!base.is_square()) throw std::invalid_argument("induced_matrix: base matrix is not square");
    const unsigned variables = static_cast<unsigned>(base.rows());
    std::vector<MultiIndex> ordering = enumerate_multiindices(variables, level);
    const std::size_t dim = ordering.size();
    DenseMatrix result(dim, dim);

    if (is_diagonal_base(base)) {
        // Diagonal bases stay diagonal: the (n, n) entry is the monomial
        // power of the base diagonal at n.
        const std::vector<Rational> diag = base.diagonal_entries();
        for (std::size_t n = 0; n < dim; ++n) result(n, n) = monomial_power(diag, ordering[n]);
        return InducedMatrix{base, level, std::move(result), std::move(ordering)};
    }

    std::map<MultiIndex, std::size_t> position;
    for (std::size_t m = 0; m < dim; ++m) position.emplace(ordering[m], m);

    for (std::size_t n = 0; n < dim; ++n) {
        // Expand prod_i (sum_j base(i, j) x_j)^(n_i) monomial by monomial.
        std::map<MultiIndex, Rational> expansion;
        expansion.emplace(MultiIndex(variables, 0), Rational(1));
        for (unsigned i = 0; i < variables; ++i) {
            for (unsigned rep = 0; rep < ordering[n][i]; ++rep) {
                std::map<MultiIndex, Rational> next;
                for (const auto& [exponents, coeff] : expansion) {
                    for (unsigned j = 0; j < variables; ++j) {
                        if (base(i, j) == 0) continue;
                        MultiIndex bumped = exponents;
                        ++bumped[j];
                        next[bumped] += coeff * base(i, j);
                    }
                }
                expansion = std::move(next);
            }
        }
        for (const auto& [exponents, coeff] : expansion) {
            if (coeff != 0) result(n, position.at(exponents)) = coeff;
        }
    }
    return InducedMatrix{base, level, std::move(result), std::move(ordering)};
}

DenseMatrix multinomial_diagonal(unsigned variables, unsigned level) {
    const std::vector<MultiIndex> ordering = enumerate_multiindices(variables, level);
    std::vector<Rational> diag(ordering.size());
    for (std::size_t n = 0; n < ordering.size(); ++n) diag[n] = multinomial(ordering[n]);
    return DenseMatrix::diagonal(diag);
}

DenseMatrix transpose_lemma_defect(const DenseMatrix& base, unsigned level) {
    const InducedMatrix lhs = induced_matrix(base.transpose(), level);
    const InducedMatrix rhs = induced_matrix(base, level);
    const DenseMatrix b = multinomial_diagonal(static_cast<unsigned>(base.rows()), level);
    std::vector<Rational> b_inverse(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) b_inverse[i] = Rational(1) / b(i, i);
    return lhs.matrix - DenseMatrix::diagonal(b_inverse) * rhs.matrix.transpose() * b;
}

DenseMatrix reflection_from_vector(const std::vector<Rational>& v) {
    Rational norm = 0;
    for (const Rational& x : v) norm += x * x;
    if (norm == 0) throw std::domain_error("reflection_from_vector: zero vector");
    const std::size_t n = v.size();
    DenseMatrix w(n, n);
    const Rational two_over_norm = Rational(2) / norm;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = v[i] * v[j] * two_over_norm;
        w(i, i) -= 1;
    }
    return w;
}

MultivariateKravchuk build_multivariate(const DenseMatrix& base,
                                        const std::vector<Rational>& probabilities,
                                        unsigned level) {
    if (!base.is_square()) throw std::invalid_argument("build_multivariate: base matrix is not square");
    const std::size_t n = base.rows();
    if (probabilities.size() != n)
        throw std::invalid_argument("build_multivariate: probability count does not match base size");
    Rational total = 0;
    for (const Rational& p : probabilities) {
        if (p <= 0) throw std::domain_error("build_multivariate: probabilities must be positive");
        total += p;
    }
    if (total != 1) throw std::domain_error("build_multivariate: probabilities must sum to 1");

    const DenseMatrix gram =
        base.transpose() * DenseMatrix::diagonal(probabilities) * base;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && gram(i, j) != 0)
                throw std::domain_error("build_multivariate: A^T P A is not diagonal at entry (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ") = " +
                                        to_string(gram(i, j)));
        }
    }
    std::vector<Rational> norm_base = gram.diagonal_entries();
    for (const Rational& d : norm_base)
        if (d <= 0) throw std::domain_error("build_multivariate: A^T P A has a non-positive diagonal");

    InducedMatrix induced = induced_matrix(base, level);

    MultivariateKravchuk mk;
    mk.dimension = static_cast<unsigned>(n - 1);
    mk.level = level;
    mk.base = base;
    mk.probabilities = probabilities;
    mk.norm_base = norm_base;
    mk.phi = induced.matrix.transpose();
    mk.ordering = std::move(induced.ordering);

    const std::size_t dim = mk.ordering.size();
    std::vector<Rational> weight_diag(dim);
    std::vector<Rational> norm_diag(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const Rational coeff = multinomial(mk.ordering[k]);
        weight_diag[k] = coeff * monomial_power(probabilities, mk.ordering[k]);
        norm_diag[k] = coeff * monomial_power(norm_base, mk.ordering[k]);
    }
    mk.weight_diagonal = DenseMatrix::diagonal(weight_diag);
    mk.norm_diagonal = DenseMatrix::diagonal(norm_diag);
    return mk;
}

DenseMatrix multivariate_orthogonality_defect(const MultivariateKravchuk& mk) {
    return mk.phi * mk.weight_diagonal * mk.phi.transpose() - mk.norm_diagonal;
}

DenseMatrix multivariate_inverse(const MultivariateKravchuk& mk) {
    std::vector<Rational> inv_norm(mk.size());
    for (std::size_t i = 0; i < mk.size(); ++i) inv_norm[i] = Rational(1) / mk.norm_diagonal(i, i);
    return mk.weight_diagonal * mk.phi.transpose() * DenseMatrix::diagonal(inv_norm);
}

std::vector<Rational> multivariate_transform(const MultivariateKravchuk& mk,
                                             const std::vector<Rational>& data) {
    if (data.size() != mk.size())
        throw std::invalid_argument("multivariate_transform: data length does not match induced dimension");
    return mk.phi.apply(data);
}

std::vector<std::vector<double>> sqrt_construction(const std::vector<std::vector<double>>& w,
                                                   const std::vector<double>& probabilities,
                                                   const std::vector<double>& norm_diag) {
    const std::size_t n = w.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = w[i][j] * std::sqrt(norm_diag[j]) / std::sqrt(probabilities[i]);
    return a;
}

double sqrt_construction_defect(const std::vector<std::vector<double>>& a,
                                const std::vector<double>& probabilities) {
    const std::size_t n = a.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double entry = 0.0;
            for (std::size_t k = 0; k < n; ++k) entry += a[k][i] * probabilities[k] * a[k][j];
            worst = std::max(worst, std::abs(entry));
        }
    }
    return worst;
}

}  // namespace krawtchouk
