// Pybind11 bindings for the krawtchouk core.
//
// Exact rationals cross the boundary as strings ("num/den" or "num"), so no
// precision is lost; the Python package wraps them into fractions.Fraction
// on request.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "krawtchouk/coding.hpp"
#include "krawtchouk/multivariate.hpp"
#include "krawtchouk/nilpotent.hpp"
#include "krawtchouk/operator_calculus.hpp"
#include "krawtchouk/univariate.hpp"

namespace py = pybind11;
namespace kw = krawtchouk;
using kw::Rational;

namespace {

using StringMatrix = std::vector<std::vector<std::string>>;
using StringVector = std::vector<std::string>;

StringMatrix matrix_out(const kw::DenseMatrix& m) {
    StringMatrix rows(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = kw::to_string(m(i, j));
    return rows;
}

kw::DenseMatrix matrix_in(const StringMatrix& rows) {
    if (rows.empty()) throw py::value_error("matrix must have at least one row");
    const std::size_t cols = rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.size() != cols) throw py::value_error("matrix rows have unequal lengths");
        for (const auto& token : row) entries.push_back(kw::parse_rational(token));
    }
    return kw::DenseMatrix(rows.size(), cols, std::move(entries));
}

StringVector vector_out(const std::vector<Rational>& v) {
    StringVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = kw::to_string(v[i]);
    return out;
}

std::vector<Rational> vector_in(const StringVector& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& token : v) out.push_back(kw::parse_rational(token));
    return out;
}

StringVector series_out(const kw::TruncatedSeries& s) { return vector_out(s.coefficients()); }

std::vector<kw::Word> words_in(const std::vector<std::vector<unsigned>>& words, unsigned alphabet) {
    std::vector<kw::Word> out(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        out[i].reserve(words[i].size());
        for (unsigned symbol : words[i]) {
            if (symbol >= alphabet) throw py::value_error("word symbol out of range");
            out[i].push_back(static_cast<std::uint8_t>(symbol));
        }
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Krawtchouk transforms: univariate, coding-theoretic and multivariate";

    py::class_<kw::KravchukBasis>(m, "KravchukBasis")
        .def_readonly("level", &kw::KravchukBasis::level)
        .def_property_readonly("p", [](const kw::KravchukBasis& b) { return kw::to_string(b.p); })
        .def_property_readonly("q", [](const kw::KravchukBasis& b) { return kw::to_string(b.q); })
        .def_property_readonly("phi", [](const kw::KravchukBasis& b) { return matrix_out(b.phi); })
        .def_property_readonly("weights",
                               [](const kw::KravchukBasis& b) { return matrix_out(b.weights); })
        .def_property_readonly("norms",
                               [](const kw::KravchukBasis& b) { return matrix_out(b.norms); })
        .def("__repr__", [](const kw::KravchukBasis& b) {
            return "KravchukBasis(N=" + std::to_string(b.level) + ", p=" + kw::to_string(b.p) + ")";
        });

    m.def(
        "kravchuk_basis",
        [](unsigned level, const std::string& p) {
            return kw::kravchuk_matrix(level, kw::parse_rational(p));
        },
        py::arg("level"), py::arg("p"), "Kravchuk matrix with weight and norm diagonals");

    m.def(
        "squared_norm",
        [](unsigned level, const std::string& p, unsigned n) {
            return kw::to_string(kw::squared_norm(level, kw::parse_rational(p), n));
        },
        py::arg("level"), py::arg("p"), py::arg("n"));

    m.def("orthogonality_defect_nonzeros", [](const kw::KravchukBasis& basis) {
        return kw::orthogonality_defect(basis).nonzero_count();
    });

    m.def("inverse_kravchuk",
          [](const kw::KravchukBasis& basis) { return matrix_out(kw::inverse_kravchuk(basis)); });

    m.def("involution_defect_nonzeros", [](const kw::KravchukBasis& basis) {
        return kw::involution_identity(basis).defect.nonzero_count();
    });

    m.def("determinant",
          [](const kw::KravchukBasis& basis) { return kw::to_string(kw::determinant_phi(basis)); });

    m.def(
        "transform",
        [](const kw::KravchukBasis& basis, const StringVector& data, const std::string& side) {
            const auto mode = side == "right" ? kw::TransformSide::Right : kw::TransformSide::Left;
            return vector_out(kw::transform(basis, vector_in(data), mode));
        },
        py::arg("basis"), py::arg("data"), py::arg("side") = "left");

    m.def(
        "appell_functions",
        [](const std::string& p, unsigned order) {
            const kw::AppellFunctions a = kw::appell_functions(kw::parse_rational(p), order);
            return py::make_tuple(series_out(a.u), series_out(a.h), series_out(a.v));
        },
        py::arg("p"), py::arg("order"),
        "Series coefficient triple (u, h, v) of the canonical Appell system");

    m.def(
        "expansion_coefficients",
        [](const StringVector& poly, unsigned level, const std::string& p) {
            return vector_out(
                kw::expansion_coefficients(kw::Polynomial{vector_in(poly)}, level,
                                           kw::parse_rational(p)));
        },
        py::arg("poly"), py::arg("level"), py::arg("p"),
        "Krawtchouk expansion coefficients of a polynomial, ascending-degree input");

    m.def(
        "positivity_check",
        [](const StringVector& poly, unsigned level, const std::string& p) {
            return kw::positivity_check(kw::Polynomial{vector_in(poly)}, level,
                                        kw::parse_rational(p));
        },
        py::arg("poly"), py::arg("level"), py::arg("p"));

    m.def(
        "expansion_coefficients_2d",
        [](const StringMatrix& poly, unsigned level_x, unsigned level_y, const std::string& p1,
           const std::string& p2) {
            return matrix_out(kw::expansion_coefficients_2d(
                kw::BivariatePolynomial{matrix_in(poly)}, level_x, level_y,
                kw::parse_rational(p1), kw::parse_rational(p2)));
        },
        py::arg("poly"), py::arg("level_x"), py::arg("level_y"), py::arg("p1"), py::arg("p2"));

    m.def(
        "coding_matrix",
        [](unsigned length, unsigned alphabet) {
            return matrix_out(kw::coding_matrix(length, alphabet).kmatrix);
        },
        py::arg("length"), py::arg("alphabet"));

    m.def(
        "coding_transform",
        [](unsigned length, unsigned alphabet, const StringVector& data) {
            return vector_out(
                kw::krawtchouk_transform_vec(kw::coding_matrix(length, alphabet), vector_in(data)));
        },
        py::arg("length"), py::arg("alphabet"), py::arg("data"));

    m.def(
        "weight_distribution",
        [](const std::vector<std::vector<unsigned>>& generator, unsigned field_order,
           unsigned length) {
            return vector_out(
                kw::weight_distribution(kw::LinearCode(field_order, length, generator)));
        },
        py::arg("generator"), py::arg("field_order"), py::arg("length"));

    m.def(
        "dual_weight_distribution",
        [](const std::vector<std::vector<unsigned>>& generator, unsigned field_order,
           unsigned length) {
            return vector_out(
                kw::weight_distribution(kw::LinearCode(field_order, length, generator).dual()));
        },
        py::arg("generator"), py::arg("field_order"), py::arg("length"));

    m.def(
        "macwilliams_check",
        [](const std::vector<std::vector<unsigned>>& generator, unsigned field_order,
           unsigned length) {
            return kw::macwilliams_check(kw::LinearCode(field_order, length, generator));
        },
        py::arg("generator"), py::arg("field_order"), py::arg("length"));

    m.def(
        "distance_enumerator",
        [](const std::vector<std::vector<unsigned>>& words, unsigned alphabet) {
            return vector_out(kw::distance_enumerator(words_in(words, alphabet)));
        },
        py::arg("words"), py::arg("alphabet"));

    m.def(
        "delsarte_check",
        [](const std::vector<std::vector<unsigned>>& words, unsigned alphabet) {
            return kw::delsarte_check(words_in(words, alphabet), alphabet);
        },
        py::arg("words"), py::arg("alphabet"));

    m.def("enumerate_multiindices", &kw::enumerate_multiindices, py::arg("variables"),
          py::arg("level"), "All exponent tuples of the given total degree, descending lex");

    m.def(
        "induced_matrix",
        [](const StringMatrix& base, unsigned level) {
            return matrix_out(kw::induced_matrix(matrix_in(base), level).matrix);
        },
        py::arg("base"), py::arg("level"),
        "Symmetric-power representation of a base matrix at a level");

    m.def(
        "transpose_lemma_defect_nonzeros",
        [](const StringMatrix& base, unsigned level) {
            return kw::transpose_lemma_defect(matrix_in(base), level).nonzero_count();
        },
        py::arg("base"), py::arg("level"));

    m.def(
        "reflection_from_vector",
        [](const StringVector& v) { return matrix_out(kw::reflection_from_vector(vector_in(v))); },
        py::arg("v"));

    py::class_<kw::MultivariateKravchuk>(m, "MultivariateKravchuk")
        .def_readonly("dimension", &kw::MultivariateKravchuk::dimension)
        .def_readonly("level", &kw::MultivariateKravchuk::level)
        .def_property_readonly("ordering",
                               [](const kw::MultivariateKravchuk& mk) { return mk.ordering; })
        .def_property_readonly(
            "phi", [](const kw::MultivariateKravchuk& mk) { return matrix_out(mk.phi); })
        .def_property_readonly(
            "weights",
            [](const kw::MultivariateKravchuk& mk) { return matrix_out(mk.weight_diagonal); })
        .def_property_readonly(
            "norms", [](const kw::MultivariateKravchuk& mk) { return matrix_out(mk.norm_diagonal); })
        .def_property_readonly(
            "norm_base",
            [](const kw::MultivariateKravchuk& mk) { return vector_out(mk.norm_base); })
        .def("__repr__", [](const kw::MultivariateKravchuk& mk) {
            return "MultivariateKravchuk(d=" + std::to_string(mk.dimension) +
                   ", N=" + std::to_string(mk.level) + ")";
        });

    m.def(
        "build_multivariate",
        [](const StringMatrix& base, const StringVector& probabilities, unsigned level) {
            return kw::build_multivariate(matrix_in(base), vector_in(probabilities), level);
        },
        py::arg("base"), py::arg("probabilities"), py::arg("level"));

    m.def("multivariate_defect_nonzeros", [](const kw::MultivariateKravchuk& mk) {
        return kw::multivariate_orthogonality_defect(mk).nonzero_count();
    });

    m.def("multivariate_inverse", [](const kw::MultivariateKravchuk& mk) {
        return matrix_out(kw::multivariate_inverse(mk));
    });

    m.def(
        "multivariate_transform",
        [](const kw::MultivariateKravchuk& mk, const StringVector& data) {
            return vector_out(kw::multivariate_transform(mk, vector_in(data)));
        },
        py::arg("mk"), py::arg("data"));

    m.attr("__version__") = "0.1.0";
}
