#include "krawtchouk/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "krawtchouk/univariate.hpp"

namespace krawtchouk {

nlohmann::json matrix_to_json(const DenseMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

DenseMatrix matrix_from_json(const nlohmann::json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const nlohmann::json& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("matrix JSON: row count mismatch");
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const nlohmann::json& row = entries.at(i);
        if (row.size() != cols) throw std::invalid_argument("matrix JSON: column count mismatch");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = parse_rational(row.at(k).get<std::string>());
    }
    return m;
}

std::string matrix_to_csv(const DenseMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ',';
            out << to_string(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

DenseMatrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        rows.push_back(parse_rational_list(line));
    }
    if (rows.empty()) throw std::invalid_argument("matrix CSV: no rows");
    const std::size_t cols = rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("matrix CSV: ragged rows");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return DenseMatrix(rows.size(), cols, std::move(entries));
}

nlohmann::json basis_to_json(const KravchukBasis& basis) {
    return nlohmann::json{{"N", basis.level},
                          {"p", to_string(basis.p)},
                          {"Phi", matrix_to_json(basis.phi)},
                          {"B", matrix_to_json(basis.weights)},
                          {"Gamma", matrix_to_json(basis.norms)}};
}

KravchukBasis basis_from_json(const nlohmann::json& j) {
    KravchukBasis basis;
    basis.level = j.at("N").get<unsigned>();
    basis.p = parse_rational(j.at("p").get<std::string>());
    basis.q = Rational(1) - basis.p;
    basis.phi = matrix_from_json(j.at("Phi"));
    basis.weights = matrix_from_json(j.at("B"));
    basis.norms = matrix_from_json(j.at("Gamma"));
    const std::size_t n = basis.level + 1;
    if (basis.phi.rows() != n || basis.phi.cols() != n || basis.weights.rows() != n ||
        basis.norms.rows() != n)
        throw std::invalid_argument("basis JSON: matrix dimensions do not match N");
    return basis;
}

nlohmann::json vector_to_json(const std::vector<Rational>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& x : v) arr.push_back(to_string(x));
    return arr;
}

std::vector<Rational> vector_from_json(const nlohmann::json& j) {
    std::vector<Rational> v;
    v.reserve(j.size());
    for (const auto& item : j) v.push_back(parse_rational(item.get<std::string>()));
    return v;
}

std::string vector_to_csv(const std::vector<Rational>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out << ',';
        out << to_string(v[i]);
    }
    return out.str();
}

DenseMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        nlohmann::json j;
        in >> j;
        return matrix_from_json(j);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return matrix_from_csv(buffer.str());
}

}  // namespace krawtchouk
