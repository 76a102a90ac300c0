#pragma once

#include <string>
#include <json.hpp>

#include "krawtchouk/matrix.hpp"

namespace krawtchouk {

struct KravchukBasis;

/// JSON wire format: {"rows": r, "cols": c, "entries": [["num/den", ...], ...]}
/// with one inner array per row. Entries are exact strings, so the round trip
/// is bit-exact.
nlohmann::json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const nlohmann::json& j);

/// CSV wire format: one line per row, comma-separated "num/den" tokens.
std::string matrix_to_csv(const DenseMatrix& m);
DenseMatrix matrix_from_csv(const std::string& text);

/// Basis dump: {"N": n, "p": "num/den", "Phi": ..., "B": ..., "Gamma": ...}.
nlohmann::json basis_to_json(const KravchukBasis& basis);
KravchukBasis basis_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const std::vector<Rational>& v);
std::vector<Rational> vector_from_json(const nlohmann::json& j);

std::string vector_to_csv(const std::vector<Rational>& v);

/// Loads a matrix from a file, dispatching on the ".json" / ".csv" suffix.
DenseMatrix load_matrix(const std::string& path);

}  // namespace krawtchouk
