#pragma once

#include <json.hpp>

#include "pushtasep/sparse.hpp"

namespace pushtasep {

// Shared sparse-matrix wire format:
//   {"rows": R, "cols": C, "entries": [[row, col, "p/q"], ...], ...meta}
// Polynomial entries are coefficient lists ["c0","c1",...] instead of a
// single string. Entries are emitted in row-major order, so identical
// objects serialize to identical bytes.
nlohmann::json matrix_to_json(const SparseMatrix<Rational>& m, nlohmann::json meta = {});
nlohmann::json matrix_to_json(const SparseMatrix<PolyZ>& m, nlohmann::json meta = {});

SparseMatrix<Rational> matrix_from_json(const nlohmann::json& j);
SparseMatrix<PolyZ> poly_matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const RationalVector& v);
RationalVector vector_from_json(const nlohmann::json& j);

}  // namespace pushtasep
