#pragma once

#include <optional>
#include <string>

#include "nilgeo/algebra.hpp"

namespace nilgeo {

/// Parsed content of an algebra JSON document:
///   { "dim_v": n, "dim_z": m,
///     "j": [m] n x n row-major matrices, entries "p/q" strings or ints,
///     or "brackets": [ {"a": int, "b": int, "z": ["p/q" x m]}, ... ]
///     (exactly one of "j"/"brackets"),
///     optional "lattice": {"M_scale": ["p/q" x n], "L_scale": ["p/q" x m]} }
/// Scale vectors describe diagonal lattices in v and z.
struct AlgebraFile {
  MetricTwoStepAlgebra algebra;
  std::optional<QVec> lattice_M_scale;
  std::optional<QVec> lattice_L_scale;
};

/// Parses a JSON document; schema violations raise AlgebraError with the
/// JSON path of the offending node (e.g. "$.j[0][1][2]").
AlgebraFile load_algebra_json(const std::string& text);

/// Reads and parses a file; nonexistent or unreadable paths raise
/// AlgebraError.
AlgebraFile load_algebra_file(const std::string& path);

/// Serializes in j-map form; round-trips through load_algebra_json.
std::string algebra_to_json(const MetricTwoStepAlgebra& A);

}  // namespace nilgeo
