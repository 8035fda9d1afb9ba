#pragma once

#include <json.hpp>

#include "bialg/poincare.hpp"

namespace bialg {

/// {"degree": k, "terms": [{"indices": [i, ...], "coeff": "poly"}]}
nlohmann::json multivector_to_json(const MultiVector& u);
MultiVector multivector_from_json(const AlgebraRef& alg, const nlohmann::json& j);

/// Same format, but terms may also use {"wedge": ["e+", "X+"], ...} with the
/// named generators of an inhomogeneous algebra.
MultiVector multivector_from_json(const Inhomogeneous& a, const nlohmann::json& j);

/// {"dim": n, "labels": [...], "brackets": [{"i":, "j":, "coeffs": {"k": "p/q"}}],
///  "grading": {"V": [...], "h": [...]}}; omitted pairs are zero.
AlgebraRef algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const AlgebraRef& alg);

/// r-matrix document: {"algebra": {"p":, "q":}, "params": [...], "multivector": {...}}
struct RMatrixFile {
  Inhomogeneous inhom;
  MultiVector r;
  std::vector<std::string> params;
};
RMatrixFile rmatrix_from_json(const nlohmann::json& j);
nlohmann::json rmatrix_to_json(const Inhomogeneous& a, const MultiVector& r);

nlohmann::json load_json_file(const std::string& path);

}  // namespace bialg
