#pragma once

#include <json.hpp>

#include "bialg/poincare.hpp"
#include "bialg/schouten.hpp"

namespace bialg {

/// One summand of an a/b/c builder: either a wedge of named generators or a
/// named bivector, scaled by a polynomial in the entry parameters (enum names
/// may appear and are substituted before building).
struct CatalogTerm {
  std::vector<std::string> wedge;
  std::string element;
  std::string coeff = "1";
};

/// A discrete parameter ranging over finitely many rationals; every
/// combination is verified separately.
struct EnumParam {
  std::string name;
  std::vector<Rat> values;
};

struct CatalogEntry {
  std::string id;
  std::vector<std::string> params;
  std::vector<EnumParam> enums;
  std::vector<CatalogTerm> a, b, c;
  std::string expected_t = "0";
  std::string display;
};

CatalogEntry entry_from_json(const nlohmann::json& j);
std::vector<CatalogEntry> load_catalog(const std::string& dir);

/// BIALG_CATALOG_DIR when set, otherwise ./data/catalog (and the install
/// layout ../share/bialg/catalog next to the executable directory).
std::string default_catalog_dir();

enum class BindingMode { Symbolic, Sampled };

struct BuiltEntry {
  MultiVector a, b, c;
  Scalar expected_t;
  std::map<std::string, Rat> enum_choice;
};

std::vector<std::map<std::string, Rat>> enum_combinations(const CatalogEntry& entry);

/// Builds the triple; `bindings` may give rational values for any subset of
/// the parameters (missing ones stay symbolic). Unknown ids and missing enum
/// values throw UnknownEntry / MissingParameter.
BuiltEntry build_entry(const Inhomogeneous& a, const CatalogEntry& entry,
                       const std::map<std::string, Scalar>& bindings,
                       const std::map<std::string, Rat>& enum_choice);

struct EquationReport {
  std::string name;  // "[c,c]", "[b,c]", "2[a,c]+[b,b]-t*Omega", "[a,b]"
  bool zero = false;
  MultiVector residual;
};

struct VerificationReport {
  std::string id;
  std::map<std::string, Rat> enum_choice;
  int sample = -1;  // -1: symbolic
  bool pass = false;
  Scalar t_solved;
  Scalar t_expected;
  bool t_matches = false;
  std::vector<EquationReport> equations;
};

/// Verifies the four bracket equations with t solved from the invariant
/// component; one report per enum combination.
std::vector<VerificationReport> verify_entry(const Inhomogeneous& a,
                                             const CatalogEntry& entry,
                                             const std::map<std::string, Scalar>& bindings);

struct VerifySummary {
  int total = 0;
  int passed = 0;
  std::vector<VerificationReport> reports;
  bool all_pass() const { return total == passed; }
};

/// Symbolic mode proves the identities for all parameter values; sampled mode
/// instantiates every parameter at seeded random rationals, `samples` times.
VerifySummary verify_all(const Inhomogeneous& a, const std::vector<CatalogEntry>& entries,
                         BindingMode mode, int samples = 3,
                         unsigned long long seed = 0);

struct TriangularDecomposition {
  Subspace v0;  // b(h*), in full g coordinates
  Subspace h0;  // b(V*), in full g coordinates
  bool h0_subalgebra = false;
  bool action_closed = false;  // [h0, V0] <= V0
};

/// Image decomposition of a rational mixed-block bivector.
TriangularDecomposition triangular_decomposition(const AlgebraRef& alg,
                                                 const MultiVector& b);

}  // namespace bialg
