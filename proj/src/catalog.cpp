#include "bialg/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "bialg/json_io.hpp"

namespace bialg {

using nlohmann::json;

CatalogEntry entry_from_json(const json& j) {
  CatalogEntry entry;
  entry.id = j.at("id").get<std::string>();
  if (j.contains("params")) entry.params = j.at("params").get<std::vector<std::string>>();
  if (j.contains("enums"))
    for (const json& e : j.at("enums")) {
      EnumParam ep;
      ep.name = e.at("name").get<std::string>();
      for (const json& v : e.at("values")) ep.values.push_back(parse_rat(v.get<std::string>()));
      entry.enums.push_back(std::move(ep));
    }
  auto read_terms = [&](const char* key) {
    std::vector<CatalogTerm> out;
    if (!j.contains(key)) return out;
    for (const json& t : j.at(key)) {
      CatalogTerm term;
      if (t.contains("wedge")) term.wedge = t.at("wedge").get<std::vector<std::string>>();
      if (t.contains("element")) term.element = t.at("element").get<std::string>();
      if (term.wedge.empty() == term.element.empty())
        throw ParseError("catalog term needs exactly one of 'wedge' or 'element'");
      term.coeff = t.value("coeff", "1");
      out.push_back(std::move(term));
    }
    return out;
  };
  entry.a = read_terms("a");
  entry.b = read_terms("b");
  entry.c = read_terms("c");
  entry.expected_t = j.value("expected_t", "0");
  entry.display = j.value("display", "");
  return entry;
}

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError("catalog directory '" + dir + "' not found");
  std::vector<CatalogEntry> entries;
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  for (const std::string& f : files) entries.push_back(entry_from_json(load_json_file(f)));

  // table rows in numeric order first, then the kappa families by id
  auto key = [](const CatalogEntry& e) {
    if (e.id.rfind("row", 0) == 0)
      return std::pair<int, std::string>(std::stoi(e.id.substr(3)), "");
    return std::pair<int, std::string>(1000, e.id);
  };
  std::sort(entries.begin(), entries.end(),
            [&](const CatalogEntry& x, const CatalogEntry& y) { return key(x) < key(y); });
  return entries;
}

std::string default_catalog_dir() {
  if (const char* env = std::getenv("BIALG_CATALOG_DIR")) return env;
  namespace fs = std::filesystem;
  for (const char* candidate : {"data/catalog", "../data/catalog", "../share/bialg/catalog"})
    if (fs::is_directory(candidate)) return candidate;
  return "data/catalog";
}

std::vector<std::map<std::string, Rat>> enum_combinations(const CatalogEntry& entry) {
  std::vector<std::map<std::string, Rat>> out{{}};
  for (const EnumParam& ep : entry.enums) {
    std::vector<std::map<std::string, Rat>> next;
    for (const auto& base : out)
      for (const Rat& v : ep.values) {
        auto copy = base;
        copy[ep.name] = v;
        next.push_back(std::move(copy));
      }
    out = std::move(next);
  }
  return out;
}

BuiltEntry build_entry(const Inhomogeneous& a, const CatalogEntry& entry,
                       const std::map<std::string, Scalar>& bindings,
                       const std::map<std::string, Rat>& enum_choice) {
  std::map<std::string, Scalar> substitution;
  for (const EnumParam& ep : entry.enums) {
    auto it = enum_choice.find(ep.name);
    if (it == enum_choice.end())
      throw MissingParameter("enum '" + ep.name + "' of entry '" + entry.id +
                             "' has no value");
    substitution.emplace(ep.name, Scalar(it->second));
  }
  for (const auto& [name, value] : bindings) {
    if (std::find(entry.params.begin(), entry.params.end(), name) == entry.params.end())
      throw MissingParameter("'" + name + "' is not a parameter of entry '" + entry.id +
                             "'");
    substitution.emplace(name, value);
  }

  auto build_block = [&](const std::vector<CatalogTerm>& terms) {
    MultiVector out(a.alg, 2);
    for (const CatalogTerm& term : terms) {
      Scalar coeff = Scalar::parse(term.coeff).substitute(substitution);
      MultiVector factor(a.alg, 0);
      if (!term.element.empty()) {
        factor = a.named_element(term.element);
      } else {
        factor = MultiVector(a.alg, 0);
        factor.add_term(std::initializer_list<int>{}, Scalar(1));
        for (const std::string& name : term.wedge)
          factor = wedge(factor, a.named_element(name));
      }
      if (factor.degree() != 2)
        throw ParseError("catalog term of entry '" + entry.id + "' is not a bivector");
      out += factor.scaled(coeff);
    }
    return out;
  };
  BuiltEntry built{build_block(entry.a), build_block(entry.b), build_block(entry.c),
                   Scalar::parse(entry.expected_t).substitute(substitution), enum_choice};

  // sanity: blocks land where they claim to
  GradedComponents2 ga = split2(built.a), gb = split2(built.b), gc = split2(built.c);
  if (!ga.b.is_zero() || !ga.c.is_zero() || !gb.a.is_zero() || !gb.c.is_zero() ||
      !gc.a.is_zero() || !gc.b.is_zero())
    throw ParseError("entry '" + entry.id + "' has a block-impure a/b/c component");
  return built;
}

std::vector<VerificationReport> verify_entry(const Inhomogeneous& a,
                                             const CatalogEntry& entry,
                                             const std::map<std::string, Scalar>& bindings) {
  MultiVector omega = a.named_element("Omega");
  std::vector<VerificationReport> reports;
  for (const auto& enum_choice : enum_combinations(entry)) {
    BuiltEntry built = build_entry(a, entry, bindings, enum_choice);
    VerificationReport report;
    report.id = entry.id;
    report.enum_choice = enum_choice;
    report.t_expected = built.expected_t;

    MultiVector cc = schouten_bracket(built.c, built.c);
    MultiVector bc = schouten_bracket(built.b, built.c);
    MultiVector mid = schouten_bracket(built.a, built.c).scaled(Scalar(2)) +
                      schouten_bracket(built.b, built.b);
    MultiVector ab = schouten_bracket(built.a, built.b);

    // solve t against the invariant component
    QVec om_coords = omega.rational_coordinates();
    int pivot = 0;
    while (om_coords[pivot] == 0) ++pivot;
    std::vector<Scalar> mid_coords = mid.coordinates();
    report.t_solved = mid_coords[pivot].div_rat(om_coords[pivot]);
    MultiVector mid_residual = mid - omega.scaled(report.t_solved);
    report.t_matches = report.t_solved == built.expected_t;

    report.equations.push_back({"[c,c]", cc.is_zero(), cc});
    report.equations.push_back({"[b,c]", bc.is_zero(), bc});
    report.equations.push_back(
        {"2[a,c]+[b,b]-t*Omega", mid_residual.is_zero(), mid_residual});
    report.equations.push_back({"[a,b]", ab.is_zero(), ab});
    report.pass = report.t_matches;
    for (const EquationReport& eq : report.equations) report.pass = report.pass && eq.zero;
    reports.push_back(std::move(report));
  }
  return reports;
}

VerifySummary verify_all(const Inhomogeneous& a, const std::vector<CatalogEntry>& entries,
                         BindingMode mode, int samples, unsigned long long seed) {
  VerifySummary summary;
  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    // nonzero rationals with small numerator and denominator
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    int n = num(rng);
    if (n == 0) n = 1;
    return frac(n, den(rng));
  };
  // One entry counts as passed when every enum variant (and every sample, in
  // sampled mode) passes.
  for (const CatalogEntry& entry : entries) {
    bool entry_pass = true;
    if (mode == BindingMode::Symbolic) {
      for (auto& report : verify_entry(a, entry, {})) {
        entry_pass = entry_pass && report.pass;
        summary.reports.push_back(std::move(report));
      }
    } else {
      for (int s = 0; s < samples; ++s) {
        std::map<std::string, Scalar> bindings;
        for (const std::string& p : entry.params) bindings.emplace(p, Scalar(draw()));
        for (auto& report : verify_entry(a, entry, bindings)) {
          report.sample = s;
          entry_pass = entry_pass && report.pass;
          summary.reports.push_back(std::move(report));
        }
      }
    }
    ++summary.total;
    if (entry_pass) ++summary.passed;
  }
  return summary;
}

TriangularDecomposition triangular_decomposition(const AlgebraRef& alg,
                                                 const MultiVector& b) {
  if (b.degree() != 2 || b.dual()) throw NotMixedBlock("expected a bivector");
  if (!b.is_rational()) throw NotMixedBlock("expected rational coefficients");
  GradedComponents2 parts = split2(b);
  if (!parts.a.is_zero() || !parts.c.is_zero())
    throw NotMixedBlock("bivector has components outside V ^ h");

  int n = alg->dim();
  const Grading& grading = alg->grading();

  EchelonAccumulator v0_acc(n), h0_acc(n);
  auto image = [&](int dual_index) {
    MultiVector xi = MultiVector::basis_element(alg, {dual_index}, true);
    return contract(xi, b);
  };
  for (int hidx : grading.h) v0_acc.insert(image(hidx).rational_coordinates());
  for (int vidx : grading.v) h0_acc.insert(image(vidx).rational_coordinates());

  TriangularDecomposition out{v0_acc.subspace(), h0_acc.subspace(), true, true};

  auto basis_vector = [&](const Subspace& s, int i) {
    return MultiVector::from_rational_coordinates(alg, 1, s.basis.row(i));
  };
  for (int i = 0; i < out.h0.dim() && out.h0_subalgebra; ++i)
    for (int j = i + 1; j < out.h0.dim() && out.h0_subalgebra; ++j) {
      MultiVector br = bracket(basis_vector(out.h0, i), basis_vector(out.h0, j));
      if (!out.h0.contains_vector(br.rational_coordinates())) out.h0_subalgebra = false;
    }
  for (int i = 0; i < out.h0.dim() && out.action_closed; ++i)
    for (int j = 0; j < out.v0.dim() && out.action_closed; ++j) {
      MultiVector br = bracket(basis_vector(out.h0, i), basis_vector(out.v0, j));
      if (!out.v0.contains_vector(br.rational_coordinates())) out.action_closed = false;
    }
  return out;
}

}  // namespace bialg
