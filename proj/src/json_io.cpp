#include "bialg/json_io.hpp"

#include <fstream>

namespace bialg {

using nlohmann::json;

json multivector_to_json(const MultiVector& u) {
  json terms = json::array();
  for (const auto& [t, c] : u.terms()) {
    json indices = json::array();
    for (int i = 0; i < t.k; ++i) indices.push_back(t.idx[i]);
    terms.push_back({{"indices", indices}, {"coeff", c.str()}});
  }
  return {{"degree", u.degree()}, {"terms", terms}};
}

namespace {

MultiVector term_list_from_json(const AlgebraRef& alg, const Inhomogeneous* named,
                                const json& j) {
  if (!j.contains("degree") || !j.contains("terms"))
    throw ParseError("multivector document needs 'degree' and 'terms'");
  int degree = j.at("degree").get<int>();
  MultiVector out(alg, degree);
  for (const json& term : j.at("terms")) {
    Scalar coeff = Scalar::parse(term.at("coeff").get<std::string>());
    if (term.contains("indices")) {
      std::vector<int> idx = term.at("indices").get<std::vector<int>>();
      if (static_cast<int>(idx.size()) != degree)
        throw ParseError("term index count does not match the degree");
      out.add_term(std::span<const int>(idx), coeff);
    } else if (term.contains("wedge")) {
      if (!named) throw ParseError("named factors need an inhomogeneous algebra");
      MultiVector acc(alg, 0);
      acc.add_term(std::initializer_list<int>{}, Scalar(1));
      for (const json& f : term.at("wedge"))
        acc = wedge(acc, named->named_element(f.get<std::string>()));
      if (acc.degree() != degree) throw ParseError("wedge degree does not match 'degree'");
      out += acc.scaled(coeff);
    } else {
      throw ParseError("term needs 'indices' or 'wedge'");
    }
  }
  return out;
}

}  // namespace

MultiVector multivector_from_json(const AlgebraRef& alg, const json& j) {
  return term_list_from_json(alg, nullptr, j);
}

MultiVector multivector_from_json(const Inhomogeneous& a, const json& j) {
  return term_list_from_json(a.alg, &a, j);
}

AlgebraRef algebra_from_json(const json& j) {
  int n = j.at("dim").get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<std::string>>();
  else
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n)
    throw ParseError("label count does not match dim");

  std::vector c(n, std::vector(n, std::vector<Rat>(n)));
  for (const json& b : j.value("brackets", json::array())) {
    int i = b.at("i").get<int>(), jj = b.at("j").get<int>();
    if (i < 0 || jj < 0 || i >= n || jj >= n)
      throw ParseError("bracket index out of range");
    for (const auto& [key, value] : b.at("coeffs").items()) {
      int k = std::stoi(key);
      if (k < 0 || k >= n) throw ParseError("bracket target index out of range");
      Rat q = parse_rat(value.get<std::string>());
      c[i][jj][k] = q;
      c[jj][i][k] = -q;
    }
  }
  std::optional<Grading> grading;
  if (j.contains("grading")) {
    Grading g;
    g.v = j.at("grading").at("V").get<std::vector<int>>();
    g.h = j.at("grading").at("h").get<std::vector<int>>();
    grading = g;
  }
  return LieAlgebra::build(std::move(labels), c, grading);
}

json algebra_to_json(const AlgebraRef& alg) {
  int n = alg->dim();
  json brackets = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SparseVec v = alg->bracket_basis(i, j);
      if (v.empty()) continue;
      json coeffs = json::object();
      for (const auto& [k, c] : v) coeffs[std::to_string(k)] = rat_str(c);
      brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  json out = {{"dim", n}, {"labels", alg->labels()}, {"brackets", brackets}};
  if (alg->graded()) {
    out["grading"] = {{"V", alg->grading().v}, {"h", alg->grading().h}};
  }
  return out;
}

RMatrixFile rmatrix_from_json(const json& j) {
  if (!j.contains("algebra")) throw ParseError("r-matrix document needs 'algebra'");
  int p = j.at("algebra").at("p").get<int>();
  int q = j.at("algebra").at("q").get<int>();
  Inhomogeneous a = make_inhomogeneous(p, q);
  std::vector<std::string> params;
  if (j.contains("params")) params = j.at("params").get<std::vector<std::string>>();
  MultiVector r = multivector_from_json(a, j.at("multivector"));
  for (const std::string& v : r.variables())
    if (std::find(params.begin(), params.end(), v) == params.end())
      throw ParseError("parameter '" + v + "' is not declared in the header");
  return RMatrixFile{std::move(a), std::move(r), std::move(params)};
}

json rmatrix_to_json(const Inhomogeneous& a, const MultiVector& r) {
  std::vector<std::string> params;
  for (const std::string& v : r.variables()) params.push_back(v);
  return {{"algebra", {{"p", a.p}, {"q", a.q}}},
          {"params", params},
          {"multivector", multivector_to_json(r)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("parse error in '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace bialg
