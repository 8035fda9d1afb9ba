#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bialg/automorphisms.hpp"
#include "bialg/catalog.hpp"
#include "bialg/cohomology.hpp"
#include "bialg/json_io.hpp"

namespace py = pybind11;
using namespace bialg;

namespace {

Scalar scalar_of(const py::object& obj) {
  if (py::isinstance<py::int_>(obj)) return Scalar(obj.cast<int>());
  return Scalar::parse(obj.cast<std::string>());
}

py::dict verdict_to_dict(const Inhomogeneous& a, const GcybeVerdict& v) {
  py::dict out;
  out["in_span"] = v.in_span;
  py::list coords;
  for (const Scalar& c : v.coords) coords.append(c.str());
  out["t"] = coords;
  out["bracket"] = a.format(v.bracket);
  out["residual_terms"] = v.residual.term_count();
  return out;
}

}  // namespace

PYBIND11_MODULE(_bialg, m) {
  m.doc() = "Exact Lie bialgebra calculus on inhomogeneous orthogonal algebras";

  py::register_exception<Error>(m, "BialgError");

  py::class_<MultiVector>(m, "MultiVector")
      .def_property_readonly("degree", &MultiVector::degree)
      .def("is_zero", &MultiVector::is_zero)
      .def("term_count", &MultiVector::term_count)
      .def("is_rational", &MultiVector::is_rational)
      .def("variables",
           [](const MultiVector& v) {
             py::list out;
             for (const std::string& name : v.variables()) out.append(name);
             return out;
           })
      .def("__add__", [](const MultiVector& a, const MultiVector& b) { return a + b; })
      .def("__sub__", [](const MultiVector& a, const MultiVector& b) { return a - b; })
      .def("__neg__", [](const MultiVector& a) { return -a; })
      .def("__mul__",
           [](const MultiVector& a, const py::object& c) { return a.scaled(scalar_of(c)); })
      .def("__rmul__",
           [](const MultiVector& a, const py::object& c) { return a.scaled(scalar_of(c)); })
      .def("__eq__", [](const MultiVector& a, const MultiVector& b) { return a == b; })
      .def("substitute",
           [](const MultiVector& v, const std::map<std::string, std::string>& bindings) {
             std::map<std::string, Scalar> subs;
             for (const auto& [k, s] : bindings) subs.emplace(k, Scalar::parse(s));
             return v.substitute(subs);
           })
      .def("__repr__", [](const MultiVector& v) { return v.str(); });

  py::class_<Inhomogeneous>(m, "Algebra")
      .def_property_readonly("dim", [](const Inhomogeneous& a) { return a.alg->dim(); })
      .def_property_readonly("dim_v", &Inhomogeneous::dim_v)
      .def_property_readonly("p", [](const Inhomogeneous& a) { return a.p; })
      .def_property_readonly("q", [](const Inhomogeneous& a) { return a.q; })
      .def("labels", [](const Inhomogeneous& a) { return a.alg->labels(); })
      .def("named", &Inhomogeneous::named_element, py::arg("name"),
           "named generator, b_x bivector or the invariant Omega")
      .def("e", &Inhomogeneous::e, py::arg("j"))
      .def("format", &Inhomogeneous::format)
      .def("zero",
           [](const Inhomogeneous& a, int degree) { return MultiVector(a.alg, degree); },
           py::arg("degree") = 2)
      .def("from_json",
           [](const Inhomogeneous& a, const std::string& text) {
             return multivector_from_json(a, nlohmann::json::parse(text));
           })
      .def("to_json", [](const Inhomogeneous& a, const MultiVector& v) {
        return multivector_to_json(v).dump();
      });

  m.def("make_algebra", &make_inhomogeneous, py::arg("p"), py::arg("q"));

  m.def("wedge", &wedge);
  m.def("schouten_bracket", &schouten_bracket);
  m.def("bracket", &bracket);
  m.def("act", &act);
  m.def("b_x", &b_x);
  m.def("omega", [](const Inhomogeneous& a) { return a.named_element("Omega"); });

  m.def("split2", [](const MultiVector& r) {
    GradedComponents2 parts = split2(r);
    return py::make_tuple(parts.a, parts.b, parts.c);
  });
  m.def("split3", [](const MultiVector& w) {
    GradedComponents3 parts = split3(w);
    return py::make_tuple(parts.vvv, parts.vvh, parts.vhh, parts.hhh);
  });

  m.def("gcybe", [](const Inhomogeneous& a, const MultiVector& r) {
    Subspace inv = invariants(a.alg, ModuleSpec::lambda_g(3), Acting::G);
    std::vector<MultiVector> basis;
    MultiVector omega = a.named_element("Omega");
    if (inv.dim() == 1 && inv.contains_vector(omega.rational_coordinates())) {
      basis.push_back(omega);
    } else {
      RealizedModule mod = realize(a.alg, ModuleSpec::lambda_g(3));
      for (int i = 0; i < inv.dim(); ++i)
        basis.push_back(from_module_coordinates(a.alg, mod, inv.basis.row(i)));
    }
    return verdict_to_dict(a, gcybe_check(r, basis));
  });

  m.def("cohomology_dims",
        [](const Inhomogeneous& a, const std::string& module, const std::string& acting) {
          ModuleSpec spec = ModuleSpec::parse(module);
          Acting act = parse_acting(acting);
          py::dict out;
          out["Z"] = cocycle_space(a.alg, spec, act).dim();
          out["B"] = coboundary_space(a.alg, spec, act).dim();
          out["H"] = cohomology_dim(a.alg, spec, act);
          out["invariants"] = invariants(a.alg, spec, act).dim();
          return out;
        },
        py::arg("algebra"), py::arg("module") = "L2g", py::arg("acting") = "g");

  m.def("invariants_dim",
        [](const Inhomogeneous& a, const std::string& module, const std::string& acting) {
          return invariants(a.alg, ModuleSpec::parse(module), parse_acting(acting)).dim();
        },
        py::arg("algebra"), py::arg("module"), py::arg("acting") = "g");

  m.def("intertwiner_dim",
        [](const Inhomogeneous& a, const std::string& e1, const std::string& e2) {
          return intertwiner_space(a.alg, ModuleSpec::parse(e1), ModuleSpec::parse(e2))
              .flat.dim();
        });

  m.def("solve_b_cocycle_dim", [](const Inhomogeneous& a, const MultiVector& c) {
    return solve_b_cocycle(a.alg, c).dim();
  });

  m.def("triangular_decomposition", [](const Inhomogeneous& a, const MultiVector& b) {
    TriangularDecomposition d = triangular_decomposition(a.alg, b);
    py::dict out;
    out["dim_v0"] = d.v0.dim();
    out["dim_h0"] = d.h0.dim();
    out["h0_subalgebra"] = d.h0_subalgebra;
    out["action_closed"] = d.action_closed;
    return out;
  });

  m.def("formula_check",
        [](const MultiVector& r, const MultiVector& a, const MultiVector& b,
           const MultiVector& g) { return formula_check(r, a, b, g).str(); });

  m.def("covector", [](const Inhomogeneous& a, const std::string& name) {
    return a.named_covector(name);
  });

  m.def("verify_catalog",
        [](const Inhomogeneous& a, const std::string& dir, const std::string& mode,
           int samples, unsigned long long seed) {
          std::vector<CatalogEntry> entries =
              load_catalog(dir.empty() ? default_catalog_dir() : dir);
          VerifySummary summary = verify_all(
              a, entries,
              mode == "sampled" ? BindingMode::Sampled : BindingMode::Symbolic, samples,
              seed);
          py::list reports;
          for (const VerificationReport& r : summary.reports) {
            py::dict d;
            d["id"] = r.id;
            d["pass"] = r.pass;
            d["t"] = r.t_solved.str();
            d["sample"] = r.sample;
            reports.append(d);
          }
          py::dict out;
          out["total"] = summary.total;
          out["passed"] = summary.passed;
          out["reports"] = reports;
          return out;
        },
        py::arg("algebra"), py::arg("dir") = "", py::arg("mode") = "symbolic",
        py::arg("samples") = 3, py::arg("seed") = 0);

  m.def("normalize_row2", [](const Inhomogeneous& a, const MultiVector& r) {
    NormalizeResult result = normalize_row2(a, r);
    py::dict out;
    out["r"] = result.r;
    out["form"] = result.final_form;
    out["steps"] = result.steps;
    out["obstruction"] =
        result.obstruction ? py::object(py::str(*result.obstruction)) : py::none();
    return out;
  });
}
