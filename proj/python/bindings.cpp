#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geographer/document.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using namespace geographer;

py::object parse_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::vector<Int>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<Int>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

RealizeOptions options(std::optional<int> genus) {
  RealizeOptions o;
  o.genus = genus;
  return o;
}

}  // namespace

PYBIND11_MODULE(_geographer, m) {
  m.doc() = "Certified realizations of (signature, b1, degeneracy) triples with kappa = 1";

  py::register_exception<ConsistencyError>(m, "ConsistencyError");

  py::class_<Triple>(m, "Triple")
      .def(py::init<Int, Int, Int>(), "a"_a, "b"_a, "c"_a)
      .def_readonly("a", &Triple::a)
      .def_readonly("b", &Triple::b)
      .def_readonly("c", &Triple::c)
      .def("__eq__", [](const Triple& x, const Triple& y) { return x == y; })
      .def("__iter__", [](const Triple& t) { return py::iter(py::make_tuple(t.a, t.b, t.c)); })
      .def("__repr__", [](const Triple& t) { return "Triple" + t.to_string(); });

  py::class_<InvariantCertificate>(m, "Certificate")
      .def_readonly("manifold", &InvariantCertificate::manifold)
      .def_readonly("sigma", &InvariantCertificate::sigma)
      .def_readonly("chi", &InvariantCertificate::chi)
      .def_readonly("b1", &InvariantCertificate::b1)
      .def_readonly("b_plus", &InvariantCertificate::b_plus)
      .def_readonly("b_minus", &InvariantCertificate::b_minus)
      .def_readonly("k_squared", &InvariantCertificate::k_squared)
      .def_readonly("degeneracy", &InvariantCertificate::degeneracy)
      .def_readonly("degeneracy_oracle", &InvariantCertificate::degeneracy_oracle)
      .def_readonly("nullity", &InvariantCertificate::nullity)
      .def_property_readonly("kappa", [](const InvariantCertificate& c) { return to_string(c.kappa); })
      .def_property_readonly("minimal", [](const InvariantCertificate& c) { return c.minimal.minimal; })
      .def_property_readonly("checks_pass", &InvariantCertificate::all_checks_pass)
      .def("to_dict", [](const InvariantCertificate& c) { return parse_json(to_json(c)); })
      .def("__repr__", [](const InvariantCertificate& c) { return "<Certificate " + c.manifold + ">"; });

  py::class_<Recipe>(m, "Recipe")
      .def_readonly("certificate", &Recipe::certificate)
      .def_readonly("realized", &Recipe::realized)
      .def_property_readonly("kind", &Recipe::kind)
      .def("describe", &Recipe::describe)
      .def("document", [](const Recipe& r) { return parse_json(to_json(make_document(r, "python"))); })
      .def("__repr__", [](const Recipe& r) { return "<Recipe " + r.describe() + ">"; });

  m.def("is_admissible", [](Int a, Int b, Int c) { return is_admissible({a, b, c}); }, "a"_a, "b"_a, "c"_a);
  m.def("is_null_admissible", [](Int a, Int b, Int c) { return is_null_admissible({a, b, c}); }, "a"_a, "b"_a,
        "c"_a);
  m.def(
      "realize", [](Int a, Int b, Int c, std::optional<int> genus) { return realize({a, b, c}, options(genus)); },
      "a"_a, "b"_a, "c"_a, "genus"_a = py::none(),
      "Recipe realizing an admissible (signature, b1, degeneracy) triple");
  m.def(
      "realize_null",
      [](Int a, Int b, Int c, std::optional<int> genus) -> py::object {
        NullRealization r = realize_null({a, b, c}, options(genus));
        if (auto* open = std::get_if<OpenCase>(&r)) return parse_json(to_json(*open));
        return py::cast(std::get<Recipe>(std::move(r)));
      },
      "a"_a, "b"_a, "c"_a, "genus"_a = py::none(),
      "Recipe with the given nullity, or a dict with status 'open'");
  m.def(
      "enumerate",
      [](Int sigma_min, Int b1_max) {
        std::vector<Recipe> out;
        for (auto& row : enumerate_region(sigma_min, b1_max)) out.push_back(std::move(row.recipe));
        return out;
      },
      "sigma_min"_a, "b1_max"_a);
  m.def("simply_connected_geography", &simply_connected_geography, "sigma"_a);

  m.def(
      "construct_bundle", [](int d, int k, int g, int e) { return construct(bundle_spec(d, k, g, e)); }, "d"_a, "k"_a,
      "g"_a, "e"_a);
  m.def(
      "fiber_sum",
      [](int n, int d, int k, int g) { return fiber_sum_invariants({EllipticSurface{n}, d, k, g}); }, "n"_a, "d"_a,
      "k"_a, "g"_a);
  m.def(
      "dolgachev_sum",
      [](int p, int q, int d, int k, int g) { return fiber_sum_invariants({DolgachevSurface{p, q}, d, k, g}); },
      "p"_a, "q"_a, "d"_a, "k"_a, "g"_a);
  m.def(
      "kodaira_classify",
      [](Int k2, Int k_dot_omega) -> std::optional<std::string> {
        const auto k = kodaira_classify(k2, k_dot_omega);
        return k ? std::optional<std::string>(to_string(*k)) : std::nullopt;
      },
      "k_squared"_a, "k_dot_omega"_a);

  m.def("intersection_form", [](int g) { return to_rows(intersection_form(g)); }, "genus"_a);
  m.def(
      "monodromy", [](int d, int k, int g) { return to_rows(compose_word(monodromy_word(d, k, g), g).entries); },
      "d"_a, "k"_a, "g"_a, "phi^* on H^1 of the genus-g surface in the dual symplectic basis");
  m.def(
      "invariant_subspace",
      [](int d, int k, int g) {
        return to_rows(invariant_subspace(compose_word(monodromy_word(d, k, g), g)).transpose());
      },
      "d"_a, "k"_a, "g"_a, "Basis vectors of ker(phi^* - 1)");
  m.def(
      "verify_grid",
      [](int grid_max) {
        const GridReport r = verify_bundle_grid(grid_max);
        py::list failures;
        for (const auto& f : r.failures)
          failures.append(py::dict("d"_a = f.d, "k"_a = f.k, "g"_a = f.g, "e"_a = static_cast<int>(f.e),
                                   "reason"_a = f.reason));
        return py::dict("cases"_a = r.cases, "passes"_a = r.passes, "failures"_a = failures);
      },
      "grid_max"_a);

  m.attr("SCHEMA_VERSION") = kSchemaVersion;
}
