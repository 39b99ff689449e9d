// pybind11 bindings. Structured results cross the boundary as JSON and are
// handed to Python as plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liebider/free_lie.hpp"
#include "liebider/graded_window.hpp"
#include "liebider/json_io.hpp"
#include "liebider/oracle.hpp"
#include "liebider/reproduce.hpp"
#include "liebider/towers.hpp"

namespace py = pybind11;
using namespace liebider;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_json_text(o.cast<std::string>());
  return parse_json_text(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Field field_arg(const py::object& f) {
  if (f.is_none()) return Field::rationals();
  if (py::isinstance<py::str>(f)) {
    if (f.cast<std::string>() == "Q") return Field::rationals();
    throw py::value_error("field must be 'Q' or a prime");
  }
  const long p = f.cast<long>();
  if (p <= 2) throw py::value_error("field must be 'Q' or an odd prime");
  return Field::prime(static_cast<std::uint32_t>(p));
}

Scalar scalar_arg(const py::object& s) {
  if (py::isinstance<py::int_>(s)) return Scalar(s.cast<long>(), Field::rationals());
  return Scalar::parse(py::str(s).cast<std::string>(), Field::rationals());
}

// Thin owners so algebras can be shared between Python and modules.
struct PyAlgebra {
  LieAlgebraPtr ptr;
  const LieAlgebra& get() const { return *ptr; }
};

struct PyModule {
  LModule m;
};

PyAlgebra wrap(LieAlgebra l) { return {std::make_shared<const LieAlgebra>(std::move(l))}; }

EnumerationBudget budget_for(const LModule& m) {
  if (m.field().is_rational()) throw py::value_error("oracle needs a module over F_p");
  return EnumerationBudget::from_env(m.field().modulus());
}

}  // namespace

PYBIND11_MODULE(_liebider, mod) {
  mod.doc() = "Exact biderivation and commuting-map computations for Lie algebras";

  // translators run newest first, so the base class goes first
  py::register_exception<Error>(mod, "LiebiderError", PyExc_RuntimeError);
  py::register_exception<JsonInputError>(mod, "JsonInputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<PyAlgebra>(mod, "Algebra")
      .def_static(
          "catalog",
          [](const std::string& name, const py::object& field) {
            auto l = catalog(name, field_arg(field));
            if (!l) throw py::key_error("unknown algebra: " + name);
            return wrap(std::move(*l));
          },
          py::arg("name"), py::arg("field") = py::none())
      .def_static("from_json", [](const py::object& o) { return wrap(algebra_from_json(from_py(o))); })
      .def("to_json", [](const PyAlgebra& a) { return to_py(algebra_to_json(a.get())); })
      .def("reduce_mod", [](const PyAlgebra& a, long p) { return wrap(a.get().with_field(field_arg(py::int_(p)))); })
      .def_property_readonly("dim", [](const PyAlgebra& a) { return a.get().dim(); })
      .def_property_readonly("names", [](const PyAlgebra& a) { return a.get().names(); })
      .def_property_readonly("field", [](const PyAlgebra& a) { return to_py(field_to_json(a.get().field())); })
      .def_property_readonly("is_partial", [](const PyAlgebra& a) { return a.get().is_partial(); })
      .def("__repr__", [](const PyAlgebra& a) { return "<Algebra dim=" + std::to_string(a.get().dim()) + ">"; });

  py::class_<PyModule>(mod, "Module")
      .def_static("adjoint", [](const PyAlgebra& a) { return PyModule{LModule::adjoint(a.ptr)}; })
      .def_static("from_json", [](const py::object& o) { return PyModule{module_from_json(from_py(o))}; })
      .def("to_json", [](const PyModule& m) { return to_py(module_to_json(m.m)); })
      .def_property_readonly("dim", [](const PyModule& m) { return m.m.dim(); })
      .def_property_readonly("algebra", [](const PyModule& m) { return PyAlgebra{m.m.lie_ptr()}; })
      .def("__repr__", [](const PyModule& m) { return "<Module dim=" + std::to_string(m.m.dim()) + ">"; });

  mod.def("catalog_names", &catalog_names);
  mod.def("check_jacobi", [](const PyAlgebra& a) { return check_jacobi(a.get()); });
  mod.def("check_module", [](const PyModule& m) { return check_module(m.m); });
  mod.def("center", [](const PyAlgebra& a) { return to_py(subspace_to_json(center(a.get()))); });
  mod.def("derived", [](const PyAlgebra& a) { return to_py(subspace_to_json(derived(a.get()))); });

  mod.def("centroid", [](const PyModule& m) { return to_py(space_to_json(centroid(m.m))); });
  mod.def("derivations", [](const PyModule& m) { return to_py(space_to_json(derivations(m.m))); });
  mod.def("commuting_maps", [](const PyModule& m) { return to_py(space_to_json(commuting_maps(m.m))); });
  mod.def("central_maps", [](const PyModule& m) { return to_py(space_to_json(central_maps(m.m))); });
  mod.def("skew_biderivations", [](const PyModule& m) { return to_py(space_to_json(skew_biderivations(m.m))); });
  mod.def("symmetric_biderivations",
          [](const PyModule& m) { return to_py(space_to_json(symmetric_biderivations(m.m))); });
  mod.def("trivial_biderivations", [](const PyModule& m) { return to_py(space_to_json(trivial_biderivations(m.m))); });

  mod.def(
      "center_tower", [](const PyAlgebra& a, std::size_t depth) { return to_py(tower_to_json(center_tower(a.get(), depth))); },
      py::arg("algebra"), py::arg("depth") = kDefaultDepthLimit);
  mod.def(
      "module_tower", [](const PyModule& m, std::size_t depth) { return to_py(tower_to_json(module_tower(m.m, depth))); },
      py::arg("module"), py::arg("depth") = kDefaultDepthLimit);
  mod.def("audit_biderivations", [](const PyAlgebra& a) { return to_py(audit_to_json(tower_audit_biderivations(a.get()))); });
  mod.def("audit_commuting", [](const PyModule& m) { return to_py(audit_to_json(tower_audit_commuting(m.m))); });

  mod.def(
      "window",
      [](const std::string& family, int radius, const py::object& a, const py::object& b, const py::object& q,
         bool quotient, bool c3) {
        FamilyParams p;
        p.a = scalar_arg(a);
        p.b = scalar_arg(b);
        p.q = scalar_arg(q);
        p.quotient = quotient;
        p.c3 = c3;
        return wrap(instantiate(parse_family(family), p, radius).algebra);
      },
      py::arg("family"), py::arg("radius"), py::arg("a") = 0, py::arg("b") = 0, py::arg("q") = 0,
      py::arg("quotient") = false, py::arg("c3") = true);

  mod.def(
      "lift_obstruction",
      [](const py::object& b, int radius, bool c3) {
        const auto r = lift_obstruction_w0minus1(scalar_arg(b), radius, c3);
        Json forced = Json::array();
        for (const auto& f : r.forced) forced.push_back({{"m", f.m}, {"r", f.r}, {"value", scalar_to_json(f.value)}});
        return to_py({{"solvable", r.solvable},
                      {"equations", r.equations},
                      {"unknowns", r.unknowns},
                      {"solvable_l_only", r.solvable_l_only},
                      {"hand_solvable", r.hand_solvable},
                      {"displayed_sign_solvable", r.displayed_sign_solvable},
                      {"forced", forced}});
      },
      py::arg("b"), py::arg("radius") = 6, py::arg("c3") = true);

  mod.def(
      "oracle",
      [](const PyModule& m, const std::string& space) {
        const auto budget = budget_for(m.m);
        OracleResult r;
        if (space == "skew") {
          r = enumerate_skew_biderivations(m.m, budget);
        } else if (space == "symmetric") {
          r = enumerate_symmetric_biderivations(m.m, budget);
        } else if (space == "commuting") {
          r = enumerate_commuting(m.m, budget);
        } else {
          throw py::value_error("space must be skew, symmetric or commuting");
        }
        return to_py({{"members", r.members.size()},
                      {"dim", r.space.dim()},
                      {"closed", r.closed},
                      {"unknowns", r.unknowns},
                      {"nodes", r.nodes}});
      },
      py::arg("module"), py::arg("space") = "skew");

  mod.def("jk_holds", &check_eq_jk);
  mod.def("registry_names", &registry_names);
  mod.def(
      "reproduce",
      [](const std::string& item, const py::object& b) {
        ReproOptions opt;
        opt.b = scalar_arg(b);
        return to_py(reproduce(item, opt).to_json());
      },
      py::arg("item"), py::arg("b") = 1);
}
