// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the package wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "kzindex/census.hpp"
#include "kzindex/coset.hpp"
#include "kzindex/errors.hpp"
#include "kzindex/monodromy.hpp"
#include "kzindex/report.hpp"

namespace py = pybind11;
using namespace kz;

namespace {

using PyMat = std::array<std::array<std::int64_t, 2>, 2>;

Mat2 from_py(const PyMat& m) { return {m[0][0], m[0][1], m[1][0], m[1][1]}; }
PyMat to_py(const Mat2& m) { return {{{m.a, m.b}, {m.c, m.d}}}; }

std::vector<Mat2> from_py(const std::vector<PyMat>& ms) {
  std::vector<Mat2> out;
  for (const auto& m : ms) out.push_back(from_py(m));
  return out;
}

std::vector<Direction> directions(const std::vector<std::pair<int, int>>& ds) {
  std::vector<Direction> out;
  for (auto [p, q] : ds) out.push_back(Direction::make(p, q));
  return out;
}

std::string dump(const Report& r) { return r.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cylinder decompositions, multitwist monodromy and SL2(Z) indices of origamis";

  auto base = py::register_exception<Error>(m, "KzError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidShape>(m, "InvalidShape", base.ptr());
  py::register_exception<InvalidDirection>(m, "InvalidDirection", base.ptr());
  py::register_exception<DegenerateConfiguration>(m, "DegenerateConfiguration", base.ptr());
  py::register_exception<BasisUnavailable>(m, "BasisUnavailable", base.ptr());
  py::register_exception<NoBasisFound>(m, "NoBasisFound", base.ptr());
  py::register_exception<IntegralityError>(m, "IntegralityError", base.ptr());
  py::register_exception<RankError>(m, "RankError", base.ptr());
  py::register_exception<UnimodularityError>(m, "UnimodularityError", base.ptr());
  py::register_exception<IndexExceedsCap>(m, "IndexExceedsCap", base.ptr());
  py::register_exception<OrbitTooLarge>(m, "OrbitTooLarge", base.ptr());

  py::class_<Origami>(m, "Origami")
      .def(py::init([](const std::string& text) { return parse_origami(text); }), py::arg("text"),
           "Parse the text format (h=..., v=..., optional d=...).")
      .def_static("l_shape", &make_l_origami, py::arg("n"), py::arg("m"))
      .def_property_readonly("degree", &Origami::degree)
      .def_property_readonly("h", [](const Origami& o) { return format_cycles(o.h()); })
      .def_property_readonly("v", [](const Origami& o) { return format_cycles(o.v()); })
      .def_property_readonly("genus", [](const Origami& o) { return singularity_data(o).genus; })
      .def_property_readonly("cone_orders", [](const Origami& o) { return singularity_data(o).cone_orders; })
      .def("is_primitive", &is_primitive)
      .def("canonical", &canonical_form)
      .def("record", [](const Origami& o) { return origami_record(o).dump(); })
      .def("__eq__", [](const Origami& a, const Origami& b) { return a == b; })
      .def("__hash__", [](const Origami& o) { return OrigamiHash{}(o); })
      .def("__str__", &format_origami)
      .def("__repr__", [](const Origami& o) { return "Origami(h=" + format_cycles(o.h()) + ", v=" + format_cycles(o.v()) + ")"; });

  m.def("orbit", [](const Origami& o, std::size_t cap) { return orbit(o, cap); }, py::arg("origami"),
        py::arg("cap") = kDefaultOrbitCap);
  m.def("same_orbit", &same_orbit, py::arg("a"), py::arg("b"), py::arg("cap") = kDefaultOrbitCap);
  m.def("h2_origamis", &h2_origamis, py::arg("degree"));

  m.def("kz_generators",
        [](const Origami& o, const std::vector<std::pair<int, int>>& dirs) {
          std::vector<PyMat> out;
          for (const auto& g : kz_generators(o, directions(dirs))) out.push_back(to_py(g));
          return out;
        },
        py::arg("origami"), py::arg("directions"));
  m.def("index_in_sl2", [](const std::vector<PyMat>& gens, std::size_t cap) { return index_in_sl2(from_py(gens), cap); },
        py::arg("generators"), py::arg("cap") = kDefaultCosetCap);
  m.def("contains_minus_identity",
        [](const std::vector<PyMat>& gens, std::size_t cap) { return contains_minus_identity(from_py(gens), cap); },
        py::arg("generators"), py::arg("cap") = kDefaultCosetCap);

  m.def("_decompose", [](const Origami& o, int p, int q) { return dump(cmd_decompose(o, Direction::make(p, q))); });
  m.def("_homology", [](const Origami& o, std::size_t cap) { return dump(cmd_homology(o, cap)); });
  m.def("_monodromy", [](const Origami& o, const std::vector<std::pair<int, int>>& dirs, std::size_t cap) {
    return dump(cmd_monodromy(o, directions(dirs), cap));
  });
  m.def("_census", [](int d, std::size_t cap) { return dump(cmd_census(d, cap)); });
  m.def("_verify", [](int n_max) {
    py::gil_scoped_release release;
    return dump(cmd_verify_paper(n_max));
  });
  m.def("_conjecture", [](const std::vector<std::pair<int, int>>& reps, std::size_t cap) {
    py::gil_scoped_release release;
    return dump(cmd_conjecture(reps, cap));
  });
  m.attr("DEFAULT_COSET_CAP") = kDefaultCosetCap;
  m.attr("DEFAULT_ORBIT_CAP") = kDefaultOrbitCap;
}
