// Python bindings: JSON text in, JSON text out; the package wrapper converts to dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trihered/api.hpp"
#include "trihered/equivalence.hpp"

namespace py = pybind11;
using namespace trihered;
using io::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw io::ParseError("", e.what());
  }
}

DegreeWindow window_of(std::pair<int, int> w) {
  if (w.first > w.second) throw io::ParseError("window", "LO exceeds HI");
  return {w.first, w.second};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact triangles and t-structures over quiver representations in characteristic p";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<io::ParseError>(m, "ParseError", error.ptr());
  py::register_exception<Unsupported>(m, "Unsupported", error.ptr());
  py::register_exception<WindowExhausted>(m, "WindowExhausted", error.ptr());

  m.def("set_prime", &linalg::set_prime, py::arg("p"));
  m.def("prime", &linalg::prime);

  py::class_<Quiver, std::shared_ptr<Quiver>>(m, "Quiver")
      .def_static("from_json", [](const std::string& text) { return std::const_pointer_cast<Quiver>(io::quiver_from_json(parse(text))); })
      .def_static("linear", [](std::size_t n) { return std::const_pointer_cast<Quiver>(linear_quiver(n)); })
      .def_static("d4", [] { return std::const_pointer_cast<Quiver>(d4_quiver()); })
      .def("to_json", [](const Quiver& q) { return io::to_json(q).dump(); })
      .def_property_readonly("vertex_count", &Quiver::vertex_count)
      .def_property_readonly("arrow_count", [](const Quiver& q) { return q.arrows().size(); })
      .def("is_dynkin", &Quiver::is_dynkin);

  using Q = const std::shared_ptr<Quiver>&;
  m.def("indecomposables", [](Q q) { return api::indecomposables(q).dump(); });
  m.def("hom", [](Q q, const std::string& x, const std::string& y, int shift) {
    return api::hom(q, parse(x), parse(y), shift).dump();
  });
  m.def("ext", [](Q q, const std::string& a, const std::string& b) { return api::ext(q, parse(a), parse(b)).dump(); });
  m.def("cone", [](Q q, const std::string& f) { return api::cone(q, parse(f)).dump(); });
  m.def("decompose", [](Q q, const std::string& x) { return api::decompose(q, parse(x)).dump(); });
  m.def("blocks", [](Q q, std::pair<int, int> w) { return api::blocks(q, window_of(w)).dump(); });
  m.def("tstructure", [](Q q, const std::string& gen, std::pair<int, int> w) {
    return api::tstructure(q, gen, window_of(w)).dump();
  });
  m.def("walk_to_path", [](Q q, const std::string& walk, std::pair<int, int> w) {
    return api::walk_to_path(q, parse(walk), window_of(w)).dump();
  });
  m.def("octahedron", [](Q q, const std::string& f, const std::string& u, std::uint64_t seed) {
    OctaOptions opts;
    opts.seed = seed;
    return api::octahedron(q, parse(f), parse(u), opts).dump();
  });
  m.def("verify_equivalence", [](Q q, std::size_t trials, std::uint64_t seed, std::pair<int, int> w) {
    EquivalenceOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    opts.window = window_of(w);
    return io::to_json(verify_equivalence(q, opts)).dump();
  });
  m.def("verify_axioms", [](Q q, std::size_t trials, std::uint64_t seed) {
    AxiomOptions opts;
    opts.trials = trials;
    opts.conjugation_trials = std::min(opts.conjugation_trials, trials);
    opts.split_trials = std::min(opts.split_trials, trials);
    opts.seed = seed;
    return io::to_json(verify_axioms(q, opts)).dump();
  });
}
