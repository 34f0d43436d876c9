#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ibncert/certificate.hpp"
#include "ibncert/constructions.hpp"
#include "ibncert/corpus.hpp"
#include "ibncert/decision.hpp"
#include "ibncert/equivalence.hpp"
#include "ibncert/error.hpp"
#include "ibncert/io.hpp"

namespace py = pybind11;
using namespace ibncert;

namespace {

  // Graphs cross the boundary as text or JSON strings and results as JSON
  // strings; the Python package decodes them.

  SearchBounds bounds_of(std::size_t states, std::uint64_t coeff, std::size_t depth) {
    SearchBounds b;
    b.max_states            = states;
    b.max_total_coefficient = coeff;
    b.max_depth             = depth;
    return b;
  }

  AlgebraSpec algebra_of(std::string const& graph,
                         std::string const& algebra,
                         std::vector<std::string> const& x) {
    auto g = validate(parse_graph(graph));
    if (algebra == "cohn") {
      return AlgebraSpec::cohn(std::move(g));
    }
    if (algebra == "relative") {
      return AlgebraSpec::relative_cohn(std::move(g), x);
    }
    if (algebra == "leavitt") {
      return AlgebraSpec::leavitt(std::move(g));
    }
    throw py::value_error("algebra must be 'cohn', 'relative' or 'leavitt'");
  }

  RewriteSystem presentation_of(std::string const& graph, std::string const& kind) {
    auto const g = validate(parse_graph(graph));
    if (kind == "graph") {
      return monoid_presentation(g);
    }
    if (kind == "cohn") {
      return cohn_presentation(g);
    }
    throw py::value_error("presentation must be 'graph' or 'cohn'");
  }

  std::string companion(std::string const& graph,
                        std::optional<std::vector<std::string>> const& x) {
    auto const g = validate(parse_graph(graph));
    auto const c = x ? relative_companion(g, *x) : cohn_companion(g);
    return json{{"graph", graph_to_json(c.graph.spec())},
                {"incidence", to_json(incidence(c.graph))},
                {"origin", c.origin}}
        .dump();
  }

  std::string ibn_check(std::string const& graph,
                        std::string const& algebra,
                        std::vector<std::string> const& x,
                        std::size_t max_m,
                        std::size_t states,
                        std::uint64_t coeff,
                        std::size_t depth) {
    auto const spec = algebra_of(graph, algebra, x);
    Verdict    v;
    {
      py::gil_scoped_release nogil;
      v = decide_ibn(spec, bounds_of(states, coeff, depth), max_m);
    }
    auto out       = to_json(v, spec);
    out["audited"] = audit(v, spec);
    return out.dump();
  }

  std::string monoid_equiv(std::string const& graph,
                           std::vector<std::uint64_t> const& a,
                           std::vector<std::uint64_t> const& b,
                           std::string const& presentation,
                           std::optional<std::vector<std::string>> const& weights,
                           std::size_t states,
                           std::uint64_t coeff,
                           std::size_t depth) {
    auto const rs = presentation_of(graph, presentation);
    std::optional<WeightCertificate> cert;
    if (weights) {
      cert = WeightCertificate{rs.generators(), {}};
      for (auto const& w : *weights) {
        cert->weights.push_back(parse_rational(w));
      }
    } else {
      cert = solve_exact(build_system(rs));
    }
    EquivalenceResult r;
    {
      py::gil_scoped_release nogil;
      r = decide_equivalent(MonoidElement(a), MonoidElement(b), rs,
                            bounds_of(states, coeff, depth),
                            cert ? &*cert : nullptr);
    }
    return to_json(r, rs).dump();
  }

  std::vector<std::uint64_t> normal_form_of(std::string const& graph,
                                            std::vector<std::uint64_t> const& x,
                                            std::string const& presentation) {
    return normal_form(MonoidElement(x), presentation_of(graph, presentation)).coeffs();
  }

  std::vector<std::string> generators(std::string const& graph,
                                      std::string const& presentation) {
    return presentation_of(graph, presentation).generators();
  }

  py::tuple family_of(std::size_t n, std::size_t m) {
    auto const f = family(n, m);
    return py::make_tuple(emit_graph_text(f.graph.spec()), f.x);
  }

}  // namespace

PYBIND11_MODULE(_ibncert, m) {
  m.doc() = "Native core of the ibncert package";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("companion", &companion, py::arg("graph"), py::arg("x") = py::none());
  m.def("ibn_check", &ibn_check, py::arg("graph"), py::arg("algebra"),
        py::arg("x"), py::arg("max_m"), py::arg("max_states"),
        py::arg("max_coeff"), py::arg("max_depth"));
  m.def("monoid_equiv", &monoid_equiv, py::arg("graph"), py::arg("a"),
        py::arg("b"), py::arg("presentation"), py::arg("weights"),
        py::arg("max_states"), py::arg("max_coeff"), py::arg("max_depth"));
  m.def("normal_form", &normal_form_of, py::arg("graph"), py::arg("x"),
        py::arg("presentation"));
  m.def("generators", &generators, py::arg("graph"), py::arg("presentation"));
  m.def("example_names", &example_names);
  m.def("example", [](std::string const& name) {
    return emit_graph_text(example_graph(name));
  });
  m.def("family", &family_of, py::arg("n"), py::arg("m"));

  m.attr("DEFAULT_MAX_STATES")      = SearchBounds{}.max_states;
  m.attr("DEFAULT_MAX_COEFFICIENT") = SearchBounds{}.max_total_coefficient;
  m.attr("DEFAULT_MAX_DEPTH")       = SearchBounds{}.max_depth;
  m.attr("DEFAULT_MAX_M")           = default_max_m;
}
