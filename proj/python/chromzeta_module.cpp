#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chromzeta/chromatic.hpp"
#include "chromzeta/euler.hpp"
#include "chromzeta/graph.hpp"
#include "chromzeta/lattice.hpp"
#include "chromzeta/montecarlo.hpp"
#include "chromzeta/report.hpp"
#include "chromzeta/selftest.hpp"

namespace py = pybind11;
namespace cz = chromzeta;

namespace {

py::int_ to_py(const cz::BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

cz::Graph make_graph(int order, const std::vector<std::pair<int, int>>& edges) {
  std::vector<cz::Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return cz::Graph(order, std::move(es));
}

py::list coefficients(const cz::IntPolynomial& p) {
  py::list out;
  for (int i = 0; i <= p.degree(); ++i) out.append(to_py(p.coefficient(i)));
  return out;
}

cz::EulerOptions euler_options(double target_tail, const std::string& tail_mode, std::uint64_t max_prime,
                               unsigned workers) {
  cz::EulerOptions o;
  o.target_tail = target_tail;
  o.prime_cap = max_prime;
  o.workers = workers;
  if (tail_mode == "truncated") {
    o.tail_mode = cz::TailMode::truncated;
  } else if (tail_mode != "corrected") {
    throw cz::UsageError("tail_mode must be 'corrected' or 'truncated'");
  }
  return o;
}

#define EULER_ARGS                                                                                       \
  py::arg("target_tail") = 1e-10, py::arg("tail_mode") = "corrected", py::arg("max_prime") = cz::kDefaultPrimeCap, \
      py::arg("workers") = 1u

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chromatic polynomials, chromatic zeta products and lattice visibility";

  py::register_exception<cz::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<cz::BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<cz::InvariantError>(m, "InvariantError", PyExc_AssertionError);

  py::class_<cz::Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &cz::Graph::order)
      .def_property_readonly("edges",
                             [](const cz::Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("has_edge", &cz::Graph::has_edge)
      .def("__eq__", [](const cz::Graph& a, const cz::Graph& b) { return a == b; })
      .def("__len__", &cz::Graph::size)
      .def("__repr__", [](const cz::Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.size()) + ")";
      });

  m.def("family", [](const std::string& label, int max_vertices) { return cz::family(label, max_vertices); },
        py::arg("label"), py::arg("max_vertices") = cz::kDefaultMaxVertices);
  m.def("parse_graph", [](const std::string& text, int max_vertices) { return cz::parse_graph(text, max_vertices); },
        py::arg("text"), py::arg("max_vertices") = cz::kDefaultMaxVertices);
  m.def("render_graph", &cz::render_graph);
  m.def("is_subgraph", &cz::is_subgraph, py::arg("sub"), py::arg("g"));

  m.def(
      "chromatic_polynomial",
      [](const cz::Graph& g, int max_vertices) {
        cz::ChromaticLimits limits;
        limits.max_vertices = max_vertices;
        return coefficients(cz::chromatic_polynomial(g, limits));
      },
      py::arg("g"), py::arg("max_vertices") = cz::kDefaultMaxVertices,
      "Coefficients of P_g, constant term first.");
  m.def("count_colorings", &cz::count_colorings, py::arg("g"), py::arg("q"),
        py::arg("budget") = cz::kDefaultEnumerationBudget);

  py::class_<cz::CertifiedProduct>(m, "CertifiedProduct")
      .def_readonly("value", &cz::CertifiedProduct::value)
      .def_readonly("lower", &cz::CertifiedProduct::lower)
      .def_readonly("upper", &cz::CertifiedProduct::upper)
      .def_readonly("truncation_prime", &cz::CertifiedProduct::truncation_prime)
      .def_readonly("tail_epsilon", &cz::CertifiedProduct::tail_epsilon)
      .def_readonly("rounding", &cz::CertifiedProduct::rounding)
      .def_readonly("exact_zero", &cz::CertifiedProduct::exact_zero)
      .def("contains", &cz::CertifiedProduct::contains)
      .def("overlaps", &cz::CertifiedProduct::overlaps)
      .def("to_json", [](const cz::CertifiedProduct& p) { return cz::to_json(p); })
      .def("__repr__", [](const cz::CertifiedProduct& p) {
        return "CertifiedProduct(value=" + cz::format_double(p.value) + ", lower=" + cz::format_double(p.lower) +
               ", upper=" + cz::format_double(p.upper) + (p.exact_zero ? ", exact_zero=True)" : ")");
      });

  m.def(
      "zeta_H_inverse",
      [](const cz::Graph& g, double s, double t, const std::string& mode, std::uint64_t cap, unsigned w) {
        return cz::zeta_H_inverse(g, s, euler_options(t, mode, cap, w));
      },
      py::arg("g"), py::arg("s"), EULER_ARGS);
  m.def(
      "riemann_zeta_inverse",
      [](double s, double t, const std::string& mode, std::uint64_t cap, unsigned w) {
        return cz::riemann_zeta_inverse(s, euler_options(t, mode, cap, w));
      },
      py::arg("s"), EULER_ARGS);
  m.def(
      "cycle_limit_closed_form",
      [](int k, double s, double t, const std::string& mode, std::uint64_t cap, unsigned w) {
        return cz::cycle_limit_closed_form(k, s, euler_options(t, mode, cap, w));
      },
      py::arg("k"), py::arg("s"), EULER_ARGS);
  m.def(
      "rearick_ratio",
      [](std::uint64_t mm, int s, double t, const std::string& mode, std::uint64_t cap, unsigned w) {
        return cz::rearick_ratio(mm, s, euler_options(t, mode, cap, w));
      },
      py::arg("m"), py::arg("s"), EULER_ARGS);
  m.def(
      "conditional_limit",
      [](const cz::Graph& g, const cz::Graph& sub, double s, double t, const std::string& mode, std::uint64_t cap,
         unsigned w) { return cz::conditional_limit(g, sub, s, euler_options(t, mode, cap, w)); },
      py::arg("g"), py::arg("sub"), py::arg("s"), EULER_ARGS);

  m.def(
      "visible",
      [](const std::vector<cz::Coord>& x, const std::vector<cz::Coord>& y) {
        return cz::visible(cz::LatticePoint(x), cz::LatticePoint(y));
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "is_H_visible",
      [](const std::vector<std::vector<cz::Coord>>& points, const cz::Graph& g) {
        cz::LatticeConfig cfg;
        for (const auto& p : points) cfg.points.emplace_back(p);
        return cz::is_H_visible(cfg, g);
      },
      py::arg("points"), py::arg("g"));
  m.def("count_Hp_visible_residue_tuples", &cz::count_Hp_visible_residue_tuples, py::arg("g"), py::arg("p"),
        py::arg("s"), py::arg("budget") = cz::kDefaultEnumerationBudget);
  m.def(
      "exact_probability",
      [](const cz::Graph& g, cz::Coord n, int s, std::uint64_t budget) {
        const auto f = cz::exact_probability(g, n, s, budget);
        return py::module_::import("fractions").attr("Fraction")(to_py(f.numerator), to_py(f.denominator));
      },
      py::arg("g"), py::arg("n"), py::arg("s"), py::arg("budget") = cz::kDefaultEnumerationBudget);

  py::class_<cz::Estimate>(m, "Estimate")
      .def_readonly("successes", &cz::Estimate::successes)
      .def_readonly("trials", &cz::Estimate::trials)
      .def_readonly("point", &cz::Estimate::point)
      .def_readonly("ci_low", &cz::Estimate::ci_low)
      .def_readonly("ci_high", &cz::Estimate::ci_high)
      .def_readonly("confidence", &cz::Estimate::confidence)
      .def_readonly("seed", &cz::Estimate::seed)
      .def("standard_error", &cz::Estimate::standard_error)
      .def("to_json", [](const cz::Estimate& e) { return cz::to_json(e); })
      .def("__repr__", [](const cz::Estimate& e) {
        return "Estimate(successes=" + std::to_string(e.successes) + ", trials=" + std::to_string(e.trials) +
               ", point=" + cz::format_double(e.point) + ")";
      });

  m.def(
      "estimate_probability",
      [](const cz::Graph& g, cz::Coord n, int s, std::uint64_t trials, std::uint64_t seed, unsigned workers,
         double confidence) {
        py::gil_scoped_release release;
        return cz::estimate_probability(g, n, s, {trials, seed, workers, confidence});
      },
      py::arg("g"), py::arg("n"), py::arg("s"), py::arg("trials"), py::arg("seed") = 0, py::arg("workers") = 1u,
      py::arg("confidence") = cz::kDefaultConfidence);
  m.def(
      "estimate_conditional",
      [](const cz::Graph& g, const cz::Graph& sub, cz::Coord n, int s, std::uint64_t trials, std::uint64_t seed,
         unsigned workers, double confidence) {
        const auto c = [&] {
          py::gil_scoped_release release;
          return cz::estimate_conditional(g, sub, n, s, {trials, seed, workers, confidence});
        }();
        return py::make_tuple(c.conditioning, c.conditional, c.ratio);
      },
      py::arg("g"), py::arg("sub"), py::arg("n"), py::arg("s"), py::arg("trials"), py::arg("seed") = 0,
      py::arg("workers") = 1u, py::arg("confidence") = cz::kDefaultConfidence,
      "Returns (conditioning estimate, conditional estimate, ratio).");
  m.def(
      "convergence_sweep",
      [](const cz::Graph& g, int s, const std::vector<cz::Coord>& ns, std::uint64_t trials, std::uint64_t seed,
         unsigned workers) {
        const auto rows = cz::convergence_sweep(g, s, ns, {trials, seed, workers});
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["n"] = r.n;
          d["estimate"] = r.estimate;
          d["limit"] = r.limit;
          d["deviation"] = r.deviation;
          out.append(d);
        }
        return out;
      },
      py::arg("g"), py::arg("s"), py::arg("n_values"), py::arg("trials"), py::arg("seed") = 0,
      py::arg("workers") = 1u);

  m.def("selftest", [] {
    std::ostringstream out;
    const auto summary = cz::run_selftest(out);
    return py::make_tuple(summary.ok(), out.str());
  });
}
