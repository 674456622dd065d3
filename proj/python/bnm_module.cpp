#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "bnm/baselines.hpp"
#include "bnm/error.hpp"
#include "bnm/generators.hpp"
#include "bnm/geometry.hpp"
#include "bnm/render.hpp"
#include "bnm/solver.hpp"
#include "bnm/structure.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

namespace {

using PointList = std::vector<std::pair<double, double>>;
using PairList = std::vector<std::pair<int, int>>;

bnm::ConvexPointSet to_point_set(const PointList& xy) {
  std::vector<bnm::Point> pts;
  pts.reserve(xy.size());
  for (const auto& [x, y] : xy) pts.push_back({x, y});
  return bnm::ConvexPointSet(std::move(pts));
}

PointList to_list(const bnm::ConvexPointSet& pts) {
  PointList out;
  for (const bnm::Point& p : pts.points()) out.emplace_back(p.x, p.y);
  return out;
}

PairList to_list(const std::vector<bnm::IndexPair>& pairs) {
  PairList out;
  for (const bnm::IndexPair& p : pairs) out.emplace_back(p.a, p.b);
  return out;
}

bnm::Matching to_matching(int n, const PairList& pairs) {
  bnm::Matching m{n, {}};
  for (const auto& [a, b] : pairs) m.pairs.push_back({a, b});
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bottleneck non-crossing perfect matchings of points in convex position";

  static py::exception<bnm::Error> error(m, "BnmError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const bnm::Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<bnm::SolveReport>(m, "SolveReport")
      .def_readonly("value", &bnm::SolveReport::value)
      .def_readonly("candidate_count", &bnm::SolveReport::candidate_count)
      .def_readonly("cascades", &bnm::SolveReport::cascades)
      .def_property_readonly("pairs", [](const bnm::SolveReport& r) { return to_list(r.matching.pairs); })
      .def_property_readonly("structure", [](const bnm::SolveReport& r) { return std::string(bnm::to_string(r.structure)); })
      .def_property_readonly("elapsed_seconds", [](const bnm::SolveReport& r) { return r.elapsed.count() * 1e-9; });

  m.def(
      "solve", [](const PointList& pts) { return bnm::solve(to_point_set(pts)); }, py::arg("points"),
      "Bottleneck matching in O(n^2); points must be strictly convex, ccw, even in number.");

  m.def(
      "cubic_solve",
      [](const PointList& pts) {
        const auto r = bnm::cubic_solve(to_point_set(pts));
        return py::make_tuple(r.value, to_list(r.matching.pairs));
      },
      py::arg("points"), "O(n^3) interval DP; returns (value, pairs).");

  m.def(
      "oracle_solve",
      [](const PointList& pts) {
        const auto r = bnm::oracle_solve(to_point_set(pts));
        std::vector<PairList> all;
        for (const auto& mm : r.all_optimal) all.push_back(to_list(mm.pairs));
        return py::make_tuple(r.value, all);
      },
      py::arg("points"), "Exhaustive search (n <= 20); returns (value, all optimal pair lists).");

  m.def(
      "catalan_count",
      [](int n) {
        long count = 0;
        bnm::oracle_enumerate(n, [&](const bnm::Matching&) { ++count; });
        return count;
      },
      py::arg("n"));

  m.def(
      "generate",
      [](int n, const std::string& mode, std::uint64_t seed, double spread) {
        const auto parsed = bnm::parse_gen_mode(mode);
        if (!parsed) throw py::value_error("unknown mode " + mode);
        return to_list(bnm::generate({n, *parsed, seed, spread}));
      },
      py::arg("n"), py::arg("mode") = "circle", py::arg("seed") = 0, py::arg("spread") = 0.05);

  m.def(
      "turning_angle", [](const PointList& pts, int i, int j) { return bnm::turning_angle(to_point_set(pts), i, j); },
      py::arg("points"), py::arg("i"), py::arg("j"));

  m.def(
      "verify",
      [](const PointList& pts, const PairList& pairs) {
        const auto set = to_point_set(pts);
        const auto r = bnm::verify_matching(set, to_matching(set.size(), pairs));
        py::dict out;
        out["perfect"] = r.perfect;
        out["non_crossing"] = r.non_crossing;
        out["value"] = r.value;
        out["longest"] = std::make_pair(r.longest.a, r.longest.b);
        return out;
      },
      py::arg("points"), py::arg("pairs"));

  m.def(
      "cascades",
      [](int n, const PairList& pairs) {
        const auto dec = bnm::cascade_decomposition(to_matching(n, pairs));
        std::vector<PairList> out;
        for (const auto& c : dec.cascades) out.push_back(to_list(c));
        return py::make_tuple(out, dec.three_bounded_count);
      },
      py::arg("n"), py::arg("pairs"), "Returns (cascades, number of 3-bounded regions).");

  m.def(
      "render_svg",
      [](const PointList& pts, const PairList& pairs) {
        const auto set = to_point_set(pts);
        return bnm::render_svg(set, to_matching(set.size(), pairs));
      },
      py::arg("points"), py::arg("pairs"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
