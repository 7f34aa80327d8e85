#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gmmn/dispatch.hpp"
#include "gmmn/errors.hpp"
#include "gmmn/generate.hpp"
#include "gmmn/instance_graph.hpp"
#include "gmmn/io.hpp"
#include "gmmn/svg.hpp"

namespace py = pybind11;
using namespace gmmn;

namespace {

using PointTuple = std::pair<Coord, Coord>;
using PairTuple = std::pair<PointTuple, PointTuple>;

Instance to_instance(const std::vector<PairTuple>& pairs) {
  Instance inst;
  for (const auto& [s, t] : pairs) inst.pairs.push_back({{s.first, s.second}, {t.first, t.second}});
  return inst;
}

std::vector<PairTuple> from_instance(const Instance& inst) {
  std::vector<PairTuple> out;
  for (const auto& p : inst.pairs) out.push_back({{p.s.x, p.s.y}, {p.t.x, p.t.y}});
  return out;
}

struct PySolution {
  std::string solver;
  Length total_length = 0;
  Length ratio = 1;
  std::vector<std::string> warnings;
  std::vector<std::vector<PointTuple>> paths;
  std::string text;  // serialized record
};

PySolution wrap(const Instance& inst, const Solution& s) {
  PySolution out{s.solver, s.network.total_length(), s.ratio, s.warnings, {}, serialize_solution(s, inst.scale)};
  const HananGrid& g = s.network.grid();
  for (const auto& path : s.network.paths()) {
    auto& pts = out.paths.emplace_back();
    for (const auto& v : path) {
      const Point p = g.point(v);
      pts.push_back({p.x, p.y});
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and approximate generalized minimum Manhattan network solvers";

  auto base = py::register_exception<Error>(m, "GmmnError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<WrongClass>(m, "WrongClass", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<PySolution>(m, "Solution")
      .def_readonly("solver", &PySolution::solver)
      .def_readonly("total_length", &PySolution::total_length)
      .def_readonly("ratio", &PySolution::ratio)
      .def_readonly("warnings", &PySolution::warnings)
      .def_readonly("paths", &PySolution::paths)
      .def("to_jsonl", [](const PySolution& s) { return s.text; })
      .def("__repr__", [](const PySolution& s) {
        return "<Solution " + s.solver + " total_length=" + std::to_string(s.total_length) + ">";
      });

  m.def(
      "solve",
      [](const std::vector<PairTuple>& pairs, const std::string& algorithm, std::uint64_t oracle_cap) {
        const Instance inst = to_instance(pairs);
        SolveOptions opts;
        opts.oracle_cap = oracle_cap;
        Solution s;
        {
          py::gil_scoped_release release;
          s = solve(inst, parse_algorithm(algorithm), opts);
        }
        return wrap(inst, s);
      },
      py::arg("pairs"), py::arg("algorithm") = "auto", py::arg("oracle_cap") = 0,
      "Solve integer pairs [((sx, sy), (tx, ty)), ...] with the named algorithm.");

  m.def(
      "solve_file",
      [](const std::string& path, const std::string& algorithm) {
        const Instance inst = read_instance_file(path);
        return wrap(inst, solve(inst, parse_algorithm(algorithm)));
      },
      py::arg("path"), py::arg("algorithm") = "auto");

  m.def(
      "generate",
      [](const std::string& cls, int n, Coord coord_range, std::uint64_t seed) {
        const GenClass c = parse_gen_class(cls);
        const Coord range = coord_range > 0 ? coord_range : std::max<Coord>(8, minimum_coord_range(c, n));
        return from_instance(generate_instance(c, n, range, seed));
      },
      py::arg("cls"), py::arg("n"), py::arg("coord_range") = 0, py::arg("seed") = 1);

  m.def(
      "classify",
      [](const std::vector<PairTuple>& pairs) {
        return std::string(to_string(classify(build_intersection_graph(to_instance(pairs).pairs)).cls));
      },
      py::arg("pairs"));

  m.def(
      "auto_choice", [](const std::vector<PairTuple>& pairs) { return std::string(to_string(auto_choice(to_instance(pairs)))); },
      py::arg("pairs"));

  m.def(
      "to_jsonl",
      [](const std::vector<PairTuple>& pairs, const std::string& name) {
        Instance inst = to_instance(pairs);
        inst.name = name;
        return serialize_instance(inst);
      },
      py::arg("pairs"), py::arg("name") = "");

  m.def(
      "from_jsonl",
      [](const std::string& text) {
        const Instance inst = parse_instance_text(text);
        return py::make_tuple(from_instance(inst), inst.scale);
      },
      py::arg("text"), "Returns (pairs, scale); coordinates are multiplied by 10**scale.");

  m.def(
      "render_svg",
      [](const std::vector<PairTuple>& pairs, const std::string& algorithm) {
        const Instance inst = to_instance(pairs);
        if (algorithm.empty()) return render_svg(inst, nullptr);
        const Solution s = solve(inst, parse_algorithm(algorithm));
        return render_svg(inst, &s.network);
      },
      py::arg("pairs"), py::arg("algorithm") = "auto");
}
