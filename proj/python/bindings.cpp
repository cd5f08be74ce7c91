#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fivelist/format.hpp"
#include "fivelist/harness.hpp"
#include "fivelist/oracle.hpp"
#include "fivelist/render.hpp"
#include "fivelist/solver.hpp"

namespace py = pybind11;
using namespace fivelist;

namespace {

// Instances cross the boundary as text in the file format.
Theorem theorem_arg(const std::string& name) {
  auto t = theorem_from_name(name);
  if (!t) throw py::value_error("unknown theorem '" + name + "'");
  return *t;
}

py::dict report_dict(const ValidityReport& r) {
  py::list violations;
  for (const auto& v : r.violations) {
    py::dict d;
    d["condition"] = v.condition;
    d["vertices"] = v.vertices;
    d["detail"] = v.detail;
    if (v.measured >= 0) d["measured"] = v.measured;
    if (v.threshold >= 0) d["threshold"] = v.threshold;
    violations.append(d);
  }
  py::dict out;
  out["ok"] = r.ok();
  out["conditions"] = r.conditions;
  out["violations"] = violations;
  return out;
}

py::dict check(const std::string& text, const std::string& theorem) {
  return report_dict(check_theorem(parse_instance(text), theorem_arg(theorem)));
}

py::dict solve(const std::string& text, const std::string& theorem) {
  const Instance inst = parse_instance(text);
  ColoringResult r;
  const Theorem t = theorem == "auto" ? (inst.drawing.crossings().size() == 1 ? Theorem::OneCrossing : Theorem::Basic)
                                      : theorem_arg(theorem);
  switch (t) {
    case Theorem::OneCrossing: r = color_one_crossing(inst.drawing, inst.lists); break;
    case Theorem::Basic: r = color_basic(inst.drawing.planarization(), inst.path, inst.lists); break;
    case Theorem::Thomassen:
      if (inst.path.size() != 2) throw py::value_error("thomassen needs a path of two vertices");
      r = color_thomassen(inst.drawing.planarization(), inst.lists, inst.path[0], inst.path[1]);
      break;
    default: throw py::value_error("no constructive solver for " + theorem);
  }
  py::dict out;
  out["outcome"] = to_string(r.outcome);
  out["coloring"] = r.ok() ? py::cast(r.coloring) : py::none();
  out["report"] = report_dict(r.report);
  return out;
}

py::dict exact(const std::string& text, std::uint64_t limit) {
  const Instance inst = parse_instance(text);
  const ExactResult r = solve_exact(inst.adjacency(), inst.lists, limit);
  py::dict out;
  out["result"] = to_string(r.result);
  out["coloring"] = r.result == SearchResult::Colorable ? py::cast(r.coloring) : py::none();
  out["nodes"] = r.stats.nodes;
  out["backtracks"] = r.stats.backtracks;
  return out;
}

std::string generate(const std::string& family, std::uint64_t seed, const py::kwargs& kw) {
  GenSpec s;
  auto f = family_from_name(family);
  if (!f) throw py::value_error("unknown family '" + family + "'");
  s.family = *f;
  s.seed = seed;
  for (auto [k, v] : kw) {
    const std::string key = py::str(k);
    if (key == "n") s.n = v.cast<int>();
    else if (key == "width") s.width = v.cast<int>();
    else if (key == "height") s.height = v.cast<int>();
    else if (key == "rings") s.rings = v.cast<int>();
    else if (key == "spokes") s.spokes = v.cast<int>();
    else if (key == "flips") s.flips = v.cast<int>();
    else if (key == "crossings") s.crossings = v.cast<int>();
    else if (key == "n_count") s.n_count = v.cast<int>();
    else if (key == "min_distance") s.min_distance = v.cast<int>();
    else if (key == "path_length") s.path_length = v.cast<int>();
    else if (key == "palette") s.lists.palette = v.cast<int>();
    else if (key == "theorem") s.theorem = theorem_arg(v.cast<std::string>());
    else if (key == "base") {
      auto b = base_from_name(v.cast<std::string>());
      if (!b) throw py::value_error("unknown base");
      s.base = *b;
    } else {
      throw py::type_error("unexpected keyword '" + key + "'");
    }
  }
  return serialize_instance(gen_instance(s));
}

py::tuple choosable(const std::vector<std::vector<int>>& adj, int k, int palette, int max_vertices) {
  ChoosabilityOptions opts;
  opts.max_vertices = max_vertices;
  const ChoosabilityResult r = is_choosable(adj, k, palette, opts);
  if (r.choosable) return py::make_tuple(true, py::none());
  return py::make_tuple(false, r.witness->lists());
}

}  // namespace

PYBIND11_MODULE(_fivelist, m) {
  m.doc() = "list coloring of plane and near-planar graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfeasibleSpec>(m, "InfeasibleSpec", PyExc_ValueError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);

  m.def("canonical", [](const std::string& text) { return serialize_instance(parse_instance(text)); },
        py::arg("text"), "parse and re-serialize an instance");
  m.def("check", &check, py::arg("text"), py::arg("theorem") = "valid");
  m.def("solve", &solve, py::arg("text"), py::arg("theorem") = "auto");
  m.def("solve_exact", &exact, py::arg("text"), py::arg("node_limit") = kDefaultNodeLimit);
  m.def("generate", &generate, py::arg("family"), py::arg("seed") = 1);
  m.def("render_svg",
        [](const std::string& text, std::optional<Coloring> coloring) {
          return render_svg(parse_instance(text), coloring);
        },
        py::arg("text"), py::arg("coloring") = py::none());
  m.def("is_choosable", &choosable, py::arg("adjacency"), py::arg("k"), py::arg("palette"),
        py::arg("max_vertices") = 10);
}
