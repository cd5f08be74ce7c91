#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fivelist/format.hpp"
#include "fivelist/harness.hpp"
#include "fivelist/oracle.hpp"
#include "fivelist/render.hpp"
#include "fivelist/solver.hpp"

using namespace fivelist;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kHypothesis = 2, kUsage = 3, kLimit = 4, kInternal = 5 };

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "text";
  std::uint64_t limit_nodes = kDefaultNodeLimit;
  bool json() const { return format == "json"; }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Theorem theorem_or_throw(const std::string& name) {
  auto t = theorem_from_name(name);
  if (!t) throw CLI::ValidationError("--theorem", "unknown theorem '" + name + "'");
  return *t;
}

json report_json(const ValidityReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    json e = {{"condition", x.condition}, {"vertices", x.vertices}, {"detail", x.detail}};
    if (x.measured >= 0) e["measured"] = x.measured;
    if (x.threshold >= 0) e["threshold"] = x.threshold;
    v.push_back(e);
  }
  return {{"ok", r.ok()}, {"conditions", r.conditions}, {"violations", v}};
}

void print_report(const ValidityReport& r) {
  for (const auto& c : r.conditions) std::cout << c << ": " << (r.passed(c) ? "pass" : "FAIL") << "\n";
  for (const auto& v : r.violations) std::cout << "  [" << v.condition << "] " << v.detail << "\n";
}

std::string coloring_text(const Coloring& c) {
  std::ostringstream out;
  for (std::size_t v = 0; v < c.size(); ++v) out << "COLOR " << v << ": " << c[v] << "\n";
  return out.str();
}

void add_gen_options(CLI::App* cmd, GenSpec& spec, std::string& family, std::string& base, std::string& theorem) {
  cmd->add_option("--family", family, "TRIANGULATION, GRID, WHEEL_STACK, NEAR_PLANAR or THM5_NSET");
  cmd->add_option("--n", spec.n, "vertex count (triangulation, strip)");
  cmd->add_option("--width", spec.width, "grid width or strip spine length");
  cmd->add_option("--height", spec.height, "grid height");
  cmd->add_option("--rings", spec.rings, "wheel stack rings");
  cmd->add_option("--spokes", spec.spokes, "vertices per ring");
  cmd->add_option("--flips", spec.flips, "random edge flips after insertion");
  cmd->add_option("--crossings", spec.crossings, "crossings to plant");
  cmd->add_option("--n-count", spec.n_count, "vertices in N");
  cmd->add_option("--min-distance", spec.min_distance, "distance between planted features");
  cmd->add_option("--base", base, "grid, triangulation or strip");
  cmd->add_option("--path-length", spec.path_length, "precolored path length");
  cmd->add_option("--gen-theorem", theorem, "hypotheses to generate for");
  cmd->add_option("--interior", spec.lists.interior, "list size off the outer face");
  cmd->add_option("--outer", spec.lists.outer, "list size on the outer face");
  cmd->add_option("--special", spec.lists.special, "list size on N");
  cmd->add_option("--palette", spec.lists.palette, "colors 1..palette");
}

void finish_spec(GenSpec& spec, const std::string& family, const std::string& base, const std::string& theorem) {
  auto f = family_from_name(family);
  if (!f) throw CLI::ValidationError("--family", "unknown family '" + family + "'");
  spec.family = *f;
  auto b = base_from_name(base);
  if (!b) throw CLI::ValidationError("--base", "unknown base '" + base + "'");
  spec.base = *b;
  if (!theorem.empty()) spec.theorem = theorem_or_throw(theorem);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List coloring of plane and near-planar graphs"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--limit-nodes", g.limit_nodes, "oracle node budget")->capture_default_str();

  std::string file, theorem_name = "valid", out_path, solve_theorem = "auto";
  auto* check = app.add_subcommand("check", "report the hypotheses of a theorem");
  check->add_option("file", file, "instance file, - for stdin")->required();
  check->add_option("--theorem", theorem_name, "thomassen, basic, main0, two-crossings, mainalt, one-crossing, valid");

  auto* solve = app.add_subcommand("solve", "constructive coloring");
  solve->add_option("file", file)->required();
  solve->add_option("--theorem", solve_theorem, "auto, thomassen, basic or one-crossing");
  solve->add_option("-o,--output", out_path);

  auto* oracle = app.add_subcommand("oracle", "exact search");
  oracle->add_option("file", file)->required();
  oracle->add_option("-o,--output", out_path);

  std::vector<std::string> files;
  int count = 10, workers = 1;
  std::string solver_name = "auto", report_path, repro_dir;
  GenSpec spec;
  std::string family = "TRIANGULATION", base = "grid", gen_theorem;
  auto* verify = app.add_subcommand("verify", "batch check, solve and verify");
  verify->add_option("files", files, "instance files; without them instances are generated");
  verify->add_option("--theorem", theorem_name)->required();
  verify->add_option("--count", count, "generated instances");
  verify->add_option("--solver", solver_name)->check(CLI::IsMember({"auto", "constructive", "oracle"}));
  verify->add_option("--workers", workers);
  verify->add_option("--report", report_path, "write the JSON run report here");
  verify->add_option("--reproducers", repro_dir, "directory for falsification reproducers");
  add_gen_options(verify, spec, family, base, gen_theorem);

  auto* gen = app.add_subcommand("gen", "generate an instance");
  add_gen_options(gen, spec, family, base, gen_theorem);
  gen->add_option("-o,--output", out_path);

  bool color = false;
  auto* render = app.add_subcommand("render", "SVG drawing");
  render->add_option("file", file)->required();
  render->add_flag("--solve", color, "color the drawing first");
  render->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) {
      const Theorem t = theorem_or_throw(theorem_name);
      const Instance inst = parse_instance(read_input(file));
      ValidityReport r;
      try {
        r = check_theorem(inst, t);
      } catch (const StructuralError& e) {
        r.violations.push_back({"structure", {}, {}, {}, -1, -1, e.what()});
      }
      if (g.json()) {
        json j = report_json(r);
        j["theorem"] = to_string(t);
        std::cout << j.dump(2) << "\n";
      } else {
        print_report(r);
      }
      return r.ok() ? kOk : kHypothesis;
    }
    if (*solve) {
      const Instance inst = parse_instance(read_input(file));
      Theorem t = Theorem::Basic;
      if (solve_theorem == "auto") {
        if (inst.drawing.crossings().size() == 1) t = Theorem::OneCrossing;
        else if (inst.path.size() == 2 && check_theorem(inst, Theorem::Thomassen).ok()) t = Theorem::Thomassen;
      } else {
        t = theorem_or_throw(solve_theorem);
      }
      ColoringResult r;
      if (t == Theorem::OneCrossing) {
        r = color_one_crossing(inst.drawing, inst.lists);
      } else if (!inst.drawing.crossings().empty()) {
        r.outcome = Outcome::HypothesisViolation;
        r.report.violations.push_back({"planar", {}, {}, {}, -1, -1, "the drawing has crossings"});
      } else if (t == Theorem::Thomassen) {
        if (inst.path.size() != 2) throw CLI::ValidationError("--theorem", "thomassen needs a PATH of two vertices");
        r = color_thomassen(inst.drawing.planarization(), inst.lists, inst.path[0], inst.path[1]);
      } else if (t == Theorem::Basic) {
        r = color_basic(inst.drawing.planarization(), inst.path, inst.lists);
      } else {
        throw CLI::ValidationError("--theorem", "no constructive solver for " + std::string(to_string(t)));
      }
      if (g.json()) {
        json j = {{"outcome", to_string(r.outcome)}, {"theorem", to_string(t)}};
        if (r.ok()) j["coloring"] = r.coloring;
        if (!r.report.ok()) j["report"] = report_json(r.report);
        write_output(out_path, j.dump(2) + "\n");
      } else if (r.ok()) {
        write_output(out_path, coloring_text(r.coloring));
      } else {
        std::cout << to_string(r.outcome) << "\n";
        print_report(r.report);
      }
      return r.ok() ? kOk : r.outcome == Outcome::Uncolorable ? kFail : kHypothesis;
    }
    if (*oracle) {
      const Instance inst = parse_instance(read_input(file));
      const ExactResult r = solve_exact(inst.adjacency(), inst.lists, g.limit_nodes);
      if (g.json()) {
        json j = {{"result", to_string(r.result)},
                  {"nodes", r.stats.nodes},
                  {"backtracks", r.stats.backtracks},
                  {"seconds", r.stats.seconds}};
        if (r.result == SearchResult::Colorable) j["coloring"] = r.coloring;
        write_output(out_path, j.dump(2) + "\n");
      } else if (r.result == SearchResult::Colorable) {
        write_output(out_path, coloring_text(r.coloring));
      } else {
        std::cout << to_string(r.result) << "\n";
      }
      return r.result == SearchResult::Colorable ? kOk : r.result == SearchResult::Uncolorable ? kFail : kLimit;
    }
    if (*verify) {
      const Theorem t = theorem_or_throw(theorem_name);
      RunOptions opts;
      opts.solver = *solver_from_name(solver_name);
      opts.node_limit = g.limit_nodes;
      opts.workers = workers;
      opts.reproducer_dir = repro_dir;
      RunReport rep;
      if (!files.empty()) {
        std::vector<Instance> insts;
        for (const auto& f : files) insts.push_back(parse_instance(read_input(f)));
        rep = run_instances(insts, t, opts);
      } else {
        finish_spec(spec, family, base, gen_theorem);
        if (!spec.theorem) spec.theorem = t;
        std::vector<GenSpec> specs;
        for (int i = 0; i < count; ++i) {
          GenSpec s = spec;
          s.seed = derive_seed(g.seed, static_cast<std::uint64_t>(i));
          specs.push_back(s);
        }
        rep = run_experiment(specs, t, opts);
      }
      if (!report_path.empty()) write_output(report_path, rep.to_json() + "\n");
      if (g.json() && report_path.empty()) {
        std::cout << rep.to_json() << "\n";
      } else {
        std::cout << to_string(t) << ": " << rep.instances.size() << " instances, " << rep.count(RunOutcome::Solved)
                  << " solved, " << rep.count(RunOutcome::Uncolorable) << " uncolorable, "
                  << rep.count(RunOutcome::Skipped) << " skipped, " << rep.count(RunOutcome::Limit) << " limit, "
                  << rep.count(RunOutcome::Error) << " error\n";
      }
      if (!rep.falsifications.empty() || rep.count(RunOutcome::Error) > 0) return kFail;
      if (rep.count(RunOutcome::Limit) > 0) return kLimit;
      return rep.count(RunOutcome::Skipped) > 0 ? kHypothesis : kOk;
    }
    if (*gen) {
      finish_spec(spec, family, base, gen_theorem);
      spec.seed = g.seed;
      write_output(out_path, serialize_instance(gen_instance(spec)));
      return kOk;
    }
    if (*render) {
      const Instance inst = parse_instance(read_input(file));
      std::optional<Coloring> c;
      if (color) {
        const ExactResult r = solve_exact(inst.adjacency(), inst.lists, g.limit_nodes);
        if (r.result == SearchResult::Colorable) c = r.coloring;
      }
      write_output(out_path, render_svg(inst, c));
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const InfeasibleSpec& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n" << e.dump();
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
