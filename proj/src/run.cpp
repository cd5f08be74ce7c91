#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "fivelist/format.hpp"
#include "fivelist/harness.hpp"

namespace fivelist {

const char* to_string(RunOutcome o) {
  switch (o) {
    case RunOutcome::Solved: return "SOLVED";
    case RunOutcome::Uncolorable: return "UNCOLORABLE";
    case RunOutcome::Skipped: return "SKIPPED";
    case RunOutcome::Limit: return "LIMIT";
    case RunOutcome::Error: return "ERROR";
  }
  return "?";
}

const char* to_string(SolverChoice s) {
  switch (s) {
    case SolverChoice::Auto: return "auto";
    case SolverChoice::Constructive: return "constructive";
    case SolverChoice::Oracle: return "oracle";
  }
  return "?";
}

std::optional<SolverChoice> solver_from_name(std::string_view name) {
  for (SolverChoice s : {SolverChoice::Auto, SolverChoice::Constructive, SolverChoice::Oracle})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

int RunReport::count(RunOutcome o) const {
  int k = 0;
  for (const auto& r : instances) k += r.outcome == o;
  return k;
}

std::string RunReport::to_json(int indent) const {
  using nlohmann::json;
  json items = json::array();
  std::uint64_t nodes = 0;
  double seconds = 0;
  for (const auto& r : instances) {
    json violations = json::array();
    for (const auto& v : r.report.violations) {
      violations.push_back({{"condition", v.condition}, {"vertices", v.vertices}, {"detail", v.detail}});
    }
    items.push_back({{"index", r.index},
                     {"seed", r.seed},
                     {"outcome", to_string(r.outcome)},
                     {"solver", r.solver},
                     {"vertices", r.vertices},
                     {"crossings", r.crossings},
                     {"seconds", r.seconds},
                     {"nodes", r.stats.nodes},
                     {"backtracks", r.stats.backtracks},
                     {"violations", violations},
                     {"detail", r.detail},
                     {"reproducer", r.reproducer}});
    nodes += r.stats.nodes;
    seconds += r.seconds;
  }
  json summary = {{"theorem", theorem},
                  {"total", instances.size()},
                  {"solved", count(RunOutcome::Solved)},
                  {"uncolorable", count(RunOutcome::Uncolorable)},
                  {"skipped", count(RunOutcome::Skipped)},
                  {"limit", count(RunOutcome::Limit)},
                  {"error", count(RunOutcome::Error)},
                  {"falsifications", falsifications},
                  {"nodes", nodes},
                  {"seconds", seconds}};
  return json{{"instances", items}, {"summary", summary}}.dump(indent);
}

namespace {

bool has_constructive(Theorem t) {
  return t == Theorem::Thomassen || t == Theorem::Basic || t == Theorem::OneCrossing;
}

ColoringResult run_constructive(const Instance& inst, Theorem t) {
  switch (t) {
    case Theorem::Thomassen:
      return color_thomassen(inst.drawing.planarization(), inst.lists, inst.path.at(0), inst.path.at(1));
    case Theorem::Basic: return color_basic(inst.drawing.planarization(), inst.path, inst.lists);
    case Theorem::OneCrossing: return color_one_crossing(inst.drawing, inst.lists);
    default: throw std::invalid_argument(std::string("no constructive solver for ") + to_string(t));
  }
}

const char* constructive_name(Theorem t) {
  switch (t) {
    case Theorem::Thomassen: return "color_thomassen";
    case Theorem::Basic: return "color_basic";
    default: return "color_one_crossing";
  }
}

void verify(InstanceRecord& rec, const Instance& inst, const Coloring& c) {
  if (auto problem = coloring_problem(inst.adjacency(), inst.lists, c)) {
    rec.outcome = RunOutcome::Error;
    rec.detail = "coloring rejected by the verifier: " + *problem;
  } else {
    rec.outcome = RunOutcome::Solved;
  }
}

InstanceRecord run_one(const Instance& inst, Theorem which, const RunOptions& opts, std::string& dump) {
  InstanceRecord rec;
  rec.vertices = inst.num_vertices();
  rec.crossings = static_cast<int>(inst.drawing.crossings().size());
  try {
    rec.report = check_theorem(inst, which);
  } catch (const std::exception& e) {
    rec.report.violations.push_back({"structure", {}, {}, {}, -1, -1, e.what()});
  }
  if (!rec.report.ok()) {
    rec.outcome = RunOutcome::Skipped;
    rec.detail = "hypotheses of " + std::string(to_string(which)) + " fail";
    return rec;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    const bool constructive = opts.solver != SolverChoice::Oracle && has_constructive(which);
    if (opts.solver == SolverChoice::Constructive && !constructive) {
      throw std::invalid_argument(std::string("no constructive solver for ") + to_string(which));
    }
    if (constructive) {
      rec.solver = constructive_name(which);
      const ColoringResult r = run_constructive(inst, which);
      if (r.outcome == Outcome::Colored) {
        verify(rec, inst, r.coloring);
      } else if (r.outcome == Outcome::Uncolorable) {
        rec.outcome = RunOutcome::Uncolorable;
      } else {
        rec.outcome = RunOutcome::Skipped;
        rec.report = r.report;
        rec.detail = "solver rejected the hypotheses";
      }
    } else {
      rec.solver = "oracle";
      const ExactResult r = solve_exact(inst.adjacency(), inst.lists, opts.node_limit);
      rec.stats = r.stats;
      if (r.result == SearchResult::Colorable) verify(rec, inst, r.coloring);
      else if (r.result == SearchResult::Uncolorable) rec.outcome = RunOutcome::Uncolorable;
      else rec.outcome = RunOutcome::Limit;
    }
  } catch (const InternalError& e) {
    rec.outcome = RunOutcome::Error;
    rec.detail = e.what();
    dump = e.dump();
  } catch (const std::exception& e) {
    rec.outcome = RunOutcome::Error;
    rec.detail = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  out << text;
}

}  // namespace

RunReport run_instances(const std::vector<Instance>& instances, Theorem which, const RunOptions& opts,
                        const std::vector<std::uint64_t>& seeds) {
  RunReport rep;
  rep.theorem = to_string(which);
  rep.instances.resize(instances.size());
  std::vector<std::string> dumps(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      rep.instances[i] = run_one(instances[i], which, opts, dumps[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < opts.workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < instances.size(); ++i) {
    InstanceRecord& rec = rep.instances[i];
    rec.index = static_cast<int>(i);
    if (i < seeds.size()) rec.seed = seeds[i];
    if (rec.outcome == RunOutcome::Uncolorable) rep.falsifications.push_back(rec.index);
    const bool keep = rec.outcome == RunOutcome::Uncolorable || rec.outcome == RunOutcome::Error;
    if (keep && !opts.reproducer_dir.empty() && rec.vertices > 0) {
      const std::string stem = std::string(to_string(which)) + "_" + std::to_string(i);
      const std::filesystem::path dir(opts.reproducer_dir);
      write_file(dir / (stem + ".txt"), "# " + std::string(to_string(rec.outcome)) + ": " + rec.detail + "\n" +
                                            serialize_instance(instances[i]));
      if (!dumps[i].empty()) write_file(dir / (stem + "_sub.txt"), dumps[i]);
      rec.reproducer = (dir / (stem + ".txt")).string();
    }
  }
  return rep;
}

RunReport run_experiment(const std::vector<GenSpec>& specs, Theorem which, const RunOptions& opts) {
  std::vector<Instance> instances(specs.size());
  std::vector<std::string> failures(specs.size());
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    seeds.push_back(specs[i].seed);
    try {
      instances[i] = gen_instance(specs[i]);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  RunReport rep = run_instances(instances, which, opts, seeds);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (failures[i].empty()) continue;
    InstanceRecord& rec = rep.instances[i];
    rec.outcome = RunOutcome::Error;
    rec.report = {};
    rec.solver.clear();
    rec.detail = "generation failed: " + failures[i];
  }
  return rep;
}

}  // namespace fivelist
