#include <set>

#include "doctest.h"
#include "fivelist/render.hpp"
#include "fivelist/solver.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace fivelist;

namespace {

const char* kGolden[] = {"triangle.txt",     "k4.txt",          "k5_one_crossing.txt", "tri12_thomassen.txt",
                         "grid4x3_basic.txt", "wheels_basic.txt", "onecross12.txt",      "grid20_main0.txt",
                         "strip14_nset.txt"};

std::string golden_text(const std::string& name) {
  return ref::read_file(std::string(FIVELIST_GOLDEN_DIR) + "/" + name);
}

bool connected(const Adjacency& adj) {
  if (adj.empty()) return true;
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) seen[w] = true, stack.push_back(w);
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

TEST_CASE("generators are deterministic in the spec") {
  std::vector<GenSpec> specs(5);
  specs[0].family = Family::Triangulation;
  specs[1].family = Family::Grid;
  specs[2].family = Family::WheelStack;
  specs[3].family = Family::NearPlanar;
  specs[3].base = Base::Triangulation;
  specs[3].crossings = 2;
  specs[3].theorem = Theorem::TwoCrossings;
  specs[3].n = 12;
  specs[4].family = Family::Thm5NSet;
  specs[4].base = Base::Strip;
  specs[4].n = 14;
  specs[4].width = 12;
  specs[4].n_count = 2;
  for (GenSpec& s : specs) {
    for (std::uint64_t seed : {1, 2, 99}) {
      s.seed = seed;
      const Instance a = gen_instance(s);
      const Instance b = gen_instance(s);
      CHECK(serialize_instance(a) == serialize_instance(b));
      CHECK(check_theorem(a, target_theorem(s)).ok());
    }
  }
  GenSpec t;
  t.seed = 1;
  const std::string one = serialize_instance(gen_instance(t));
  t.seed = 2;
  CHECK(one != serialize_instance(gen_instance(t)));
}

TEST_CASE("random triangulations") {
  Rng rng(20);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + t;
    const PlaneGraph g = random_triangulation(n, rng, t % 7);
    CHECK(g.num_vertices() == n);
    CHECK(g.num_edges() == 3 * n - 6);
    CHECK(euler_consistent(g));
    CHECK(connected(g.adjacency()));
    for (std::size_t f = 0; f < g.faces().size(); ++f) CHECK(g.faces()[f].vertices().size() == 3);
  }
  GenSpec spec;
  spec.n = 20;
  const Instance inst = gen_instance(spec);
  CHECK(inst.num_vertices() == 20);
  CHECK(euler_consistent(inst.drawing.planarization()));
  CHECK(connected(inst.adjacency()));
}

TEST_CASE("wheel stacks for every spoke count") {
  for (int rings = 1; rings <= 4; ++rings)
    for (int spokes = 3; spokes <= 9; ++spokes) {
      CAPTURE(rings);
      CAPTURE(spokes);
      const PlaneGraph g = wheel_stack(rings, spokes);
      CHECK(g.num_vertices() == 1 + rings * spokes);
      // every bounded face is a triangle
      for (std::size_t f = 0; f < g.faces().size(); ++f)
        if (!g.is_outer_face(static_cast<int>(f))) CHECK(g.faces()[f].vertices().size() == 3);
      const auto outer = g.outer_cycle().vertices;
      CHECK(std::set<Vertex>(outer.begin(), outer.end()).size() == static_cast<std::size_t>(spokes));
      CHECK(*std::min_element(outer.begin(), outer.end()) == 1 + (rings - 1) * spokes);
    }
}

TEST_CASE("near-planar grid with two crossings passes main0") {
  GenSpec spec;
  spec.family = Family::NearPlanar;
  spec.base = Base::Grid;
  spec.width = spec.height = 20;
  spec.crossings = 2;
  spec.theorem = Theorem::Main0;
  const Instance inst = gen_instance(spec);
  CHECK(inst.drawing.crossings().size() == 2);
  CHECK(check_theorem(inst, Theorem::Main0).ok());
  CHECK(inst.num_vertices() == 400);
}

TEST_CASE("infeasible specs") {
  GenSpec spec;
  spec.family = Family::Thm5NSet;
  spec.base = Base::Strip;
  spec.n = 14;
  spec.width = 12;
  spec.n_count = 2;
  spec.min_distance = 10;
  CHECK_THROWS_AS(gen_instance(spec), InfeasibleSpec);
  GenSpec np;
  np.family = Family::NearPlanar;
  np.base = Base::Grid;
  np.width = np.height = 4;
  np.crossings = 2;
  np.theorem = Theorem::Main0;
  CHECK_THROWS_AS(gen_instance(np), InfeasibleSpec);
}

TEST_CASE("parse") {
  const Instance t = parse_instance("GRAPH 3\nROT 0: 1 2\nROT 1: 0 2\nROT 2: 0 1\nOUTER 0 2\nLIST 2: 2 1 1\n");
  CHECK(t.lists[2] == ColorList{1, 2});
  CHECK(t.lists[0].empty());

  auto line_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("GRAPH 3\nROT 0: 1 2\nROT 1: 0 x\n") == 3);
  CHECK(line_of("GRAPH 2\nROT 0: 1\nROT 1: 0\nOUTER 0 1\nFOO 1\n") == 5);
  CHECK(line_of("# only a comment\nROT 0: 1\n") == 2);
  CHECK(line_of("GRAPH 3\nROT 0: 1 2\nROT 1: 0 2\nROT 2: 0 1\nOUTER 0 2\nLIST 7: 1\n") == 6);

  // a crossed edge on the precolored path
  CHECK_THROWS_AS(parse_instance(golden_text("k5_one_crossing.txt") + "PATH 0 1\n"), ParseError);
}

TEST_CASE("golden files round trip") {
  for (const char* name : kGolden) {
    CAPTURE(name);
    const std::string text = golden_text(name);
    const Instance inst = parse_instance(text);
    CHECK(serialize_instance(inst) == ref::strip_comments(text));
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
}

TEST_CASE("render") {
  const Instance tri = parse_instance(golden_text("triangle.txt"));
  const std::string svg = render_svg(tri);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(ref::count_of(svg, "<svg xmlns=\"http://www.w3.org/2000/svg\"") == 1);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(ref::count_of(svg, "<circle") == 3);
  CHECK(ref::count_of(svg, "<line") == 3);
  CHECK(ref::count_of(svg, "class=\"crossing\"") == 0);
  CHECK(ref::count_of(svg, std::string("fill=\"") + fill_for_color(kUncolored) + "\"") >= 3);

  // C5 colored 1 2 1 2 3
  PlaneGraph c5(ref::cycle(5), {{1, 0}});
  const Instance cyc = make_planar_instance(c5, ref::uniform_lists(5, {1, 2, 3}));
  const Coloring c{1, 2, 1, 2, 3};
  const std::string colored = render_svg(cyc, c);
  CHECK(ref::count_of(colored, "<circle") == 5);
  for (Vertex v = 0; v < 5; ++v) {
    const std::string tag = "data-vertex=\"" + std::to_string(v) + "\" data-color=\"" + std::to_string(c[v]) + "\"";
    REQUIRE(colored.find(tag) != std::string::npos);
    const std::size_t at = colored.find(tag);
    const std::size_t end = colored.find("/>", at);
    CHECK(colored.substr(at, end - at).find(std::string("fill=\"") + fill_for_color(c[v]) + "\"") !=
          std::string::npos);
  }
  CHECK(std::string(fill_for_color(1)) != fill_for_color(2));

  const Instance k5 = parse_instance(golden_text("k5_one_crossing.txt"));
  const std::string ks = render_svg(k5);
  CHECK(ref::count_of(ks, "class=\"crossing\"") == 1);
  CHECK(ref::count_of(ks, "<circle") == 5);
  CHECK(ref::count_of(ks, "<polyline") == 2);
  CHECK(render_svg(k5) == ks);
}

TEST_CASE("run_experiment on basic sweeps") {
  SweepSpec sw;
  sw.count = 500;
  sw.seed = 3;
  const auto batch = basic_sweep(sw);
  const RunReport rep = run_instances(batch, Theorem::Basic);
  CHECK(rep.count(RunOutcome::Solved) == 500);
  CHECK(rep.falsifications.empty());
  for (const auto& rec : rep.instances) CHECK(rec.solver == "color_basic");

  RunOptions oracle;
  oracle.solver = SolverChoice::Oracle;
  oracle.workers = 3;
  const RunReport o = run_instances({batch.begin(), batch.begin() + 50}, Theorem::Basic, oracle);
  CHECK(o.count(RunOutcome::Solved) == 50);
  for (const auto& rec : o.instances) CHECK(rec.stats.nodes > 0);
}

TEST_CASE("run_experiment with one crossing") {
  std::vector<GenSpec> specs;
  for (std::uint64_t s = 1; s <= 30; ++s) {
    GenSpec spec;
    spec.family = Family::NearPlanar;
    spec.base = Base::Triangulation;
    spec.n = 8 + static_cast<int>(s);
    spec.crossings = 1;
    spec.theorem = Theorem::OneCrossing;
    spec.seed = s;
    specs.push_back(spec);
  }
  const RunReport rep = run_experiment(specs, Theorem::OneCrossing);
  CHECK(rep.count(RunOutcome::Solved) == 30);
  for (const auto& rec : rep.instances) CHECK(rec.crossings == 1);
}

TEST_CASE("skipped, error and reproducers") {
  SweepSpec sw;
  sw.count = 3;
  std::vector<Instance> batch = basic_sweep(sw);
  // an outer list too small
  Instance bad = batch[0];
  for (Vertex v = 0; v < bad.num_vertices(); ++v)
    if (std::find(bad.path.begin(), bad.path.end(), v) == bad.path.end()) {
      bad.lists.set(v, {bad.lists[v].front()});
      break;
    }
  batch.push_back(bad);
  // uncolorable and outside every hypothesis: checked by the oracle only
  Instance k4 = parse_instance(golden_text("k4.txt"));
  k4.lists = ref::uniform_lists(4, {1, 2, 3});
  batch.push_back(k4);

  const auto dir = std::filesystem::temp_directory_path() / "fivelist_test_repro";
  std::filesystem::remove_all(dir);
  RunOptions opts;
  opts.reproducer_dir = dir.string();
  const RunReport rep = run_instances(batch, Theorem::Basic, opts, {11, 12, 13, 14, 15});
  CHECK(rep.instances[3].outcome == RunOutcome::Skipped);
  CHECK_FALSE(rep.instances[3].report.ok());
  CHECK(rep.instances[4].outcome == RunOutcome::Skipped);
  CHECK(rep.count(RunOutcome::Solved) == 3);
  CHECK(rep.instances[2].seed == 13);
  CHECK(rep.falsifications.empty());

  RunOptions forced = opts;
  forced.solver = SolverChoice::Oracle;
  const RunReport fr = run_instances({k4}, Theorem::Valid, forced);
  if (fr.instances[0].outcome == RunOutcome::Uncolorable) {
    CHECK(fr.falsifications == std::vector<int>{0});
    REQUIRE_FALSE(fr.instances[0].reproducer.empty());
    const std::string text = ref::read_file(fr.instances[0].reproducer);
    CHECK(parse_instance(text) == k4);
  } else {
    CHECK(fr.instances[0].outcome == RunOutcome::Skipped);
  }

  const auto j = nlohmann::json::parse(rep.to_json());
  REQUIRE(j.contains("instances"));
  REQUIRE(j.contains("summary"));
  CHECK(j["instances"].size() == 5);
  CHECK(j["summary"]["total"] == 5);
  CHECK(j["summary"]["solved"] == 3);
  CHECK(j["summary"]["skipped"] == 2);
  CHECK(j["instances"][3]["outcome"] == to_string(RunOutcome::Skipped));
  CHECK_FALSE(j["instances"][3]["violations"].empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("generation failures become error records") {
  GenSpec bad;
  bad.family = Family::Thm5NSet;
  bad.base = Base::Strip;
  bad.n = 14;
  bad.width = 12;
  bad.n_count = 2;
  bad.min_distance = 10;
  GenSpec good;
  const RunReport rep = run_experiment({good, bad}, Theorem::Thomassen);
  CHECK(rep.instances[0].outcome == RunOutcome::Solved);
  CHECK(rep.instances[1].outcome == RunOutcome::Error);
  CHECK_FALSE(rep.instances[1].detail.empty());
}
