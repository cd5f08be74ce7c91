#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace fivelist;

namespace {

Drawing golden(const std::string& name) {
  return parse_instance(ref::read_file(std::string(FIVELIST_GOLDEN_DIR) + "/" + name)).drawing;
}

bool same_cycle(std::vector<Vertex> a, std::vector<Vertex> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  std::rotate(b.begin(), it, b.end());
  return a == b;
}

// Raw drawings equal up to where each rotation starts and how crossings are
// written.
bool equivalent(const RawDrawing& x, const RawDrawing& y) {
  if (x.rotation.size() != y.rotation.size()) return false;
  for (std::size_t v = 0; v < x.rotation.size(); ++v)
    if (!same_cycle(x.rotation[v], y.rotation[v])) return false;
  std::set<CrossingSpec> cx, cy;
  for (const auto& c : x.crossings) cx.insert(canonical(c));
  for (const auto& c : y.crossings) cy.insert(canonical(c));
  return cx == cy;
}

}  // namespace

TEST_CASE("K5 with one crossing planarizes to six vertices") {
  const Drawing d = golden("k5_one_crossing.txt");
  CHECK(d.num_original() == 5);
  CHECK(d.planarization().num_vertices() == 6);
  REQUIRE(d.crossings().size() == 1);
  const Vertex x = d.crossings()[0].dummy;
  CHECK(x == 5);
  CHECK(d.planarization().degree(x) == 4);
  CHECK(d.original_edges().size() == 10);
  CHECK(euler_consistent(d.planarization()));
}

TEST_CASE("planar input planarizes to itself") {
  const RawDrawing raw = ref::grid_drawing(4, 3, {});
  const Drawing d = planarize(raw);
  CHECK(d.crossings().empty());
  CHECK(d.planarization() == PlaneGraph(raw.rotation, raw.outer));
  CHECK(drawing_faces(d).size() == d.planarization().faces().size());
}

TEST_CASE("two disjoint crossings in a 10x10 grid") {
  const Drawing d = planarize(ref::grid_drawing(10, 10, {11, 55}));
  CHECK(d.crossings().size() == 2);
  CHECK(d.planarization().num_vertices() == 102);
  const PlaneGraph& g = d.planarization();
  CHECK(g.num_vertices() - g.num_edges() + static_cast<int>(g.faces().size()) == 2);
  // 81 squares, two of them cut into four.
  CHECK(g.faces().size() == 81 + 2 * 3 + 1);
}

TEST_CASE("dummy rotation alternates between the crossed edges") {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> squares;
    for (int s = 0; s < 8; ++s)
      if (rng.chance(0.4)) squares.push_back(s);
    const Drawing d = planarize(ref::ladder(9, squares));
    for (const Crossing& x : d.crossings()) {
      const auto r = d.planarization().rotation(x.dummy);
      REQUIRE(r.size() == 4);
      CHECK(same_cycle({r.begin(), r.end()}, {x.ends.a, x.ends.c, x.ends.b, x.ends.d}));
    }
  }
}

TEST_CASE("planarize rejects bad crossings") {
  RawDrawing raw = ref::grid_drawing(3, 3, {0});
  auto with = [&](CrossingSpec c) {
    RawDrawing r = raw;
    r.crossings.push_back(c);
    return r;
  };
  // edge 0-4 crossing itself
  CHECK_THROWS_AS(planarize(with({0, 4, 0, 4})), StructuralError);
  // shares endpoint 0
  CHECK_THROWS_AS(planarize(with({0, 4, 0, 1})), StructuralError);
  // not an edge
  CHECK_THROWS_AS(planarize(with({0, 8, 1, 3})), StructuralError);
  // 0-4 already crossed by 1-3
  CHECK_THROWS_AS(planarize(with({0, 4, 1, 3})), StructuralError);
  // wrong orientation of the four ends
  raw.crossings[0] = {0, 4, 3, 1};
  CHECK_THROWS_AS(planarize(raw), StructuralError);
}

TEST_CASE("crossing_adjacent") {
  const Drawing d = planarize(ref::grid_drawing(3, 3, {0}));
  // ab = 0-4 crosses cd = 1-3
  CHECK(crossing_adjacent(d, 0, 1));
  CHECK(crossing_adjacent(d, 0, 3));
  CHECK(crossing_adjacent(d, 4, 1));
  CHECK_FALSE(crossing_adjacent(d, 0, 4));
  CHECK_FALSE(crossing_adjacent(d, 1, 3));
  CHECK_FALSE(crossing_adjacent(d, 0, 8));
  const Drawing flat = planarize(ref::grid_drawing(3, 3, {}));
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = 0; v < 9; ++v)
      if (u != v) CHECK_FALSE(crossing_adjacent(flat, u, v));
}

TEST_CASE("crossing subgraph") {
  const Drawing d = planarize(ref::grid_drawing(3, 3, {4}));
  const SubgraphRef gx = d.crossing_subgraph(0);
  CHECK(std::set<Vertex>(gx.vertices.begin(), gx.vertices.end()) == std::set<Vertex>{4, 5, 7, 8});
  CHECK(std::set<Edge>(gx.edges.begin(), gx.edges.end()) == std::set<Edge>{{4, 8}, {5, 7}});
  CHECK(d.is_crossed({4, 8}));
  CHECK_FALSE(d.is_crossed({4, 5}));
  CHECK(d.crossing_of({5, 7}) == 0);
}

TEST_CASE("drawing faces") {
  const Drawing flat = planarize(ref::grid_drawing(3, 3, {}));
  const auto faces = drawing_faces(flat);
  REQUIRE(faces.size() == flat.planarization().faces().size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto vs = flat.planarization().faces()[i].vertices();
    REQUIRE(faces[i].items.size() == vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j) {
      CHECK_FALSE(faces[i].items[j].is_crossing);
      CHECK(faces[i].items[j].id == vs[j]);
    }
  }

  // In the golden K5 the outer face is bounded by 0, 2 and 4 only.
  const Drawing k5 = golden("k5_one_crossing.txt");
  int touching = 0;
  for (const auto& f : drawing_faces(k5)) {
    touching += !f.crossing_ids().empty();
    if (f.outer) {
      CHECK(f.crossing_ids().empty());
      std::set<int> ids;
      for (const auto& it : f.items) ids.insert(it.id);
      CHECK(ids == std::set<int>{0, 2, 4});
    }
  }
  CHECK(touching == 4);

  // The sides of a corner square keep its crossing off the outer face.
  const Drawing corner = planarize(ref::grid_drawing(3, 3, {0}));
  for (const auto& f : drawing_faces(corner))
    if (f.outer) CHECK(f.crossing_ids().empty());
}

TEST_CASE("crossing on the outer face") {
  // Square 0 1 3 2 with both diagonals and nothing outside: the crossing
  // sits inside. Removing side 0-1 opens the crossing to the outer face.
  const std::vector<std::pair<double, double>> pts{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  RawDrawing raw;
  raw.rotation = ref::angular(pts, {{0, 2}, {1, 3}, {2, 3}, {0, 3}, {1, 2}});
  raw.crossings = {{0, 3, 1, 2}};
  raw.outer = {{0, 2}};
  const Drawing d = planarize(raw);
  bool found = false;
  for (const auto& f : drawing_faces(d))
    if (f.outer) found = f.crossing_ids() == std::vector<int>{0};
  CHECK(found);
  CHECK(d.on_outer_face(0));
  CHECK(d.on_outer_face(1));
}

TEST_CASE("planarize round trip on 1000 random drawings") {
  Rng rng(2024);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    RawDrawing raw;
    if (t % 2 == 0) {
      const int w = 2 + static_cast<int>(rng.below(6)), h = 2 + static_cast<int>(rng.below(6));
      std::vector<int> squares;
      for (int row = 0; row + 1 < h; ++row)
        for (int col = 0; col + 1 < w; ++col)
          if (rng.chance(0.3)) squares.push_back(row * w + col);
      raw = ref::grid_drawing(w, h, squares);
    } else {
      GenSpec spec;
      spec.family = Family::NearPlanar;
      spec.base = Base::Triangulation;
      spec.n = 6 + static_cast<int>(rng.below(25));
      spec.crossings = static_cast<int>(rng.below(3));
      spec.min_distance = 1;
      spec.theorem = Theorem::TwoCrossings;
      spec.seed = rng.next();
      try {
        raw = gen_instance(spec).drawing.unplanarize();
      } catch (const InfeasibleSpec&) {
        continue;
      }
    }
    const Drawing d = planarize(raw);
    const RawDrawing back = d.unplanarize();
    CHECK(equivalent(back, raw));
    CHECK(planarize(back) == d);
    CHECK(euler_consistent(d.planarization()));
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("drawn adjacency is the planarization minus dummies plus crossed edges") {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> squares;
    for (int s = 0; s < 5; ++s)
      if (rng.chance(0.5)) squares.push_back(s * 2);
    const Drawing d = planarize(ref::ladder(11, squares));
    std::set<Edge> expect;
    for (const Edge& e : d.planarization().edges())
      if (!d.is_dummy(e.first) && !d.is_dummy(e.second)) expect.insert(e);
    for (const Crossing& x : d.crossings()) expect.insert(x.first()), expect.insert(x.second());
    const auto got = d.original_edges();
    CHECK(std::set<Edge>(got.begin(), got.end()) == expect);
    // Distances in the drawn graph never exceed those with dummies deleted.
    std::vector<bool> keep(d.planarization().num_vertices(), true);
    for (const Crossing& x : d.crossings()) keep[x.dummy] = false;
    const auto plain = ref::distances(d.planarization().subgraph(keep).graph.adjacency());
    const auto drawn = ref::distances(d.original_adjacency());
    for (int u = 0; u < d.num_original(); ++u)
      for (int v = 0; v < d.num_original(); ++v) CHECK(drawn[u][v] <= plain[u][v]);
  }
}
