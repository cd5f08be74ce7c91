#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace fivelist;

namespace {

PlaneGraph polygon(int n, std::vector<Edge> extra = {}, std::vector<std::pair<double, double>> inner = {}) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * i / n;
    pts.push_back({3 * std::cos(a), 3 * std::sin(a)});
  }
  pts.insert(pts.end(), inner.begin(), inner.end());
  std::vector<Edge> edges = extra;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return PlaneGraph::from_positions(pts, edges);
}

Walk ring(int n) {
  Walk w{{}, true};
  for (int i = 0; i < n; ++i) w.vertices.push_back(i);
  return w;
}

std::set<Edge> edge_set(const SubEmbedding& s) {
  std::set<Edge> out;
  for (auto [a, b] : s.graph.edges()) out.insert(make_edge(s.to_parent[a], s.to_parent[b]));
  return out;
}

std::set<Vertex> vertex_set(const SubEmbedding& s) { return {s.to_parent.begin(), s.to_parent.end()}; }

// Random plane graph: triangulation with some edges removed.
PlaneGraph thinned(int n, Rng& rng, int removals) {
  PlaneGraph g = random_triangulation(n, rng, n);
  for (int k = 0; k < removals; ++k) {
    const auto es = g.edges();
    if (es.empty()) break;
    const Edge e = es[rng.below(es.size())];
    std::set<Edge> drop{e};
    std::vector<bool> keep(g.num_vertices(), true);
    g = g.subgraph(keep, drop).graph;
  }
  return g;
}

// Every k-chord of cycle k by exhaustive path search.
std::set<std::vector<Vertex>> brute_chords(const PlaneGraph& g, const Walk& k, int order) {
  const int n = g.num_vertices();
  std::vector<bool> on(n, false);
  for (Vertex v : k.vertices) on[v] = true;
  std::set<Edge> cyc;
  for (std::size_t i = 0; i < k.vertices.size(); ++i)
    cyc.insert(make_edge(k.vertices[i], k.vertices[(i + 1) % k.vertices.size()]));
  std::set<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::function<void(Vertex)> go = [&](Vertex v) {
    path.push_back(v);
    if (static_cast<int>(path.size()) == order + 1) {
      if (on[v] && !(order == 1 && cyc.contains(make_edge(path[0], v)))) {
        auto p = path;
        if (p.front() > p.back()) std::reverse(p.begin(), p.end());
        out.insert(p);
      }
    } else {
      for (Vertex w : g.rotation(v)) {
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        if (static_cast<int>(path.size()) < order && on[w]) continue;
        go(w);
      }
    }
    path.pop_back();
  };
  for (Vertex v : k.vertices) go(v);
  return out;
}

}  // namespace

TEST_CASE("trace_faces on small graphs") {
  const PlaneGraph k3 = polygon(3);
  REQUIRE(k3.faces().size() == 2);
  for (const Face& f : k3.faces()) CHECK(f.size() == 3);

  const PlaneGraph k4 = polygon(3, {{0, 3}, {1, 3}, {2, 3}}, {{0, 0}});
  CHECK(k4.faces().size() == 4);
  CHECK(4 - 6 + static_cast<int>(k4.faces().size()) == 2);

  const PlaneGraph p3 = PlaneGraph::from_positions({{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}});
  REQUIRE(p3.faces().size() == 1);
  CHECK(p3.faces()[0].size() == 4);
}

TEST_CASE("every dart lies on exactly one face") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const PlaneGraph g = thinned(3 + t % 20, rng, t % 7);
    std::multiset<Dart> seen;
    for (const Face& f : trace_faces(g))
      for (const Dart& d : f.darts) seen.insert(d);
    CHECK(static_cast<int>(seen.size()) == 2 * g.num_edges());
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      for (Vertex w : g.rotation(v)) CHECK(seen.count({v, w}) == 1);
  }
}

TEST_CASE("Euler formula on random embeddings") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const PlaneGraph g = thinned(3 + t % 25, rng, t % 11);
    // Traced faces: every component with edges contributes V - E + F = 2,
    // an isolated vertex contributes 1.
    int with_edges = 0, isolated = 0;
    for (const auto& comp : connected_components(g.adjacency())) (comp.size() == 1 ? isolated : with_edges)++;
    CHECK(g.num_vertices() - g.num_edges() + static_cast<int>(g.faces().size()) == 2 * with_edges + isolated);
    CHECK(euler_consistent(g));
  }
}

TEST_CASE("malformed rotations are rejected") {
  CHECK_THROWS_AS(PlaneGraph(Adjacency{{1}, {}}), StructuralError);
  CHECK_THROWS_AS(PlaneGraph(Adjacency{{0}}), StructuralError);
  CHECK_THROWS_AS(PlaneGraph(Adjacency{{1, 1}, {0, 0}}), StructuralError);
  // K4 with a rotation that is not planar.
  CHECK_THROWS_AS(PlaneGraph(Adjacency{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}), StructuralError);
}

TEST_CASE("walk length") {
  CHECK(length(Walk{{0, 1, 2}, false}) == 2);
  CHECK(length(Walk{{4}, false}) == 0);
  CHECK(length(Walk{{0, 1, 2, 3, 4}, true}) == 5);
}

TEST_CASE("k_chords examples") {
  const PlaneGraph c4d = polygon(4, {{0, 2}});
  const auto one = k_chords(c4d, ring(4), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].vertices == std::vector<Vertex>{0, 2});

  const PlaneGraph c4x = polygon(4, {{0, 4}, {2, 4}}, {{0, 0}});
  CHECK(k_chords(c4x, ring(4), 1).empty());
  const auto two = k_chords(c4x, ring(4), 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].vertices == std::vector<Vertex>{0, 4, 2});

  const PlaneGraph c3 = polygon(3);
  for (int order = 1; order <= 3; ++order) CHECK(k_chords(c3, ring(3), order).empty());

  CHECK_THROWS_AS(k_chords(c4d, Walk{{0, 1, 3}, true}, 1), StructuralError);
}

TEST_CASE("k_chords agree with path enumeration") {
  Rng rng(23);
  int compared = 0;
  for (int t = 0; t < 200; ++t) {
    const PlaneGraph g = thinned(4 + t % 7, rng, t % 4);
    for (const Face& f : g.faces()) {
      const auto vs = f.vertices();
      if (vs.size() < 3 || std::set<Vertex>(vs.begin(), vs.end()).size() != vs.size()) continue;
      const Walk k{vs, true};
      for (int order = 1; order <= 3; ++order) {
        std::set<std::vector<Vertex>> got;
        for (const Walk& q : k_chords(g, k, order)) {
          CHECK(q.vertices.front() < q.vertices.back());
          got.insert(q.vertices);
        }
        CHECK(got == brute_chords(g, k, order));
        ++compared;
      }
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("split_at_cycle examples") {
  const PlaneGraph k4 = polygon(3, {{0, 3}, {1, 3}, {2, 3}}, {{0, 0}});
  const auto s = split_at_cycle(k4, ring(3));
  CHECK(vertex_set(s.interior) == std::set<Vertex>{0, 1, 2, 3});
  CHECK(edge_set(s.interior).size() == 6);
  CHECK(vertex_set(s.exterior) == std::set<Vertex>{0, 1, 2});
  CHECK(edge_set(s.exterior).size() == 3);

  const PlaneGraph c5 = polygon(5);
  const auto s5 = split_at_cycle(c5, ring(5));
  CHECK(edge_set(s5.interior) == edge_set(s5.exterior));
  CHECK(edge_set(s5.interior).size() == 5);

  std::vector<Edge> spokes;
  for (int i = 0; i < 6; ++i) spokes.push_back({i, 6});
  const PlaneGraph w6 = polygon(6, spokes, {{0, 0}});
  const auto sw = split_at_cycle(w6, ring(6));
  std::set<Edge> wheel;
  for (int i = 0; i < 6; ++i) wheel.insert(make_edge(i, (i + 1) % 6)), wheel.insert(make_edge(i, 6));
  CHECK(edge_set(sw.interior) == wheel);
  CHECK(vertex_set(sw.exterior) == std::set<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(edge_set(sw.exterior).size() == 6);
  CHECK(sw.interior.graph.outer_cycle(0).vertices.size() == 6);
}

TEST_CASE("split_at_cycle partitions random triangulations") {
  Rng rng(77);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const PlaneGraph g = random_triangulation(4 + t % 27, rng, t);
    const auto all = g.edges();
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.on_outer_face(v)) continue;
      // The link of an interior vertex bounds exactly its star.
      const auto link = g.rotation(v);
      const Walk k{{link.begin(), link.end()}, true};
      const auto s = split_at_cycle(g, k);
      std::set<Edge> star, cyc;
      for (std::size_t i = 0; i < link.size(); ++i) {
        cyc.insert(make_edge(link[i], link[(i + 1) % link.size()]));
        star.insert(make_edge(v, link[i]));
      }
      std::set<Edge> expect_in = star;
      expect_in.insert(cyc.begin(), cyc.end());
      CHECK(edge_set(s.interior) == expect_in);
      std::set<Edge> uni = edge_set(s.interior), inter;
      const auto ext = edge_set(s.exterior);
      uni.insert(ext.begin(), ext.end());
      CHECK(uni == std::set<Edge>(all.begin(), all.end()));
      for (const Edge& e : ext)
        if (edge_set(s.interior).contains(e)) inter.insert(e);
      CHECK(inter == cyc);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("q_components examples") {
  const PlaneGraph c6 = polygon(6, {{0, 3}});
  const auto [a, b] = q_components(c6, ring(6), Walk{{0, 3}, false});
  CHECK(vertex_set(a).size() == 4);
  CHECK(vertex_set(b).size() == 4);
  CHECK(edge_set(a).size() == 4);
  CHECK(edge_set(b).size() == 4);
  std::set<Vertex> both;
  for (Vertex v : vertex_set(a))
    if (vertex_set(b).contains(v)) both.insert(v);
  CHECK(both == std::set<Vertex>{0, 3});

  const PlaneGraph c4x = polygon(4, {{0, 4}, {2, 4}}, {{0, 0}});
  const auto [c, d] = q_components(c4x, ring(4), Walk{{0, 4, 2}, false});
  CHECK(edge_set(c).size() == 4);
  CHECK(edge_set(d).size() == 4);

  // C8 with the 3-chord 0 8 9 3: arcs of 3 and 5 edges plus the chord.
  const PlaneGraph c8 = polygon(8, {{0, 8}, {8, 9}, {3, 9}}, {{1.5, 0.3}, {-1.0, 1.2}});
  const auto [e, f] = q_components(c8, ring(8), Walk{{0, 8, 9, 3}, false});
  std::multiset<std::size_t> sizes{edge_set(e).size(), edge_set(f).size()};
  CHECK(sizes == std::multiset<std::size_t>{3 + 3, 5 + 3});

  CHECK_THROWS_AS(q_components(c6, ring(6), Walk{{0, 1}, false}), StructuralError);
}

TEST_CASE("q_components cover the graph and meet in the chord") {
  Rng rng(3);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    const PlaneGraph g = random_triangulation(5 + t % 15, rng, t);
    const Walk outer = g.outer_cycle(0);
    for (int order = 1; order <= 2; ++order) {
      for (const Walk& q : k_chords(g, outer, order)) {
        const auto [a, b] = q_components(g, outer, q);
        std::set<Edge> uni = edge_set(a), inter;
        for (const Edge& e : edge_set(b)) {
          if (uni.contains(e)) inter.insert(e);
          uni.insert(e);
        }
        const auto all = g.edges();
        CHECK(uni == std::set<Edge>(all.begin(), all.end()));
        std::set<Edge> qe;
        for (std::size_t i = 0; i + 1 < q.vertices.size(); ++i) qe.insert(make_edge(q.vertices[i], q.vertices[i + 1]));
        CHECK(inter == qe);
        ++checked;
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("subgraph_distance") {
  const PlaneGraph c6 = polygon(6);
  auto vref = [](std::vector<Vertex> vs) { return SubgraphRef{vs, {}}; };
  CHECK(subgraph_distance(c6, vref({0, 1}), vref({1, 4})) == 0);
  CHECK(subgraph_distance(c6, vref({0}), vref({1})) == 1);
  CHECK(subgraph_distance(c6, vref({0}), vref({3})) == 3);
  const PlaneGraph two = PlaneGraph::from_positions({{0, 0}, {1, 0}, {5, 0}, {6, 0}}, {{0, 1}, {2, 3}});
  CHECK_FALSE(subgraph_distance(two, vref({0}), vref({3})).has_value());

  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const PlaneGraph g = random_triangulation(4 + t % 20, rng, t);
    const auto d = ref::distances(g.adjacency());
    const int n = g.num_vertices();
    const SubgraphRef h1 = vref(rng.sample(0, n - 1, 1 + static_cast<int>(rng.below(3))));
    const SubgraphRef h2 = vref(rng.sample(0, n - 1, 1 + static_cast<int>(rng.below(3))));
    const int d12 = *subgraph_distance(g, h1, h2);
    CHECK(d12 == ref::set_distance(d, h1.vertices, h2.vertices));
    CHECK(d12 == *subgraph_distance(g, h2, h1));
    for (Vertex v = 0; v < n; ++v)
      CHECK(d12 <= *subgraph_distance(g, h1, vref({v})) + *subgraph_distance(g, vref({v}), h2));
  }
}

TEST_CASE("blocks_and_cuts") {
  const PlaneGraph bow = PlaneGraph::from_positions({{0, 0}, {-1, 1}, {-1, -1}, {1, 1}, {1, -1}},
                                                    {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  const BlockTree bt = blocks_and_cuts(bow);
  CHECK(bt.cut_vertices == std::vector<Vertex>{0});
  CHECK(bt.blocks.size() == 2);

  const BlockTree c5 = blocks_and_cuts(polygon(5));
  CHECK(c5.cut_vertices.empty());
  CHECK(c5.blocks.size() == 1);

  const PlaneGraph p4 = PlaneGraph::from_positions({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {{0, 1}, {1, 2}, {2, 3}});
  const BlockTree bp = blocks_and_cuts(p4);
  CHECK(bp.cut_vertices == std::vector<Vertex>{1, 2});
  CHECK(bp.blocks.size() == 3);
}

TEST_CASE("outer face normalization makes equal embeddings compare equal") {
  const PlaneGraph a = polygon(5, {{0, 2}});
  const PlaneGraph b(a.adjacency(), {Dart{2, 1}});
  const PlaneGraph c(a.adjacency(), {a.outer_darts()[0]});
  CHECK(c == a);
  CHECK(b.outer_face() == b.face_of({2, 1}));
}
