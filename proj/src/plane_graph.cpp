#include "fivelist/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

namespace fivelist {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string dart_str(Dart d) { return std::to_string(d.from) + "->" + std::to_string(d.to); }

}  // namespace

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(darts.size());
  for (const Dart& d : darts) out.push_back(d.from);
  return out;
}

int length(const Walk& w) {
  const int n = static_cast<int>(w.vertices.size());
  if (w.closed) return n;
  return n == 0 ? 0 : n - 1;
}

PlaneGraph::PlaneGraph(Adjacency rotation, std::vector<Dart> outer) : rot_(std::move(rotation)) {
  const int n = num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    auto& r = rot_[v];
    for (Vertex w : r) {
      if (w < 0 || w >= n) {
        throw StructuralError("rotation of " + std::to_string(v) + " names unknown vertex " +
                              std::to_string(w));
      }
      if (w == v) throw StructuralError("self-loop at vertex " + std::to_string(v));
    }
    std::vector<Vertex> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw StructuralError("parallel edges at vertex " + std::to_string(v));
    }
    if (!r.empty()) std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
  }

  offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + static_cast<int>(rot_[v].size());
  const int darts = offset_[n];
  if (darts % 2 != 0) throw StructuralError("rotation system is not symmetric");

  twin_.assign(darts, -1);
  for (Vertex u = 0; u < n; ++u) {
    for (int i = 0; i < static_cast<int>(rot_[u].size()); ++i) {
      const Vertex v = rot_[u][i];
      const auto& rv = rot_[v];
      auto it = std::find(rv.begin(), rv.end(), u);
      if (it == rv.end()) {
        throw StructuralError("rotation is not symmetric: " + std::to_string(v) +
                              " is listed at " + std::to_string(u) + " but not vice versa");
      }
      twin_[offset_[u] + i] = offset_[v] + static_cast<int>(it - rv.begin());
    }
  }

  // Darts in lexicographic order; the first unvisited one is the least dart
  // of its face, so face ids come out sorted by least dart.
  std::vector<int> order(darts);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Vertex> dart_from(darts);
  for (Vertex u = 0; u < n; ++u)
    for (int i = offset_[u]; i < offset_[u + 1]; ++i) dart_from[i] = u;
  auto dart_to = [&](int d) { return rot_[dart_from[d]][d - offset_[dart_from[d]]]; };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair{dart_from[a], dart_to(a)} < std::pair{dart_from[b], dart_to(b)};
  });

  dart_face_.assign(darts, -1);
  for (int start : order) {
    if (dart_face_[start] != -1) continue;
    Face face;
    const int id = static_cast<int>(faces_.size());
    int d = start;
    do {
      dart_face_[d] = id;
      face.darts.push_back({dart_from[d], dart_to(d)});
      const int t = twin_[d];
      const Vertex v = dart_from[t];
      const int deg = offset_[v + 1] - offset_[v];
      const int j = t - offset_[v];
      d = offset_[v] + (j - 1 + deg) % deg;
    } while (d != start);
    faces_.push_back(std::move(face));
  }

  component_.assign(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (component_[s] != -1) continue;
    std::deque<Vertex> queue{s};
    component_[s] = num_components_;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : rot_[u]) {
        if (component_[w] == -1) {
          component_[w] = num_components_;
          queue.push_back(w);
        }
      }
    }
    ++num_components_;
  }

  std::vector<int> comp_vertices(num_components_, 0), comp_darts(num_components_, 0),
      comp_faces(num_components_, 0);
  for (Vertex v = 0; v < n; ++v) {
    ++comp_vertices[component_[v]];
    comp_darts[component_[v]] += degree(v);
  }
  for (const Face& f : faces_) ++comp_faces[component_[f.darts.front().from]];
  for (int c = 0; c < num_components_; ++c) {
    if (comp_darts[c] == 0) continue;
    if (comp_vertices[c] - comp_darts[c] / 2 + comp_faces[c] != 2) {
      throw StructuralError("rotation system is not planar (Euler check failed in component " +
                            std::to_string(c) + ")");
    }
  }

  std::vector<Dart> by_component(num_components_, Dart{});
  for (const Dart& d : outer) {
    const int f = face_of(d);
    const int c = component_[d.from];
    if (by_component[c].from != -1 && by_component[c] != faces_[f].darts.front()) {
      throw StructuralError("two outer darts given for one component (" + dart_str(d) + ")");
    }
    by_component[c] = faces_[f].darts.front();
  }
  on_outer_.assign(n, false);
  for (int c = 0; c < num_components_; ++c) {
    if (comp_darts[c] == 0) continue;
    if (by_component[c].from == -1) {
      throw StructuralError("no outer face designated for the component of vertex " +
                            std::to_string(std::find(component_.begin(), component_.end(), c) -
                                           component_.begin()));
    }
    outer_darts_.push_back(by_component[c]);
    const int f = face_of(by_component[c]);
    outer_faces_.push_back(f);
    for (const Dart& d : faces_[f].darts) on_outer_[d.from] = true;
  }
  for (Vertex v = 0; v < n; ++v)
    if (rot_[v].empty()) on_outer_[v] = true;
}

PlaneGraph PlaneGraph::from_positions(const std::vector<std::pair<double, double>>& points,
                                      const std::vector<Edge>& edges) {
  const int n = static_cast<int>(points.size());
  Adjacency adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto angle = [&](Vertex w) {
      return std::atan2(points[w].second - points[v].second, points[w].first - points[v].first);
    };
    std::sort(adj[v].begin(), adj[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  // Trace faces once with throwaway outer darts to find the clockwise face
  // of every component.
  std::vector<Dart> provisional;
  {
    std::vector<bool> seen(n, false);
    for (Vertex v = 0; v < n; ++v) {
      if (adj[v].empty() || seen[v]) continue;
      provisional.push_back({v, adj[v].front()});
      std::deque<Vertex> q{v};
      seen[v] = true;
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop_front();
        for (Vertex w : adj[u])
          if (!seen[w]) seen[w] = true, q.push_back(w);
      }
    }
  }
  PlaneGraph tmp(adj, provisional);
  std::map<int, std::pair<double, Dart>> best;
  for (const Face& f : tmp.faces()) {
    double area = 0;
    for (const Dart& d : f.darts) {
      area += points[d.from].first * points[d.to].second - points[d.to].first * points[d.from].second;
    }
    const int c = tmp.component(f.darts.front().from);
    auto it = best.find(c);
    if (it == best.end() || area < it->second.first) best[c] = {area, f.darts.front()};
  }
  std::vector<Dart> outer;
  for (auto& [c, entry] : best) outer.push_back(entry.second);
  return PlaneGraph(std::move(adj), std::move(outer));
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
  const auto& r = rot_[u];
  return std::find(r.begin(), r.end(), v) != r.end();
}

std::vector<Edge> PlaneGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : rot_[u])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

int PlaneGraph::dart_index(Dart d) const {
  if (d.from < 0 || d.from >= num_vertices()) return -1;
  const auto& r = rot_[d.from];
  auto it = std::find(r.begin(), r.end(), d.to);
  if (it == r.end()) return -1;
  return offset_[d.from] + static_cast<int>(it - r.begin());
}

int PlaneGraph::face_of(Dart d) const {
  const int i = dart_index(d);
  if (i < 0) throw StructuralError("no such dart " + dart_str(d));
  return dart_face_[i];
}

Dart PlaneGraph::next_in_face(Dart d) const {
  const int i = dart_index(d);
  if (i < 0) throw StructuralError("no such dart " + dart_str(d));
  const int t = twin_[i];
  const Vertex v = d.to;
  const int deg = degree(v);
  const int j = t - offset_[v];
  return {v, rot_[v][(j - 1 + deg) % deg]};
}

bool PlaneGraph::is_outer_face(int f) const {
  return std::find(outer_faces_.begin(), outer_faces_.end(), f) != outer_faces_.end();
}

std::vector<Vertex> PlaneGraph::outer_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < num_vertices(); ++v)
    if (on_outer_[v]) out.push_back(v);
  return out;
}

Walk PlaneGraph::outer_cycle(int component) const {
  if (component < 0 || component >= static_cast<int>(outer_faces_.size())) {
    throw StructuralError("component has no outer face");
  }
  Walk w{faces_[outer_faces_[component]].vertices(), true};
  std::vector<Vertex> s = w.vertices;
  std::sort(s.begin(), s.end());
  if (s.size() < 3 || std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw StructuralError("outer face is not bounded by a cycle");
  }
  return w;
}

SubEmbedding PlaneGraph::subgraph(const std::vector<bool>& keep_vertex,
                                  const std::set<Edge>& drop) const {
  const int n = num_vertices();
  SubEmbedding out;
  out.from_parent.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (keep_vertex[v]) {
      out.from_parent[v] = static_cast<int>(out.to_parent.size());
      out.to_parent.push_back(v);
    }
  }
  auto kept_edge = [&](Vertex u, Vertex v) {
    return keep_vertex[u] && keep_vertex[v] && !drop.contains(make_edge(u, v));
  };

  Adjacency rot(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const Vertex u = out.to_parent[i];
    for (Vertex w : rot_[u])
      if (kept_edge(u, w)) rot[i].push_back(out.from_parent[w]);
  }

  // Regions of the subgraph are unions of faces of this graph glued along
  // removed edges; the class holding our outer faces is the new outer region.
  UnionFind uf(static_cast<int>(faces_.size()));
  for (Vertex u = 0; u < n; ++u)
    for (int i = 0; i < degree(u); ++i)
      if (!kept_edge(u, rot_[u][i])) uf.unite(dart_face_[offset_[u] + i], dart_face_[twin_[offset_[u] + i]]);
  int outer_class = -1;
  for (int f : outer_faces_) {
    if (outer_class == -1) outer_class = uf.find(f);
    uf.unite(outer_class, f);
    outer_class = uf.find(outer_class);
  }

  // Group kept darts by component of the subgraph.
  const int m = static_cast<int>(rot.size());
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[s] != -1) continue;
    std::deque<int> q{s};
    comp[s] = ncomp;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : rot[u])
        if (comp[w] == -1) comp[w] = ncomp, q.push_back(w);
    }
    ++ncomp;
  }
  std::vector<Dart> chosen(ncomp, Dart{});
  std::vector<Dart> fallback(ncomp, Dart{});
  for (int i = 0; i < m; ++i) {
    const Vertex u = out.to_parent[i];
    for (int k = 0; k < degree(u); ++k) {
      const Vertex w = rot_[u][k];
      if (!kept_edge(u, w)) continue;
      const Dart local{i, out.from_parent[w]};
      const int c = comp[i];
      if (fallback[c].from == -1 || local < fallback[c]) fallback[c] = local;
      if (outer_class != -1 && uf.find(dart_face_[offset_[u] + k]) == outer_class) {
        if (chosen[c].from == -1 || local < chosen[c]) chosen[c] = local;
      }
    }
  }
  // A component that does not touch the outer region sits inside a bounded
  // face of another one; any of its faces may serve as its outer face.
  std::vector<Dart> outer;
  for (int c = 0; c < ncomp; ++c) {
    if (chosen[c].from != -1) {
      outer.push_back(chosen[c]);
    } else if (fallback[c].from != -1) {
      outer.push_back(fallback[c]);
    }
  }
  out.graph = PlaneGraph(std::move(rot), std::move(outer));
  return out;
}

SubEmbedding PlaneGraph::subgraph(const std::vector<Vertex>& vertices) const {
  std::vector<bool> keep(num_vertices(), false);
  for (Vertex v : vertices) keep[v] = true;
  return subgraph(keep);
}

PlaneGraph PlaneGraph::with_outer(std::vector<Dart> outer) const {
  return PlaneGraph(rot_, std::move(outer));
}

std::vector<Face> trace_faces(const PlaneGraph& g) { return g.faces(); }

bool euler_consistent(const PlaneGraph& g) {
  int with_edges = 0;
  std::vector<bool> seen(g.num_components(), false);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0 && !seen[g.component(v)]) {
      seen[g.component(v)] = true;
      ++with_edges;
    }
  }
  const int faces = with_edges == 0 ? 1 : static_cast<int>(g.faces().size()) - with_edges + 1;
  return g.num_vertices() - g.num_edges() + faces == 1 + g.num_components();
}

void require_cycle(const PlaneGraph& g, const Walk& k) {
  if (!k.closed) throw StructuralError("walk is not closed");
  const auto& vs = k.vertices;
  if (vs.size() < 3) throw StructuralError("cycle needs at least 3 vertices");
  std::vector<Vertex> s = vs;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw StructuralError("cycle repeats a vertex");
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex a = vs[i];
    const Vertex b = vs[(i + 1) % vs.size()];
    if (!g.adjacent(a, b)) {
      throw StructuralError("cycle edge " + std::to_string(a) + "-" + std::to_string(b) +
                            " is not in the graph");
    }
  }
}

std::vector<Walk> k_chords(const PlaneGraph& g, const Walk& k, int order) {
  require_cycle(g, k);
  if (order < 1) throw StructuralError("k-chord order must be at least 1");
  const int n = g.num_vertices();
  std::vector<bool> on_k(n, false);
  for (Vertex v : k.vertices) on_k[v] = true;
  std::set<Edge> k_edges;
  for (std::size_t i = 0; i < k.vertices.size(); ++i) {
    k_edges.insert(make_edge(k.vertices[i], k.vertices[(i + 1) % k.vertices.size()]));
  }

  std::vector<Walk> out;
  if (order == 1) {
    for (const Edge& e : g.edges()) {
      if (on_k[e.first] && on_k[e.second] && !k_edges.contains(e)) {
        out.push_back(Walk{{e.first, e.second}, false});
      }
    }
    return out;
  }

  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, Vertex u) -> void {
    const int len = static_cast<int>(path.size()) - 1;
    for (Vertex w : g.rotation(u)) {
      if (len + 1 == order) {
        if (on_k[w] && w > path.front()) {
          path.push_back(w);
          out.push_back(Walk{path, false});
          path.pop_back();
        }
      } else if (!on_k[w] && !used[w]) {
        used[w] = true;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        used[w] = false;
      }
    }
  };
  std::vector<Vertex> starts = k.vertices;
  std::sort(starts.begin(), starts.end());
  for (Vertex s : starts) {
    path = {s};
    extend(extend, s);
  }
  std::sort(out.begin(), out.end(),
            [](const Walk& a, const Walk& b) { return a.vertices < b.vertices; });
  return out;
}

CycleSides cycle_sides(const PlaneGraph& g, const Walk& k) {
  require_cycle(g, k);
  const int n = g.num_vertices();
  const int m = static_cast<int>(k.vertices.size());
  std::set<Edge> k_edges;
  for (int i = 0; i < m; ++i) k_edges.insert(make_edge(k.vertices[i], k.vertices[(i + 1) % m]));
  const int comp = g.component(k.vertices.front());

  UnionFind uf(static_cast<int>(g.faces().size()));
  for (Vertex u = 0; u < n; ++u) {
    if (g.component(u) != comp) continue;
    for (Vertex w : g.rotation(u)) {
      if (u < w && !k_edges.contains(make_edge(u, w))) uf.unite(g.face_of({u, w}), g.face_of({w, u}));
    }
  }
  const int left = uf.find(g.face_of({k.vertices[0], k.vertices[1]}));
  const int right = uf.find(g.face_of({k.vertices[1], k.vertices[0]}));
  for (int i = 0; i < m; ++i) {
    const Vertex a = k.vertices[i];
    const Vertex b = k.vertices[(i + 1) % m];
    if (uf.find(g.face_of({a, b})) != left || uf.find(g.face_of({b, a})) != right) {
      throw StructuralError("cycle crosses itself in the embedding");
    }
  }
  if (left == right) throw StructuralError("cycle does not separate the embedding");

  int outer_class = -1;
  for (int f : g.outer_faces()) {
    const Dart d = g.faces()[f].darts.front();
    if (g.component(d.from) == comp) outer_class = uf.find(f);
  }
  const int inside = outer_class == left ? right : left;

  CycleSides sides;
  sides.inside_vertex.assign(n, false);
  sides.outside_vertex.assign(n, false);
  for (Vertex v : k.vertices) sides.inside_vertex[v] = sides.outside_vertex[v] = true;
  for (Vertex u = 0; u < n; ++u) {
    if (g.component(u) != comp) {
      sides.outside_vertex[u] = true;
      for (Vertex w : g.rotation(u))
        if (u < w) sides.outside_edges.insert({u, w});
      continue;
    }
    for (Vertex w : g.rotation(u)) {
      const bool in = uf.find(g.face_of({u, w})) == inside;
      (in ? sides.inside_vertex : sides.outside_vertex)[u] = true;
      if (u < w && !k_edges.contains({u, w})) (in ? sides.inside_edges : sides.outside_edges).insert({u, w});
    }
  }
  std::vector<bool> on_k(n, false);
  for (Vertex v : k.vertices) on_k[v] = true;
  for (Vertex v = 0; v < n; ++v) {
    if (!on_k[v] && sides.inside_vertex[v]) sides.has_interior_vertex = true;
  }
  return sides;
}

CycleSplit split_at_cycle(const PlaneGraph& g, const Walk& k) {
  const CycleSides sides = cycle_sides(g, k);
  return {g.subgraph(sides.inside_vertex, sides.outside_edges),
          g.subgraph(sides.outside_vertex, sides.inside_edges)};
}

std::pair<SubEmbedding, SubEmbedding> q_components(const PlaneGraph& g, const Walk& outer,
                                                   const Walk& q) {
  require_cycle(g, outer);
  const auto& ov = outer.vertices;
  const auto& qv = q.vertices;
  if (q.closed || qv.size() < 2) throw StructuralError("k-chord must be an open path of length >= 1");
  auto pos = [&](Vertex v) {
    auto it = std::find(ov.begin(), ov.end(), v);
    return it == ov.end() ? -1 : static_cast<int>(it - ov.begin());
  };
  const int i = pos(qv.front());
  const int j = pos(qv.back());
  if (i < 0 || j < 0 || i == j) throw StructuralError("k-chord ends must be distinct cycle vertices");
  for (std::size_t t = 1; t + 1 < qv.size(); ++t) {
    if (pos(qv[t]) >= 0) throw StructuralError("k-chord interior touches the cycle");
  }
  for (std::size_t t = 0; t + 1 < qv.size(); ++t) {
    if (!g.adjacent(qv[t], qv[t + 1])) throw StructuralError("k-chord is not a path of the graph");
  }
  const int m = static_cast<int>(ov.size());
  if (qv.size() == 2 && ((i + 1) % m == j || (j + 1) % m == i)) {
    throw StructuralError("edge of the cycle is not a chord");
  }
  Walk c1{qv, true};
  for (int t = (j + 1) % m; t != i; t = (t + 1) % m) c1.vertices.push_back(ov[t]);
  Walk c2{qv, true};
  for (int t = (j - 1 + m) % m; t != i; t = (t - 1 + m) % m) c2.vertices.push_back(ov[t]);
  return {split_at_cycle(g, c1).interior, split_at_cycle(g, c2).interior};
}

std::vector<int> bfs_distances(const Adjacency& adj, std::span<const Vertex> sources) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<Vertex> q;
  for (Vertex s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop_front();
    for (Vertex w : adj[u]) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> subgraph_distance(const Adjacency& adj, const SubgraphRef& h1,
                                     const SubgraphRef& h2) {
  if (h1.vertices.empty() || h2.vertices.empty()) {
    throw StructuralError("distance between empty subgraphs is undefined");
  }
  const auto dist = bfs_distances(adj, h1.vertices);
  std::optional<int> best;
  for (Vertex v : h2.vertices) {
    if (dist[v] >= 0 && (!best || dist[v] < *best)) best = dist[v];
  }
  return best;
}

std::optional<int> subgraph_distance(const PlaneGraph& g, const SubgraphRef& h1,
                                     const SubgraphRef& h2) {
  return subgraph_distance(g.adjacency(), h1, h2);
}

BlockTree blocks_and_cuts(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  BlockTree tree;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<Edge> stack;
  int timer = 0;

  auto dfs = [&](auto&& self, Vertex u, Vertex parent) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex w : adj[u]) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        ++children;
        stack.push_back(make_edge(u, w));
        self(self, w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent != -1) is_cut[u] = true;
          std::vector<Edge> block;
          std::set<Vertex> verts;
          const Edge stop = make_edge(u, w);
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == stop) break;
          }
          std::sort(block.begin(), block.end());
          tree.blocks.emplace_back(verts.begin(), verts.end());
          tree.block_edges.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(make_edge(u, w));
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent == -1 && children > 1) is_cut[u] = true;
  };

  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] != -1) continue;
    if (adj[v].empty()) {
      disc[v] = timer++;
      tree.blocks.push_back({v});
      tree.block_edges.emplace_back();
      continue;
    }
    dfs(dfs, v, -1);
  }
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) tree.cut_vertices.push_back(v);
  return tree;
}

BlockTree blocks_and_cuts(const PlaneGraph& g) { return blocks_and_cuts(g.adjacency()); }

std::vector<std::vector<Vertex>> connected_components(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> members;
    std::deque<Vertex> q{s};
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop_front();
      members.push_back(u);
      for (Vertex w : adj[u])
        if (comp[w] == -1) comp[w] = comp[s], q.push_back(w);
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace fivelist
