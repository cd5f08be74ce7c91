#include "fivelist/validity.hpp"

#include <algorithm>
#include <set>

namespace fivelist {

namespace {

std::string vstr(Vertex v) { return std::to_string(v); }
std::string estr(Edge e) { return vstr(e.first) + "-" + vstr(e.second); }

bool contains(const std::vector<Vertex>& vs, Vertex v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

std::vector<Vertex> common_neighbors(const Adjacency& adj, const std::vector<Vertex>& of) {
  std::vector<Vertex> out;
  if (of.empty()) return out;
  for (Vertex x : adj[of.front()]) {
    bool all = true;
    for (std::size_t i = 1; i < of.size() && all; ++i) {
      all = std::find(adj[of[i]].begin(), adj[of[i]].end(), x) != adj[of[i]].end();
    }
    if (all && !contains(of, x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ColorList union_of(const ListAssignment& lists, const std::vector<Vertex>& vs) {
  ColorList out;
  for (Vertex v : vs) out = list_union(out, lists[v]);
  return out;
}

bool both_singletons_equal(const ListAssignment& lists, Vertex u, Vertex v) {
  return lists.list_size(u) == 1 && lists.list_size(v) == 1 && lists[u] == lists[v];
}

SubgraphRef vertex_ref(Vertex v) { return SubgraphRef{{v}, {}}; }

SubgraphRef edge_ref(Edge e) { return SubgraphRef{{e.first, e.second}, {e}}; }

}  // namespace

void require_outer_path(const Drawing& d, const std::vector<Vertex>& path, int max_length) {
  if (static_cast<int>(path.size()) > max_length + 1) {
    throw StructuralError("precolored path is longer than " + std::to_string(max_length));
  }
  std::set<Vertex> seen;
  for (Vertex v : path) {
    if (v < 0 || v >= d.num_original()) throw StructuralError("path vertex " + vstr(v) + " does not exist");
    if (!seen.insert(v).second) throw StructuralError("path repeats vertex " + vstr(v));
    if (!d.on_outer_face(v)) throw StructuralError("path vertex " + vstr(v) + " is not on the outer face");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Vertex u = path[i];
    const Vertex v = path[i + 1];
    if (!d.adjacent(u, v)) throw StructuralError("path edge " + vstr(u) + "-" + vstr(v) + " is not an edge");
    if (d.is_crossed(make_edge(u, v))) {
      throw StructuralError("path edge " + vstr(u) + "-" + vstr(v) +
                            " is crossed; precolored path edges must be uncrossed");
    }
    if (!d.edge_on_outer_face(u, v)) {
      throw StructuralError("path edge " + vstr(u) + "-" + vstr(v) + " is not on the outer face");
    }
  }
}

Instance make_planar_instance(PlaneGraph g, ListAssignment lists, std::vector<Vertex> path,
                              std::vector<Vertex> n_set, std::vector<Edge> m_set) {
  Instance inst;
  inst.drawing = Drawing(std::move(g));
  inst.lists = std::move(lists);
  inst.path = std::move(path);
  std::sort(n_set.begin(), n_set.end());
  inst.n_set = std::move(n_set);
  for (auto& e : m_set) e = make_edge(e.first, e.second);
  std::sort(m_set.begin(), m_set.end());
  inst.m_set = std::move(m_set);
  return inst;
}

bool ValidityReport::passed(std::string_view condition) const {
  return std::none_of(violations.begin(), violations.end(),
                      [&](const Violation& v) { return v.condition == condition; });
}

std::vector<const Violation*> ValidityReport::failures(std::string_view condition) const {
  std::vector<const Violation*> out;
  for (const auto& v : violations)
    if (v.condition == condition) out.push_back(&v);
  return out;
}

void ValidityReport::merge(const ValidityReport& other) {
  for (const auto& c : other.conditions)
    if (std::find(conditions.begin(), conditions.end(), c) == conditions.end()) conditions.push_back(c);
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

const char* to_string(SpecialKind k) {
  switch (k) {
    case SpecialKind::CrossingPair: return "crossing";
    case SpecialKind::MiddleEdge: return "middle-edge";
    case SpecialKind::NVertex: return "n-vertex";
    case SpecialKind::MEdge: return "m-edge";
  }
  return "?";
}

int special_rank(SpecialKind k) {
  switch (k) {
    case SpecialKind::CrossingPair: return 4;
    case SpecialKind::MiddleEdge: return 3;
    case SpecialKind::NVertex: return 2;
    case SpecialKind::MEdge: return 0;
  }
  return 0;
}

int required_distance(SpecialKind a, SpecialKind b) { return special_rank(a) + special_rank(b) + 7; }

void require_outer_path(const PlaneGraph& g, const std::vector<Vertex>& path, int max_length) {
  if (static_cast<int>(path.size()) > max_length + 1) {
    throw StructuralError("precolored path is longer than " + std::to_string(max_length));
  }
  std::set<Vertex> seen;
  for (Vertex v : path) {
    if (v < 0 || v >= g.num_vertices()) throw StructuralError("path vertex " + vstr(v) + " does not exist");
    if (!seen.insert(v).second) throw StructuralError("path repeats vertex " + vstr(v));
    if (!g.on_outer_face(v)) throw StructuralError("path vertex " + vstr(v) + " is not on the outer face");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Vertex u = path[i];
    const Vertex v = path[i + 1];
    if (!g.adjacent(u, v)) throw StructuralError("path edge " + vstr(u) + "-" + vstr(v) + " is not an edge");
    if (!g.is_outer_face(g.face_of({u, v})) && !g.is_outer_face(g.face_of({v, u}))) {
      throw StructuralError("path edge " + vstr(u) + "-" + vstr(v) + " is not on the outer face");
    }
  }
}

ValidityReport check_basic(const PlaneGraph& g, const std::vector<Vertex>& path,
                           const ListAssignment& lists) {
  require_outer_path(g, path, 2);
  if (lists.size() != g.num_vertices()) throw StructuralError("list assignment does not match the graph");
  ValidityReport r;
  r.conditions = {"i", "ii", "iii", "iv", "v", "vi"};
  const int n = g.num_vertices();
  auto in_p = [&](Vertex v) { return contains(path, v); };

  for (Vertex v = 0; v < n; ++v) {
    const int s = lists.list_size(v);
    if (!g.on_outer_face(v) && s < 5) {
      r.violations.push_back({"i", {v}, {}, {}, -1, -1, "interior vertex " + vstr(v) + " has a list of size " + std::to_string(s)});
    }
    if (g.on_outer_face(v) && !in_p(v) && s < 3) {
      r.violations.push_back({"ii", {v}, {}, {}, -1, -1, "outer vertex " + vstr(v) + " has a list of size " + std::to_string(s)});
    }
    if (in_p(v) && s != 1) {
      r.violations.push_back({"iii", {v}, {}, {}, -1, -1, "path vertex " + vstr(v) + " has a list of size " + std::to_string(s)});
    }
  }
  for (const Edge& e : g.edges()) {
    if (lists.list_size(e.first) == 3 && lists.list_size(e.second) == 3) {
      r.violations.push_back({"iv", {e.first, e.second}, {e}, {}, -1, -1, "adjacent 3-lists on " + estr(e)});
    }
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (g.adjacent(path[i], path[j]) && both_singletons_equal(lists, path[i], path[j])) {
        const Edge e = make_edge(path[i], path[j]);
        r.violations.push_back({"v", {e.first, e.second}, {e}, {}, -1, -1, "path edge " + estr(e) + " is monochromatic"});
      }
    }
  }
  if (path.size() == 3) {
    const ColorList u = union_of(lists, path);
    for (Vertex x : common_neighbors(g.adjacency(), path)) {
      if (lists[x] == u) {
        r.violations.push_back({"vi", {x, path[0], path[1], path[2]}, {}, {}, -1, -1,
                                "common neighbor " + vstr(x) + " of the path has exactly the path colors"});
      }
    }
  }
  return r;
}

ValidityReport check_thomassen(const PlaneGraph& g, const ListAssignment& lists, Vertex x, Vertex y) {
  if (lists.size() != g.num_vertices()) throw StructuralError("list assignment does not match the graph");
  require_outer_path(g, {x, y}, 1);
  ValidityReport r;
  r.conditions = {"precolored", "outer", "interior"};
  if (lists.list_size(x) != 1 || lists.list_size(y) != 1 || lists[x] == lists[y]) {
    r.violations.push_back({"precolored", {x, y}, {make_edge(x, y)}, {}, -1, -1,
                            "precolored edge needs two distinct singleton lists"});
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (v == x || v == y) continue;
    const int s = lists.list_size(v);
    if (g.on_outer_face(v) && s < 3) {
      r.violations.push_back({"outer", {v}, {}, {}, -1, -1, "outer vertex " + vstr(v) + " has a list of size " + std::to_string(s)});
    }
    if (!g.on_outer_face(v) && s < 5) {
      r.violations.push_back({"interior", {v}, {}, {}, -1, -1, "interior vertex " + vstr(v) + " has a list of size " + std::to_string(s)});
    }
  }
  return r;
}

std::vector<SpecialSubgraph> special_subgraphs(const Instance& inst) {
  std::vector<SpecialSubgraph> out;
  const auto& d = inst.drawing;
  for (int i = 0; i < static_cast<int>(d.crossings().size()); ++i) {
    out.push_back({SpecialKind::CrossingPair, d.crossing_subgraph(i), special_rank(SpecialKind::CrossingPair)});
  }
  if (inst.path.size() == 4) {
    out.push_back({SpecialKind::MiddleEdge, edge_ref(make_edge(inst.path[1], inst.path[2])),
                   special_rank(SpecialKind::MiddleEdge)});
  }
  for (Vertex v : inst.n_set) out.push_back({SpecialKind::NVertex, vertex_ref(v), special_rank(SpecialKind::NVertex)});
  for (const Edge& e : inst.m_set) out.push_back({SpecialKind::MEdge, edge_ref(e), special_rank(SpecialKind::MEdge)});
  return out;
}

ValidityReport check_distant(const Instance& inst) {
  ValidityReport r;
  r.conditions = {"distance"};
  const auto specials = special_subgraphs(inst);
  const auto& adj = inst.adjacency();
  for (std::size_t i = 0; i < specials.size(); ++i) {
    const auto dist = bfs_distances(adj, specials[i].ref.vertices);
    for (std::size_t j = i + 1; j < specials.size(); ++j) {
      int best = -1;
      for (Vertex v : specials[j].ref.vertices)
        if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
      const int need = specials[i].rank + specials[j].rank + 7;
      if (best >= 0 && best < need) {
        Violation v{"distance", {}, {}, {specials[i].ref, specials[j].ref}, best, need,
                    std::string(to_string(specials[i].kind)) + " and " + to_string(specials[j].kind) +
                        " at distance " + std::to_string(best) + " < " + std::to_string(need)};
        for (const auto& part : v.parts) {
          v.vertices.insert(v.vertices.end(), part.vertices.begin(), part.vertices.end());
          v.edges.insert(v.edges.end(), part.edges.begin(), part.edges.end());
        }
        r.violations.push_back(std::move(v));
      }
    }
  }
  return r;
}

ValidityReport check_valid(const Instance& inst, const ObstructionPredicate& obstructions) {
  const auto& d = inst.drawing;
  const int n = d.num_original();
  if (inst.lists.size() != n) throw StructuralError("list assignment does not match the graph");
  require_outer_path(d, inst.path, 3);
  for (Vertex v : inst.n_set)
    if (v < 0 || v >= n) throw StructuralError("N names unknown vertex " + vstr(v));
  for (const Edge& e : inst.m_set)
    if (!d.adjacent(e.first, e.second)) throw StructuralError("M names non-edge " + estr(e));

  ValidityReport r;
  r.conditions = {"S", "N", "M", "P", "T", "C"};
  const auto& lists = inst.lists;
  const auto& adj = inst.adjacency();
  auto in_p = [&](Vertex v) { return contains(inst.path, v); };
  auto in_n = [&](Vertex v) { return std::binary_search(inst.n_set.begin(), inst.n_set.end(), v); };

  for (Vertex v = 0; v < n; ++v) {
    const int s = lists.list_size(v);
    const bool outer = d.on_outer_face(v);
    if (in_p(v)) {
      if (s != 1) r.violations.push_back({"S", {v}, {}, {}, -1, -1, "path vertex " + vstr(v) + " needs a list of size 1"});
    } else if (outer) {
      if (s < 3) r.violations.push_back({"S", {v}, {}, {}, -1, -1, "outer vertex " + vstr(v) + " needs a list of size >= 3"});
    } else if (!in_n(v) && s < 5) {
      r.violations.push_back({"S", {v}, {}, {}, -1, -1, "interior vertex " + vstr(v) + " needs a list of size >= 5"});
    }
    if (in_n(v) && !outer && s < 4) {
      r.violations.push_back({"N", {v}, {}, {}, -1, -1, "N-vertex " + vstr(v) + " needs a list of size >= 4"});
    }
  }
  for (const Edge& e : d.original_edges()) {
    if (lists.list_size(e.first) == 3 && lists.list_size(e.second) == 3 &&
        !std::binary_search(inst.m_set.begin(), inst.m_set.end(), e)) {
      r.violations.push_back({"M", {e.first, e.second}, {e}, {}, -1, -1, "adjacent 3-lists on " + estr(e) + " outside M"});
    }
  }
  for (std::size_t i = 0; i < inst.path.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.path.size(); ++j) {
      const Vertex u = inst.path[i];
      const Vertex v = inst.path[j];
      if (d.adjacent(u, v) && both_singletons_equal(lists, u, v)) {
        const Edge e = make_edge(u, v);
        r.violations.push_back({"P", {e.first, e.second}, {e}, {}, -1, -1, "path edge " + estr(e) + " is monochromatic"});
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> pn;
    for (Vertex w : adj[v])
      if (in_p(w)) pn.push_back(w);
    std::sort(pn.begin(), pn.end());
    for (std::size_t a = 0; a < pn.size(); ++a)
      for (std::size_t b = a + 1; b < pn.size(); ++b)
        for (std::size_t c = b + 1; c < pn.size(); ++c) {
          if (lists[v] == union_of(lists, {pn[a], pn[b], pn[c]})) {
            r.violations.push_back({"T", {v, pn[a], pn[b], pn[c]}, {}, {}, -1, -1,
                                    "vertex " + vstr(v) + " has exactly the colors of three path neighbors"});
          }
        }
  }
  for (int i = 0; i < static_cast<int>(d.crossings().size()); ++i) {
    const auto ref = d.crossing_subgraph(i);
    for (Vertex t : ref.vertices) {
      if (lists.list_size(t) != 3) continue;
      bool bad = false;
      for (Vertex o : ref.vertices) {
        const int s = lists.list_size(o);
        if (o != t && s != 1 && s < 5) bad = true;
      }
      if (bad) {
        r.violations.push_back({"C", ref.vertices, ref.edges, {}, -1, -1,
                                "crossing " + std::to_string(i) + " mixes a 3-list with a 2-, 3- or 4-list"});
        break;
      }
    }
  }
  if (obstructions) {
    r.conditions.push_back("O");
    if (!obstructions(inst)) r.violations.push_back({"O", {}, {}, {}, -1, -1, "obstruction predicate rejected the instance"});
  }
  return r;
}

ValidityReport check_main0(const Drawing& drawing, const std::vector<Vertex>& n_set,
                           const ListAssignment& lists) {
  constexpr int kCrossingCrossing = 15;
  constexpr int kCrossingN = 13;
  constexpr int kNN = 11;
  const int n = drawing.num_original();
  if (lists.size() != n) throw StructuralError("list assignment does not match the graph");
  ValidityReport r;
  r.conditions = {"lists", "crossing-crossing", "crossing-N", "N-N"};
  std::vector<bool> in_n(n, false);
  for (Vertex v : n_set) {
    if (v < 0 || v >= n) throw StructuralError("N names unknown vertex " + vstr(v));
    in_n[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    const int s = lists.list_size(v);
    if (in_n[v] ? s != 4 : s < 5) {
      r.violations.push_back({"lists", {v}, {}, {}, -1, -1,
                              "vertex " + vstr(v) + " has a list of size " + std::to_string(s)});
    }
  }
  const auto& adj = drawing.original_adjacency();
  const int k = static_cast<int>(drawing.crossings().size());
  auto report = [&](const char* cond, SubgraphRef a, SubgraphRef b, int dist, int need) {
    Violation v{cond, {}, {}, {a, b}, dist, need, std::string(cond) + " distance " + std::to_string(dist) +
                                                     " < " + std::to_string(need)};
    for (const auto& part : v.parts) {
      v.vertices.insert(v.vertices.end(), part.vertices.begin(), part.vertices.end());
      v.edges.insert(v.edges.end(), part.edges.begin(), part.edges.end());
    }
    r.violations.push_back(std::move(v));
  };
  for (int i = 0; i < k; ++i) {
    const auto gi = drawing.crossing_subgraph(i);
    const auto dist = bfs_distances(adj, gi.vertices);
    for (int j = i + 1; j < k; ++j) {
      const auto gj = drawing.crossing_subgraph(j);
      int best = -1;
      for (Vertex v : gj.vertices)
        if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
      if (best >= 0 && best < kCrossingCrossing) report("crossing-crossing", gi, gj, best, kCrossingCrossing);
    }
    for (Vertex v : n_set) {
      if (dist[v] >= 0 && dist[v] < kCrossingN) report("crossing-N", gi, vertex_ref(v), dist[v], kCrossingN);
    }
  }
  std::vector<Vertex> ns = n_set;
  std::sort(ns.begin(), ns.end());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto dist = bfs_distances(adj, std::vector<Vertex>{ns[i]});
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
      if (dist[ns[j]] >= 0 && dist[ns[j]] < kNN) report("N-N", vertex_ref(ns[i]), vertex_ref(ns[j]), dist[ns[j]], kNN);
    }
  }
  return r;
}

ValidityReport check_mainalt(const Drawing& drawing, const std::vector<Vertex>& n_set,
                             const ListAssignment& lists) {
  ValidityReport r = check_main0(drawing, n_set, lists);
  r.conditions.push_back("planar");
  if (!drawing.crossings().empty()) {
    r.violations.push_back({"planar", {}, {}, {}, -1, -1,
                            "drawing has " + std::to_string(drawing.crossings().size()) + " crossings"});
  }
  return r;
}

ValidityReport check_few_crossings(const Drawing& drawing, const ListAssignment& lists,
                                   int max_crossings) {
  if (lists.size() != drawing.num_original()) throw StructuralError("list assignment does not match the graph");
  ValidityReport r;
  r.conditions = {"crossings", "lists"};
  const int k = static_cast<int>(drawing.crossings().size());
  if (k > max_crossings) {
    r.violations.push_back({"crossings", {}, {}, {}, k, max_crossings,
                            std::to_string(k) + " crossings, at most " + std::to_string(max_crossings) + " allowed"});
  }
  for (Vertex v = 0; v < drawing.num_original(); ++v) {
    if (lists.list_size(v) < 5) {
      r.violations.push_back({"lists", {v}, {}, {}, -1, -1, "vertex " + vstr(v) + " has a list of size " +
                                                                std::to_string(lists.list_size(v))});
    }
  }
  return r;
}

bool witness_reproduces(const PlaneGraph& g, const std::vector<Vertex>& path,
                        const ListAssignment& lists, const Violation& w) {
  auto in_p = [&](Vertex v) { return contains(path, v); };
  const auto& c = w.condition;
  if (c == "i") return !g.on_outer_face(w.vertices[0]) && lists.list_size(w.vertices[0]) < 5;
  if (c == "ii") return g.on_outer_face(w.vertices[0]) && !in_p(w.vertices[0]) && lists.list_size(w.vertices[0]) < 3;
  if (c == "iii") return in_p(w.vertices[0]) && lists.list_size(w.vertices[0]) != 1;
  if (c == "iv") {
    const auto [u, v] = w.edges.at(0);
    return g.adjacent(u, v) && lists.list_size(u) == 3 && lists.list_size(v) == 3;
  }
  if (c == "v") {
    const auto [u, v] = w.edges.at(0);
    return in_p(u) && in_p(v) && g.adjacent(u, v) && both_singletons_equal(lists, u, v);
  }
  if (c == "vi") {
    const Vertex x = w.vertices.at(0);
    const std::vector<Vertex> p(w.vertices.begin() + 1, w.vertices.end());
    for (Vertex q : p)
      if (!g.adjacent(x, q) || !in_p(q)) return false;
    return lists[x] == union_of(lists, p);
  }
  return false;
}

bool witness_reproduces(const Instance& inst, const Violation& w) {
  const auto& d = inst.drawing;
  const auto& lists = inst.lists;
  auto in_p = [&](Vertex v) { return contains(inst.path, v); };
  auto in_n = [&](Vertex v) { return std::binary_search(inst.n_set.begin(), inst.n_set.end(), v); };
  const auto& c = w.condition;
  if (c == "S") {
    const Vertex v = w.vertices.at(0);
    const int s = lists.list_size(v);
    if (in_p(v)) return s != 1;
    if (d.on_outer_face(v)) return s < 3;
    return !in_n(v) && s < 5;
  }
  if (c == "N") {
    const Vertex v = w.vertices.at(0);
    return in_n(v) && !d.on_outer_face(v) && lists.list_size(v) < 4;
  }
  if (c == "M") {
    const Edge e = w.edges.at(0);
    return d.adjacent(e.first, e.second) && lists.list_size(e.first) == 3 && lists.list_size(e.second) == 3 &&
           !std::binary_search(inst.m_set.begin(), inst.m_set.end(), e);
  }
  if (c == "P") {
    const Edge e = w.edges.at(0);
    return in_p(e.first) && in_p(e.second) && d.adjacent(e.first, e.second) &&
           both_singletons_equal(lists, e.first, e.second);
  }
  if (c == "T") {
    const Vertex v = w.vertices.at(0);
    const std::vector<Vertex> p(w.vertices.begin() + 1, w.vertices.end());
    for (Vertex q : p)
      if (!d.adjacent(v, q) || !in_p(q)) return false;
    return lists[v] == union_of(lists, p);
  }
  if (c == "C") {
    const int i = d.crossing_of(w.edges.at(0));
    if (i < 0) return false;
    const auto ref = d.crossing_subgraph(i);
    for (Vertex t : ref.vertices) {
      if (lists.list_size(t) != 3) continue;
      for (Vertex o : ref.vertices) {
        const int s = lists.list_size(o);
        if (o != t && s != 1 && s < 5) return true;
      }
    }
    return false;
  }
  if (c == "distance" || c == "crossing-crossing" || c == "crossing-N" || c == "N-N") {
    const auto dist = subgraph_distance(inst.adjacency(), w.parts.at(0), w.parts.at(1));
    return dist.has_value() && *dist == w.measured && *dist < w.threshold;
  }
  if (c == "lists") {
    const Vertex v = w.vertices.at(0);
    const int s = lists.list_size(v);
    return in_n(v) ? s != 4 : s < 5;
  }
  return false;
}

}  // namespace fivelist

namespace fivelist {

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::Thomassen: return "thomassen";
    case Theorem::Basic: return "basic";
    case Theorem::Main0: return "main0";
    case Theorem::TwoCrossings: return "two-crossings";
    case Theorem::MainAlt: return "mainalt";
    case Theorem::OneCrossing: return "one-crossing";
    case Theorem::Valid: return "valid";
  }
  return "?";
}

std::optional<Theorem> theorem_from_name(std::string_view name) {
  for (Theorem t : {Theorem::Thomassen, Theorem::Basic, Theorem::Main0, Theorem::TwoCrossings,
                    Theorem::MainAlt, Theorem::OneCrossing, Theorem::Valid}) {
    if (name == to_string(t)) return t;
  }
  if (name == "n-set") return Theorem::MainAlt;
  return std::nullopt;
}

ValidityReport check_theorem(const Instance& inst, Theorem t) {
  const Drawing& d = inst.drawing;
  auto planar_only = [&](ValidityReport r) {
    r.conditions.insert(r.conditions.begin(), "planar");
    if (!d.crossings().empty()) {
      r.violations.insert(r.violations.begin(),
                          Violation{"planar", {}, {}, {}, -1, -1,
                                    "drawing has " + std::to_string(d.crossings().size()) + " crossings"});
    }
    return r;
  };
  switch (t) {
    case Theorem::Thomassen: {
      if (inst.path.size() != 2) throw StructuralError("the precolored path must be a single edge");
      if (!d.crossings().empty()) {
        ValidityReport r;
        return planar_only(r);
      }
      return planar_only(check_thomassen(d.planarization(), inst.lists, inst.path[0], inst.path[1]));
    }
    case Theorem::Basic: {
      if (!d.crossings().empty()) {
        ValidityReport r;
        return planar_only(r);
      }
      return planar_only(check_basic(d.planarization(), inst.path, inst.lists));
    }
    case Theorem::Main0: return check_main0(d, inst.n_set, inst.lists);
    case Theorem::MainAlt: return check_mainalt(d, inst.n_set, inst.lists);
    case Theorem::TwoCrossings: return check_few_crossings(d, inst.lists, 2);
    case Theorem::OneCrossing: {
      ValidityReport r = check_few_crossings(d, inst.lists, 1);
      if (d.crossings().empty()) {
        r.violations.push_back({"crossings", {}, {}, {}, 0, 1, "no crossing; exactly one is required"});
      }
      return r;
    }
    case Theorem::Valid: {
      ValidityReport r = check_valid(inst);
      r.merge(check_distant(inst));
      return r;
    }
  }
  return {};
}

}  // namespace fivelist
