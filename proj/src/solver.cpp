#include "fivelist/solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fivelist/format.hpp"

namespace fivelist {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Colored: return "COLORED";
    case Outcome::Uncolorable: return "UNCOLORABLE";
    case Outcome::HypothesisViolation: return "HYPOTHESIS-VIOLATION";
  }
  return "?";
}

const char* to_string(XRule r) {
  switch (r) {
    case XRule::X1: return "X1";
    case XRule::X2: return "X2";
    case XRule::X3: return "X3";
    case XRule::X4a: return "X4a";
    case XRule::X4b: return "X4b";
    case XRule::X5: return "X5";
    case XRule::X6: return "X6";
  }
  return "?";
}

namespace {

bool in(const std::vector<Vertex>& vs, Vertex v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

bool contains_all(const SubEmbedding& s, const std::vector<Vertex>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return s.from_parent[v] >= 0; });
}

std::vector<Vertex> to_child(const SubEmbedding& s, const std::vector<Vertex>& vs) {
  std::vector<Vertex> out;
  for (Vertex v : vs) out.push_back(s.from_parent.at(v));
  return out;
}

/// inner is a subgraph of outer.graph; the result maps straight to the host of outer.
SubEmbedding chain(const SubEmbedding& outer, const SubEmbedding& inner) {
  SubEmbedding out;
  out.graph = inner.graph;
  out.from_parent.assign(outer.from_parent.size(), -1);
  for (std::size_t i = 0; i < inner.to_parent.size(); ++i) {
    const Vertex p = outer.to_parent[inner.to_parent[i]];
    out.to_parent.push_back(p);
    out.from_parent[p] = static_cast<Vertex>(i);
  }
  return out;
}

SubEmbedding without(const PlaneGraph& g, const std::vector<Vertex>& removed) {
  std::vector<bool> keep(g.num_vertices(), true);
  for (Vertex v : removed) keep[v] = false;
  return g.subgraph(keep);
}

void lift(Coloring& out, const SubEmbedding& s, const Coloring& c) {
  for (std::size_t i = 0; i < c.size(); ++i) out[s.to_parent[i]] = c[i];
}

Color smallest_free(const Adjacency& adj, const ListAssignment& l, const Coloring& c, Vertex v) {
  for (Color col : l[v]) {
    bool used = false;
    for (Vertex w : adj[v]) used = used || c[w] == col;
    if (!used) return col;
  }
  return kUncolored;
}

std::vector<std::vector<Vertex>> components_without(const Adjacency& adj, Vertex cut) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (s == cut || comp[s] >= 0) continue;
    std::vector<Vertex> part{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (Vertex w : adj[part[i]]) {
        if (w != cut && comp[w] < 0) {
          comp[w] = comp[s];
          part.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    out.push_back(std::move(part));
  }
  return out;
}

std::string dump_of(const PlaneGraph& g, const std::vector<Vertex>& path, const ListAssignment& l) {
  try {
    return serialize_instance(make_planar_instance(g, l, path));
  } catch (const std::exception& e) {
    return std::string("# could not serialize: ") + e.what() + "\n";
  }
}

std::string first_failure(const ValidityReport& r) {
  if (r.violations.empty()) return "";
  return "(" + r.violations.front().condition + ") " + r.violations.front().detail;
}

// Vertices of the outer cycle as a ring.
struct Ring {
  std::vector<Vertex> vs;
  int index(Vertex v) const {
    return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  }
  Vertex at(int i) const {
    const int n = static_cast<int>(vs.size());
    return vs[((i % n) + n) % n];
  }
  std::vector<Vertex> neighbors(Vertex v) const {
    const int i = index(v);
    std::vector<Vertex> out{at(i - 1), at(i + 1)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

class BasicSolver {
 public:
  Coloring solve(const PlaneGraph& g, const std::vector<Vertex>& p, const ListAssignment& l);
  std::map<std::string, int> steps;

 private:
  void note(const std::string& step) { ++steps[step]; }
  [[noreturn]] void fail(const std::string& what, const PlaneGraph& g, const std::vector<Vertex>& p,
                         const ListAssignment& l) {
    throw InternalError("color_basic: " + what, dump_of(g, p, l));
  }

  Coloring on(const SubEmbedding& s, const std::vector<Vertex>& p, const ListAssignment& l) {
    Coloring out(l.size(), kUncolored);
    lift(out, s, solve(s.graph, to_child(s, p), l.restricted(s.to_parent)));
    return out;
  }

  bool valid(const SubEmbedding& s, const std::vector<Vertex>& p, const ListAssignment& l) {
    try {
      return check_basic(s.graph, to_child(s, p), l.restricted(s.to_parent)).ok();
    } catch (const StructuralError&) {
      return false;
    }
  }

  bool valid(const PlaneGraph& g, const std::vector<Vertex>& p, const ListAssignment& l) {
    try {
      return check_basic(g, p, l).ok();
    } catch (const StructuralError&) {
      return false;
    }
  }

  // Remove colored vertices and their colors from the lists of their neighbors.
  ListAssignment strip(const PlaneGraph& g, const ListAssignment& l, const std::vector<Vertex>& vs,
                       const Coloring& c) {
    ListAssignment out = l;
    for (Vertex v : vs) {
      if (c[v] == kUncolored) continue;
      for (Vertex w : g.rotation(v))
        if (!in(vs, w)) out.remove(w, c[v]);
    }
    return out;
  }

  // A vertex with more colors than neighbors can always be colored last.
  bool trim(const PlaneGraph& g, const std::vector<Vertex>& p, const ListAssignment& l, Coloring& c) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (in(p, v) || g.degree(v) >= l.list_size(v)) continue;
      note("trim");
      c = on(without(g, {v}), p, l);
      c[v] = smallest_free(g.adjacency(), l, c, v);
      return true;
    }
    return false;
  }

  Coloring split_chord(const SubEmbedding& a, const SubEmbedding& b, const std::vector<Vertex>& p,
                       const std::vector<Vertex>& shared, const ListAssignment& l);
  Coloring short_face(const PlaneGraph& g, const std::vector<Vertex>& p, const ListAssignment& l,
                      const Ring& f);
  Coloring reduce_x(const PlaneGraph& g, const std::vector<Vertex>& p, ListAssignment l, const Ring& f);
};

Coloring BasicSolver::split_chord(const SubEmbedding& a, const SubEmbedding& b, const std::vector<Vertex>& p,
                                  const std::vector<Vertex>& shared, const ListAssignment& l) {
  Coloring c = on(a, p, l);
  ListAssignment l2 = l;
  for (Vertex v : shared) l2.set(v, {c[v]});
  const Coloring c2 = on(b, shared, l2);
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c[v] == kUncolored) c[v] = c2[v];
  return c;
}

Coloring BasicSolver::solve(const PlaneGraph& g, const std::vector<Vertex>& p, const ListAssignment& l) {
  {
    ValidityReport r;
    try {
      r = check_basic(g, p, l);
    } catch (const StructuralError& e) {
      fail(std::string("sub-instance is malformed: ") + e.what(), g, p, l);
    }
    if (!r.ok()) fail("sub-instance violates " + first_failure(r), g, p, l);
  }
  const int n = g.num_vertices();
  const Adjacency& adj = g.adjacency();
  std::vector<bool> in_p(n, false);
  for (Vertex v : p) in_p[v] = true;

  Coloring c(n, kUncolored);
  if (std::all_of(in_p.begin(), in_p.end(), [](bool b) { return b; })) {
    for (Vertex v : p) c[v] = l[v].front();
    return c;
  }

  const auto comps = connected_components(adj);
  if (comps.size() > 1) {
    note("components");
    const Vertex anchor = p.empty() ? 0 : p.front();
    std::vector<const std::vector<Vertex>*> order;
    for (const auto& comp : comps)
      if (in(comp, anchor)) order.insert(order.begin(), &comp);
      else order.push_back(&comp);
    for (const auto* comp : order) {
      const SubEmbedding s = g.subgraph(*comp);
      const Coloring part = on(s, in(*comp, anchor) ? p : std::vector<Vertex>{}, l);
      for (Vertex v : *comp) c[v] = part[v];
    }
    return c;
  }

  const BlockTree bt = blocks_and_cuts(g);
  if (!bt.cut_vertices.empty()) {
    note("cut-vertex");
    const Vertex cut = bt.cut_vertices.front();
    auto pieces = components_without(adj, cut);
    for (auto& piece : pieces) {
      piece.push_back(cut);
      std::sort(piece.begin(), piece.end());
    }
    if (in_p[cut]) {
      for (const auto& piece : pieces) {
        std::vector<Vertex> sub_p;
        for (Vertex v : p)
          if (in(piece, v)) sub_p.push_back(v);
        const Coloring part = on(g.subgraph(piece), sub_p, l);
        for (Vertex v : piece) c[v] = part[v];
      }
      return c;
    }
    const Vertex anchor = p.empty() ? pieces.front().front() : p.front();
    auto first = std::find_if(pieces.begin(), pieces.end(), [&](const auto& pc) { return in(pc, anchor); });
    std::rotate(pieces.begin(), first, first + 1);
    ListAssignment l2 = l;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const Coloring part = on(g.subgraph(pieces[i]), i == 0 ? p : std::vector<Vertex>{cut}, l2);
      for (Vertex v : pieces[i]) c[v] = part[v];
      if (i == 0) l2.set(cut, {c[cut]});
    }
    return c;
  }

  if (n <= 2) {
    note("edge");
    for (Vertex v : p) c[v] = l[v].front();
    for (Vertex v = 0; v < n; ++v)
      if (c[v] == kUncolored) c[v] = smallest_free(adj, l, c, v);
    return c;
  }

  // 2-connected from here on, so the outer face is a cycle.
  const Walk outer = g.outer_cycle(0);
  const Ring f{outer.vertices};
  std::set<Edge> outer_edges;
  for (int i = 0; i < static_cast<int>(f.vs.size()); ++i) outer_edges.insert(make_edge(f.at(i), f.at(i + 1)));
  auto is_outer_cycle = [&](const std::vector<Vertex>& k) {
    if (k.size() != f.vs.size()) return false;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (!outer_edges.contains(make_edge(k[i], k[(i + 1) % k.size()]))) return false;
    return true;
  };

  // Separating triangles: color the outside, then the inside from the triangle.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[u]) {
      if (v < u) continue;
      for (Vertex w : adj[v]) {
        if (w < v || !g.adjacent(u, w)) continue;
        const std::vector<Vertex> t{u, v, w};
        if (is_outer_cycle(t)) continue;
        const Walk k{t, true};
        if (!cycle_sides(g, k).has_interior_vertex) continue;
        note("separating-triangle");
        const CycleSplit split = split_at_cycle(g, k);
        return split_chord(split.exterior, split.interior, p, t, l);
      }
    }

  // Separating 4-cycles k1 k2 k3 k4 with k1 the smallest vertex.
  for (Vertex a = 0; a < n; ++a)
    for (Vertex cc = a + 1; cc < n; ++cc) {
      std::vector<Vertex> common;
      for (Vertex w : adj[a])
        if (w > a && w != cc && g.adjacent(w, cc)) common.push_back(w);
      std::sort(common.begin(), common.end());
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const Vertex b = common[i];
          const Vertex d = common[j];
          const std::vector<Vertex> kv{a, b, cc, d};
          if (is_outer_cycle(kv)) continue;
          const Walk k{kv, true};
          if (!cycle_sides(g, k).has_interior_vertex) continue;
          note("separating-4-cycle");
          const CycleSplit split = split_at_cycle(g, k);
          c = on(split.exterior, p, l);
          const SubEmbedding& inside = split.interior;
          const SubEmbedding rest = chain(inside, without(inside.graph, {inside.from_parent[a]}));
          ListAssignment l2 = l;
          for (Vertex z : {b, cc, d}) l2.set(z, {c[z]});
          for (Vertex z : inside.graph.rotation(inside.from_parent[a])) {
            const Vertex zp = inside.to_parent[z];
            if (zp != b && zp != d) l2.remove(zp, c[a]);
          }
          const Coloring part = on(rest, {b, cc, d}, l2);
          for (Vertex v = 0; v < n; ++v)
            if (c[v] == kUncolored) c[v] = part[v];
          return c;
        }
    }

  // Chords of the outer face.
  const auto chords = k_chords(g, outer, 1);
  if (!chords.empty()) {
    for (const Walk& q : chords) {
      const auto [g1, g2] = q_components(g, outer, q);
      if (contains_all(g1, p) || contains_all(g2, p)) note("chord");
      if (contains_all(g1, p)) return split_chord(g1, g2, p, q.vertices, l);
      if (contains_all(g2, p)) return split_chord(g2, g1, p, q.vertices, l);
    }
    note("chord-at-path");
    // Every chord separates P, so P = z1 u z2 and the chord is uv.
    const Walk& q = chords.front();
    if (p.size() != 3 || !in(q.vertices, p[1])) fail("chord separates a short precolored path", g, p, l);
    const Vertex u = p[1];
    const Vertex v = q.vertices[0] == u ? q.vertices[1] : q.vertices[0];
    const auto [g1, g2] = q_components(g, outer, q);
    const bool first_has_z1 = g1.from_parent[p[0]] >= 0;
    const SubEmbedding& s1 = first_has_z1 ? g1 : g2;
    const SubEmbedding& s2 = first_has_z1 ? g2 : g1;
    auto attempt = [&](const SubEmbedding& a, const SubEmbedding& b, Vertex za, Vertex zb) -> bool {
      const std::vector<Vertex> pa = za == p[0] ? std::vector<Vertex>{za, u} : std::vector<Vertex>{u, za};
      const Coloring ca = on(a, pa, l);
      ListAssignment l2 = l;
      l2.set(v, {ca[v]});
      const std::vector<Vertex> pb{v, u, zb};
      if (!valid(b, pb, l2)) return false;
      const Coloring cb = on(b, pb, l2);
      for (Vertex x = 0; x < n; ++x) c[x] = ca[x] != kUncolored ? ca[x] : cb[x];
      return true;
    };
    if (attempt(s1, s2, p[0], p[2]) || attempt(s2, s1, p[2], p[0])) return c;
    // Both fail only when v has fewer neighbors than colors.
    if (trim(g, p, l, c)) return c;
    if (n == 4) {
      for (Vertex x : p) c[x] = l[x].front();
      c[v] = smallest_free(adj, l, c, v);
      if (c[v] != kUncolored) return c;
    }
    fail("no order of the chord sides extends", g, p, l);
  }

  // 2-chords whose far side is not one of the two small exceptions.
  for (const Walk& q : k_chords(g, outer, 2)) {
    const auto [g1, g2] = q_components(g, outer, q);
    auto exceptional = [&](const SubEmbedding& s) {
      if (s.graph.num_vertices() == 3) return true;
      if (s.graph.num_vertices() != 4) return false;
      for (Vertex y : s.to_parent) {
        if (in(q.vertices, y)) continue;
        return l.list_size(y) == 3 && g.adjacent(y, q.vertices[0]) && g.adjacent(y, q.vertices[1]) &&
               g.adjacent(y, q.vertices[2]);
      }
      return false;
    };
    if ((contains_all(g1, p) && !exceptional(g2)) || (contains_all(g2, p) && !exceptional(g1))) note("2-chord");
    if (contains_all(g1, p) && !exceptional(g2)) return split_chord(g1, g2, p, q.vertices, l);
    if (contains_all(g2, p) && !exceptional(g1)) return split_chord(g2, g1, p, q.vertices, l);
  }

  // Precolor more of the outer face until P has length two.
  if (p.size() < 3) {
    std::vector<std::pair<Vertex, std::vector<Vertex>>> options;
    if (p.empty()) {
      const Vertex z = *std::min_element(f.vs.begin(), f.vs.end());
      options.push_back({z, {z}});
    } else if (p.size() == 1) {
      for (Vertex z : f.neighbors(p[0])) options.push_back({z, {p[0], z}});
    } else {
      for (Vertex z : f.neighbors(p[0]))
        if (z != p[1]) options.push_back({z, {z, p[0], p[1]}});
      for (Vertex z : f.neighbors(p[1]))
        if (z != p[0]) options.push_back({z, {p[0], p[1], z}});
      std::sort(options.begin(), options.end());
    }
    for (const auto& [z, np] : options) {
      for (Color col : l[z]) {
        ListAssignment l2 = l;
        l2.set(z, {col});
        if (valid(g, np, l2)) {
          note("extend-path");
          return solve(g, np, l2);
        }
      }
    }
    fail("precolored path cannot be extended", g, p, l);
  }

  if (trim(g, p, l, c)) return c;

  for (Vertex x : adj[p[0]]) {
    if (!in_p[x] && g.adjacent(x, p[1]) && g.adjacent(x, p[2])) {
      fail("path vertices have a common neighbor of large degree", g, p, l);
    }
  }

  if (f.vs.size() <= 5) {
    note("face-" + std::to_string(f.vs.size()));
    return short_face(g, p, l, f);
  }
  return reduce_x(g, p, l, f);
}

Coloring BasicSolver::short_face(const PlaneGraph& g, const std::vector<Vertex>& p, const ListAssignment& l,
                                 const Ring& f) {
  const int n = g.num_vertices();
  Coloring c(n, kUncolored);
  for (Vertex v : p) c[v] = l[v].front();
  auto finish = [&](const std::vector<Vertex>& removed, const Coloring& phi, const std::vector<Vertex>& np) {
    const ListAssignment l2 = strip(g, l, removed, phi);
    const SubEmbedding s = without(g, removed);
    if (!valid(s, np, l2)) return false;
    const Coloring part = on(s, np, l2);
    for (Vertex v = 0; v < n; ++v)
      if (part[v] != kUncolored) c[v] = part[v];
    for (Vertex v : removed) c[v] = phi[v];
    return true;
  };
  auto clashes = [&](const Coloring& phi, Vertex v) {
    for (Vertex w : g.rotation(v))
      if (phi[w] == phi[v]) return true;
    return false;
  };

  if (f.vs.size() == 3) {
    if (finish({p[0]}, c, {p[1], p[2]})) return c;
    fail("triangle reduction is invalid", g, p, l);
  }
  if (f.vs.size() == 4) {
    Vertex v = -1;
    for (Vertex z : f.vs)
      if (!in(p, z)) v = z;
    for (Color col : l[v]) {
      Coloring phi = c;
      phi[v] = col;
      if (clashes(phi, v)) continue;
      if (finish({v}, phi, p)) return c;
    }
    fail("no color of the fourth outer vertex extends", g, p, l);
  }
  Vertex v1 = -1, v2 = -1;
  for (Vertex z : f.neighbors(p[0]))
    if (z != p[1]) v1 = z;
  for (Vertex z : f.neighbors(p[2]))
    if (z != p[1]) v2 = z;
  for (Color c1 : l[v1])
    for (Color c2 : l[v2]) {
      Coloring phi = c;
      phi[v1] = c1;
      phi[v2] = c2;
      if (clashes(phi, v1) || clashes(phi, v2)) continue;
      if (finish({v1, v2}, phi, p)) return c;
    }
  fail("no coloring of the pentagon extends", g, p, l);
}

Coloring BasicSolver::reduce_x(const PlaneGraph& g, const std::vector<Vertex>& p, ListAssignment l, const Ring& f) {
  const int n = g.num_vertices();
  const int i0 = f.index(p[0]);
  const int dir = f.at(i0 + 1) == p[1] ? -1 : 1;
  std::array<Vertex, 5> ids{};
  for (int k = 0; k < 5; ++k) ids[k] = f.at(i0 + dir * k);
  const Vertex v1 = ids[1], v2 = ids[2], v3 = ids[3];

  if (l.list_size(v1) >= 4 && l.list_size(v2) >= 4) {
    ColorList trimmed(l[v1].begin(), l[v1].begin() + 3);
    l.set(v1, trimmed);
  }
  XContext ctx;
  ctx.ids = ids;
  for (int k = 0; k < 5; ++k) ctx.lists[k] = l[ids[k]];
  for (Vertex z : g.rotation(v2))
    if (z != v1 && z != v3 && g.adjacent(z, v1) && g.adjacent(z, v3)) ctx.v123_common_neighbor = true;

  XSelection sel;
  try {
    sel = select_x(ctx);
  } catch (const std::invalid_argument& e) {
    fail(e.what(), g, p, l);
  }
  note(to_string(sel.rule));
  Coloring phi(n, kUncolored);
  for (std::size_t i = 0; i < sel.x_set.size(); ++i) phi[sel.x_set[i]] = sel.colors[i];
  const ListAssignment l2 = strip(g, l, sel.x_set, phi);
  const SubEmbedding s = without(g, sel.x_set);
  if (!valid(s, p, l2)) {
    ValidityReport r = check_basic(s.graph, to_child(s, p), l2.restricted(s.to_parent));
    fail(std::string("rule ") + to_string(sel.rule) + " leaves an invalid instance: " + first_failure(r), g, p, l);
  }
  Coloring c = on(s, p, l2);
  for (Vertex x : sel.x_set) c[x] = phi[x];
  for (Vertex x : sel.x_set) {
    if (c[x] != kUncolored) continue;
    c[x] = smallest_free(g.adjacency(), l, c, x);
    if (c[x] == kUncolored) fail("uncolored vertex of X has no free color", g, p, l);
  }
  return c;
}

// Thomassen's induction. `pre` holds 0, 1 or 2 precolored vertices; with two
// they are adjacent on the outer face.
class ThomassenSolver {
 public:
  Coloring solve(const PlaneGraph& g, std::vector<Vertex> pre, ListAssignment l);
  std::map<std::string, int> steps;

 private:
  void note(const std::string& step) { ++steps[step]; }
  [[noreturn]] void fail(const std::string& what, const PlaneGraph& g, const std::vector<Vertex>& pre,
                         const ListAssignment& l) {
    throw InternalError("color_thomassen: " + what, dump_of(g, pre, l));
  }
  Coloring on(const SubEmbedding& s, const std::vector<Vertex>& pre, const ListAssignment& l) {
    Coloring out(l.size(), kUncolored);
    lift(out, s, solve(s.graph, to_child(s, pre), l.restricted(s.to_parent)));
    return out;
  }
};

Coloring ThomassenSolver::solve(const PlaneGraph& g, std::vector<Vertex> pre, ListAssignment l) {
  const int n = g.num_vertices();
  const Adjacency& adj = g.adjacency();
  Coloring c(n, kUncolored);
  if (n == 0) return c;

  const auto comps = connected_components(adj);
  if (comps.size() > 1) {
    note("components");
    const Vertex anchor = pre.empty() ? 0 : pre.front();
    for (const auto& comp : comps) {
      const bool main = in(comp, anchor);
      const Coloring part = on(g.subgraph(comp), main ? pre : std::vector<Vertex>{}, l);
      for (Vertex v : comp) c[v] = part[v];
    }
    return c;
  }

  if (pre.empty()) {
    const auto outer = g.outer_vertices();
    const Vertex v = outer.front();
    if (l[v].empty()) fail("empty list", g, pre, l);
    l.set(v, {l[v].front()});
    pre = {v};
  }
  if (pre.size() == 1) {
    const Vertex x = pre[0];
    if (n == 1) return Coloring{l[x].front()};
    Vertex w = -1;
    for (Vertex z : g.rotation(x)) {
      if (g.is_outer_face(g.face_of({x, z})) || g.is_outer_face(g.face_of({z, x}))) {
        if (w < 0 || z < w) w = z;
      }
    }
    if (w < 0) fail("precolored vertex has no outer edge", g, pre, l);
    const ColorList free = list_minus(l[w], l[x]);
    if (free.empty()) fail("outer neighbor has no free color", g, pre, l);
    l.set(w, {free.front()});
    pre = {x, w};
  }
  const Vertex x = pre[0];
  const Vertex y = pre[1];
  c[x] = l[x].front();
  c[y] = l[y].front();
  if (n == 2) return c;

  const BlockTree bt = blocks_and_cuts(g);
  if (!bt.cut_vertices.empty()) {
    note("cut-vertex");
    const Vertex cut = bt.cut_vertices.front();
    auto pieces = components_without(adj, cut);
    for (auto& piece : pieces) {
      piece.push_back(cut);
      std::sort(piece.begin(), piece.end());
    }
    auto first = std::find_if(pieces.begin(), pieces.end(),
                              [&](const auto& pc) { return in(pc, x) && in(pc, y); });
    std::rotate(pieces.begin(), first, first + 1);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const Coloring part = on(g.subgraph(pieces[i]), i == 0 ? pre : std::vector<Vertex>{cut}, l);
      for (Vertex v : pieces[i]) c[v] = part[v];
      if (i == 0) l.set(cut, {c[cut]});
    }
    return c;
  }

  const Walk outer = g.outer_cycle(0);
  const Ring f{outer.vertices};
  if (n == 3) {
    for (Vertex v = 0; v < n; ++v)
      if (v != x && v != y) {
        c[v] = smallest_free(adj, l, c, v);
        if (c[v] == kUncolored) fail("third vertex has no free color", g, pre, l);
      }
    return c;
  }

  const auto chords = k_chords(g, outer, 1);
  if (!chords.empty()) {
    note("chord");
    const Walk& q = chords.front();
    const auto [g1, g2] = q_components(g, outer, q);
    const bool first = g1.from_parent[x] >= 0 && g1.from_parent[y] >= 0;
    const SubEmbedding& a = first ? g1 : g2;
    const SubEmbedding& b = first ? g2 : g1;
    c = on(a, pre, l);
    ListAssignment l2 = l;
    for (Vertex v : q.vertices) l2.set(v, {c[v]});
    const Coloring part = on(b, q.vertices, l2);
    for (Vertex v = 0; v < n; ++v)
      if (c[v] == kUncolored) c[v] = part[v];
    return c;
  }

  // Chordless: drop the outer neighbor v of x, keeping two of its colors
  // away from its other neighbors.
  Vertex v = -1;
  for (Vertex z : f.neighbors(x))
    if (z != y) v = z;
  Vertex w = -1;
  for (Vertex z : f.neighbors(v))
    if (z != x) w = z;
  note("remove-outer-neighbor");
  const ColorList free = list_minus(l[v], l[x]);
  if (free.size() < 2) fail("outer vertex next to the precolored edge has a short list", g, pre, l);
  const Color a = free[0];
  const Color b = free[1];
  ListAssignment l2 = l;
  for (Vertex z : g.rotation(v)) {
    if (z == x || z == w) continue;
    l2.remove(z, a);
    l2.remove(z, b);
  }
  c = on(without(g, {v}), pre, l2);
  c[v] = c[w] == a ? b : a;
  return c;
}

void require_total(const Adjacency& adj, const ListAssignment& l, const Coloring& c, const char* who,
                   const std::string& dump) {
  if (auto problem = coloring_problem(adj, l, c)) {
    throw InternalError(std::string(who) + " returned an invalid coloring: " + *problem, dump);
  }
}

}  // namespace

ColoringResult color_thomassen(const PlaneGraph& g, const ListAssignment& lists, Vertex x, Vertex y) {
  ColoringResult res;
  res.report = check_thomassen(g, lists, x, y);
  if (!res.report.ok()) {
    res.outcome = Outcome::HypothesisViolation;
    return res;
  }
  ThomassenSolver solver;
  res.coloring = solver.solve(g, {x, y}, lists);
  res.steps = solver.steps;
  require_total(g.adjacency(), lists, res.coloring, "color_thomassen", dump_of(g, {x, y}, lists));
  res.outcome = Outcome::Colored;
  return res;
}

ColoringResult color_basic(const PlaneGraph& g, const std::vector<Vertex>& path, const ListAssignment& lists) {
  ColoringResult res;
  res.report = check_basic(g, path, lists);
  if (!res.report.ok()) {
    res.outcome = Outcome::HypothesisViolation;
    return res;
  }
  BasicSolver solver;
  res.coloring = solver.solve(g, path, lists);
  res.steps = solver.steps;
  require_total(g.adjacency(), lists, res.coloring, "color_basic", dump_of(g, path, lists));
  res.outcome = Outcome::Colored;
  return res;
}

ColoringResult color_one_crossing(const Drawing& drawing, const ListAssignment& lists) {
  ColoringResult res;
  res.report = check_few_crossings(drawing, lists, 1);
  if (drawing.crossings().size() != 1) {
    throw std::invalid_argument("color_one_crossing needs exactly one crossing, got " +
                                std::to_string(drawing.crossings().size()) +
                                "; use the exact oracle for other drawings");
  }
  if (!res.report.ok()) {
    res.outcome = Outcome::HypothesisViolation;
    return res;
  }
  const int n = drawing.num_original();
  const PlaneGraph& planar = drawing.planarization();
  const Crossing& cr = drawing.crossings().front();
  // Counterclockwise around the crossing: x, u, y, v.
  const Vertex x = cr.ends.a, y = cr.ends.b, u = cr.ends.c, v = cr.ends.d;
  const Vertex dummy = cr.dummy;

  Adjacency rot(n);
  for (Vertex z = 0; z < n; ++z) {
    const auto r = planar.rotation(z);
    rot[z].assign(r.begin(), r.end());
  }
  const std::array<Vertex, 4> quad{x, u, y, v};
  // Quad edges that already exist get re-routed along the crossing.
  for (int i = 0; i < 4; ++i) {
    const Vertex s = quad[i];
    const Vertex t = quad[(i + 1) % 4];
    for (auto [from, to] : {std::pair{s, t}, std::pair{t, s}}) {
      auto it = std::find(rot[from].begin(), rot[from].end(), to);
      if (it != rot[from].end()) rot[from].erase(it);
    }
  }
  for (int i = 0; i < 4; ++i) {
    const Vertex s = quad[i];
    const Vertex succ = quad[(i + 1) % 4];
    const Vertex pred = quad[(i + 3) % 4];
    auto it = std::find(rot[s].begin(), rot[s].end(), dummy);
    it = rot[s].erase(it);
    rot[s].insert(it, {succ, pred});
  }
  const PlaneGraph g(std::move(rot), {Dart{x, u}});

  ListAssignment l = lists;
  const Color cx = l[x].front();
  const ColorList ly = list_minus(l[y], {cx});
  const Color cy = ly.front();
  const ColorList lu = list_minus(l[u], normalize_list({cx, cy}));
  const Color cu = lu.front();
  l.set(x, {cx});
  l.set(y, {cy});
  l.set(u, {cu});
  l.remove(v, cu);

  const ColoringResult inner = color_basic(g, {x, u, y}, l);
  if (!inner.ok()) {
    throw InternalError("color_one_crossing: reduced instance violates " + first_failure(inner.report),
                        dump_of(g, {x, u, y}, l));
  }
  res.coloring = inner.coloring;
  res.steps = inner.steps;
  require_total(drawing.original_adjacency(), lists, res.coloring, "color_one_crossing",
                dump_of(g, {x, u, y}, l));
  res.outcome = Outcome::Colored;
  return res;
}

ReducedInstance reduce_by_partial_coloring(const Adjacency& adj, const ListAssignment& lists,
                                           const std::vector<Vertex>& path, const Coloring& phi) {
  const int n = static_cast<int>(adj.size());
  if (static_cast<int>(phi.size()) != n || lists.size() != n) {
    throw PreconditionError("partial coloring or lists do not match the graph");
  }
  std::vector<bool> in_p(n, false);
  for (Vertex p : path) in_p[p] = true;
  for (Vertex v = 0; v < n; ++v) {
    if (phi[v] == kUncolored) {
      if (in_p[v] && lists.list_size(v) != 1) {
        throw PreconditionError("uncolored path vertex " + std::to_string(v) + " needs a single color");
      }
      continue;
    }
    if (!lists.contains(v, phi[v])) {
      throw PreconditionError("vertex " + std::to_string(v) + " is colored outside its list");
    }
    for (Vertex w : adj[v]) {
      if (phi[w] == phi[v]) {
        throw PreconditionError("phi is not proper on edge " + std::to_string(std::min(v, w)) + "-" +
                                std::to_string(std::max(v, w)));
      }
      if (in_p[w] && lists.contains(w, phi[v])) {
        throw PreconditionError("color of vertex " + std::to_string(v) + " lies in the list of path vertex " +
                                std::to_string(w));
      }
    }
  }

  ReducedInstance red;
  red.from_parent.assign(n, -1);
  red.r.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    if (phi[v] != kUncolored) continue;
    red.from_parent[v] = static_cast<Vertex>(red.to_parent.size());
    red.to_parent.push_back(v);
  }
  std::vector<ColorList> out;
  for (Vertex z : red.to_parent) {
    ColorList removed;
    ColorList r;
    for (Vertex w : adj[z]) {
      if (phi[w] != kUncolored) removed.push_back(phi[w]);
      // Path vertices keep their own lists; R_z is only added off the path.
      else if (in_p[w] && !in_p[z]) r = list_union(r, lists[w]);
    }
    red.r[z] = r;
    out.push_back(list_union(list_minus(lists[z], normalize_list(removed)), r));
    red.adjacency.emplace_back();
    for (Vertex w : adj[z])
      if (phi[w] == kUncolored) red.adjacency.back().push_back(red.from_parent[w]);
  }
  red.lists = ListAssignment(std::move(out));
  return red;
}

Coloring compose(const ReducedInstance& red, const Coloring& phi, const Coloring& psi) {
  Coloring out = phi;
  for (std::size_t i = 0; i < red.to_parent.size(); ++i) out[red.to_parent[i]] = psi[i];
  return out;
}

XSelection select_x(const XContext& ctx) {
  const auto& L = ctx.lists;
  const int s1 = static_cast<int>(L[1].size());
  const int s2 = static_cast<int>(L[2].size());
  const int s3 = static_cast<int>(L[3].size());
  const int s4 = static_cast<int>(L[4].size());
  const Vertex v1 = ctx.ids[1], v2 = ctx.ids[2], v3 = ctx.ids[3];
  auto none = [](XRule r) {
    return std::invalid_argument(std::string("rule ") + to_string(r) + " applies but has no admissible colors");
  };
  auto first_of = [](const ColorList& l) { return l.empty() ? kUncolored : l.front(); };

  if (s1 == 3 && s3 != 3) {
    const Color c1 = first_of(list_minus(L[1], L[0]));
    if (c1 == kUncolored) throw none(XRule::X1);
    return {{v1}, {c1}, XRule::X1};
  }
  if (s1 == 3 && s3 == 3) {
    for (Color c2 : list_minus(L[2], L[3])) {
      const Color c1 = first_of(list_minus(L[1], list_union(L[0], {c2})));
      if (c1 != kUncolored) return {{v1, v2}, {c1, c2}, XRule::X2};
    }
    throw none(XRule::X2);
  }
  if (s2 == 3 && (s4 != 3 || s3 >= 5)) return {{v2}, {L[2].front()}, XRule::X3};
  if (s2 == 3 && s3 == 4 && s4 == 3) {
    if (!ctx.v123_common_neighbor || s1 >= 5) {
      for (Color c3 : list_minus(L[3], L[4])) {
        const Color c2 = first_of(list_minus(L[2], {c3}));
        if (c2 != kUncolored) return {{v2, v3}, {c2, c3}, XRule::X4a};
      }
      throw none(XRule::X4a);
    }
    if (s1 == 4) {
      for (Color c1 : list_minus(L[1], L[0]))
        for (Color c3 : list_minus(L[3], L[4])) {
          if (!list_contains(L[2], c1) || !list_contains(L[2], c3) || c1 == c3) {
            return {{v1, v2, v3}, {c1, kUncolored, c3}, XRule::X4b};
          }
        }
      throw none(XRule::X4b);
    }
  }
  if (ctx.v12_crossing_adjacent && s1 == 4 && s2 == 4) {
    if (s3 != 3) {
      const Color c1 = first_of(list_minus(L[1], L[0]));
      if (c1 == kUncolored) throw none(XRule::X5);
      return {{v1}, {c1}, XRule::X5};
    }
    const Color c2 = first_of(list_minus(L[2], L[3]));
    if (c2 == kUncolored) throw none(XRule::X6);
    return {{v2}, {c2}, XRule::X6};
  }
  throw std::invalid_argument("no selection rule applies to the outer face");
}

}  // namespace fivelist
