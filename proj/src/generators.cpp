#include <algorithm>
#include <cmath>
#include <set>

#include "fivelist/harness.hpp"

namespace fivelist {

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = eng_();
    if (r >= threshold) return r % n;
  }
}

std::vector<int> Rng::sample(int lo, int hi, int k) {
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(pool.size() - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(seed ^ mix(index));
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Triangulation: return "TRIANGULATION";
    case Family::Grid: return "GRID";
    case Family::WheelStack: return "WHEEL_STACK";
    case Family::NearPlanar: return "NEAR_PLANAR";
    case Family::Thm5NSet: return "THM5_NSET";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::Triangulation, Family::Grid, Family::WheelStack, Family::NearPlanar, Family::Thm5NSet}) {
    std::string s = to_string(f);
    std::string lower = s;
    for (char& ch : lower) ch = static_cast<char>(ch == '_' ? '-' : std::tolower(ch));
    if (name == s || name == lower) return f;
  }
  return std::nullopt;
}

const char* to_string(Base b) {
  switch (b) {
    case Base::Triangulation: return "triangulation";
    case Base::Grid: return "grid";
    case Base::Strip: return "strip";
  }
  return "?";
}

std::optional<Base> base_from_name(std::string_view name) {
  for (Base b : {Base::Triangulation, Base::Grid, Base::Strip})
    if (name == to_string(b)) return b;
  return std::nullopt;
}

Theorem target_theorem(const GenSpec& spec) {
  if (spec.theorem) return *spec.theorem;
  switch (spec.family) {
    case Family::NearPlanar: return Theorem::Main0;
    case Family::Thm5NSet: return Theorem::MainAlt;
    default: return Theorem::Thomassen;
  }
}

namespace {

int index_in(const std::vector<Vertex>& r, Vertex v) {
  return static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin());
}

// Vertex before v in the rotation at `at`.
Vertex pred(const Adjacency& rot, Vertex at, Vertex v) {
  const auto& r = rot[at];
  const int i = index_in(r, v);
  return r[(i + r.size() - 1) % r.size()];
}

void insert_after(Adjacency& rot, Vertex at, Vertex after, Vertex v) {
  auto& r = rot[at];
  r.insert(r.begin() + index_in(r, after) + 1, v);
}

void erase(Adjacency& rot, Vertex at, Vertex v) {
  auto& r = rot[at];
  r.erase(r.begin() + index_in(r, v));
}

bool has(const Adjacency& rot, Vertex a, Vertex b) {
  return std::find(rot[a].begin(), rot[a].end(), b) != rot[a].end();
}

Adjacency angular_rotation(const std::vector<std::pair<double, double>>& pts, const std::vector<Edge>& edges) {
  Adjacency adj(pts.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (Vertex v = 0; v < static_cast<Vertex>(pts.size()); ++v) {
    auto angle = [&](Vertex w) { return std::atan2(pts[w].second - pts[v].second, pts[w].first - pts[v].first); };
    std::sort(adj[v].begin(), adj[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return adj;
}

// Triangle 0 1 2 whose outer face is left of 0->2; every insertion splits a
// bounded face (a, b, c), listed counterclockwise.
Adjacency triangulation_rotation(int n, Rng& rng) {
  Adjacency rot(n);
  rot[0] = {1, 2};
  rot[1] = {2, 0};
  rot[2] = {0, 1};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
  for (Vertex w = 3; w < n; ++w) {
    const std::size_t i = rng.below(faces.size());
    const auto [a, b, c] = faces[i];
    insert_after(rot, a, b, w);
    insert_after(rot, b, c, w);
    insert_after(rot, c, a, w);
    rot[w] = {a, b, c};
    faces[i] = {a, b, w};
    faces.push_back({b, c, w});
    faces.push_back({c, a, w});
  }
  return rot;
}

void flip_edges(Adjacency& rot, int flips, Rng& rng) {
  const int n = static_cast<int>(rot.size());
  for (int attempt = 0, done = 0; done < flips && attempt < 20 * flips; ++attempt) {
    const Vertex a = static_cast<Vertex>(rng.below(n));
    if (rot[a].size() < 4) continue;
    const Vertex b = rot[a][rng.below(rot[a].size())];
    if (rot[b].size() < 4 || (a < 3 && b < 3)) continue;
    const Vertex c = pred(rot, b, a);
    const Vertex d = pred(rot, a, b);
    if (c == d || has(rot, c, d)) continue;
    erase(rot, a, b);
    erase(rot, b, a);
    insert_after(rot, c, a, d);
    insert_after(rot, d, b, c);
    ++done;
  }
}

std::vector<Dart> triangle_outer() { return {{0, 2}}; }

PlaneGraph strip_graph(int spine, int ears, Rng& rng) {
  if (spine < 2 || ears < 0 || ears > 2 * (spine - 1)) throw InfeasibleSpec("strip needs 0 <= ears <= 2 (spine - 1)");
  std::vector<std::pair<double, double>> pts;
  std::vector<Edge> edges;
  for (int i = 0; i < spine; ++i) pts.push_back({i, 0});
  for (int i = 0; i + 1 < spine; ++i) edges.push_back({i, i + 1});
  std::vector<int> slots(2 * (spine - 1));
  for (int i = 0; i < static_cast<int>(slots.size()); ++i) slots[i] = i;
  rng.shuffle(slots);
  slots.resize(ears);
  std::sort(slots.begin(), slots.end());
  for (int s : slots) {
    const int i = s / 2;
    const Vertex e = static_cast<Vertex>(pts.size());
    pts.push_back({i + 0.5, s % 2 ? 1.0 : -1.0});
    edges.push_back({i, e});
    edges.push_back({i + 1, e});
  }
  return PlaneGraph::from_positions(pts, edges);
}

std::vector<std::pair<double, double>> grid_points(int w, int h) {
  std::vector<std::pair<double, double>> pts;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) pts.push_back({x, y});
  return pts;
}

std::vector<Edge> grid_edges(int w, int h) {
  std::vector<Edge> edges;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Vertex v = y * w + x;
      if (x + 1 < w) edges.push_back({v, v + 1});
      if (y + 1 < h) edges.push_back({v, v + w});
    }
  }
  return edges;
}

int distance_between(const Adjacency& adj, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
  const auto d = bfs_distances(adj, from);
  int best = -1;
  for (Vertex v : to)
    if (d[v] >= 0 && (best < 0 || d[v] < best)) best = d[v];
  return best < 0 ? 1 << 29 : best;
}

std::vector<Vertex> x_vertices(const CrossingSpec& x) { return {x.a, x.b, x.c, x.d}; }

void add_edge(Adjacency& adj, Vertex a, Vertex b) {
  adj[a].push_back(b);
  adj[b].push_back(a);
}

// Crossings on the diagonals of grid squares.
RawDrawing grid_crossings(int w, int h, int count, int min_dist, Rng& rng) {
  const auto pts = grid_points(w, h);
  auto edges = grid_edges(w, h);
  const PlaneGraph base = PlaneGraph::from_positions(pts, edges);
  Adjacency adj = base.adjacency();
  std::vector<int> squares;
  for (int y = 0; y + 1 < h; ++y)
    for (int x = 0; x + 1 < w; ++x) squares.push_back(y * w + x);
  rng.shuffle(squares);
  std::vector<CrossingSpec> chosen;
  for (int s : squares) {
    if (static_cast<int>(chosen.size()) == count) break;
    const CrossingSpec x{s, s + w + 1, s + 1, s + w};
    Adjacency trial = adj;
    add_edge(trial, x.a, x.b);
    add_edge(trial, x.c, x.d);
    bool ok = true;
    for (const auto& y : chosen) ok = ok && distance_between(trial, x_vertices(x), x_vertices(y)) >= min_dist;
    if (!ok) continue;
    adj = std::move(trial);
    chosen.push_back(x);
    edges.push_back(make_edge(x.a, x.b));
    edges.push_back(make_edge(x.c, x.d));
  }
  if (static_cast<int>(chosen.size()) < count) {
    throw InfeasibleSpec("cannot place " + std::to_string(count) + " crossings at distance " +
                         std::to_string(min_dist) + " in a " + std::to_string(w) + "x" + std::to_string(h) + " grid");
  }
  return {angular_rotation(pts, edges), chosen, base.outer_darts()};
}

// Crossing edge cd through edge ab of two bounded triangles (a,b,c), (b,a,d).
RawDrawing triangulation_crossings(const PlaneGraph& base, int count, int min_dist, Rng& rng) {
  Adjacency rot = base.adjacency();
  Adjacency adj = rot;
  auto edges = base.edges();
  rng.shuffle(edges);
  std::set<int> used_faces;
  std::vector<CrossingSpec> chosen;
  for (auto [a, b] : edges) {
    if (static_cast<int>(chosen.size()) == count) break;
    const int f1 = base.face_of({a, b});
    const int f2 = base.face_of({b, a});
    if (base.is_outer_face(f1) || base.is_outer_face(f2) || used_faces.contains(f1) || used_faces.contains(f2)) continue;
    if (base.faces()[f1].size() != 3 || base.faces()[f2].size() != 3) continue;
    const Vertex c = pred(base.adjacency(), b, a);
    const Vertex d = pred(base.adjacency(), a, b);
    if (c == d || has(adj, c, d)) continue;
    const CrossingSpec x{a, b, d, c};
    Adjacency trial = adj;
    add_edge(trial, c, d);
    bool ok = true;
    for (const auto& y : chosen) ok = ok && distance_between(trial, x_vertices(x), x_vertices(y)) >= min_dist;
    if (!ok) continue;
    adj = std::move(trial);
    insert_after(rot, c, a, d);
    insert_after(rot, d, b, c);
    used_faces.insert(f1);
    used_faces.insert(f2);
    chosen.push_back(x);
  }
  if (static_cast<int>(chosen.size()) < count) {
    throw InfeasibleSpec("cannot place " + std::to_string(count) + " crossings at distance " +
                         std::to_string(min_dist) + " in a triangulation on " +
                         std::to_string(base.num_vertices()) + " vertices");
  }
  return {rot, chosen, base.outer_darts()};
}

// Random greedy with restarts; N pairwise >= nn, and >= nx from every G_x.
std::vector<Vertex> place_n(const Drawing& d, int count, int nn, int nx, Rng& rng) {
  if (count == 0) return {};
  const auto& adj = d.original_adjacency();
  const int n = d.num_original();
  std::vector<int> near_crossing(n, 1 << 29);
  for (int i = 0; i < static_cast<int>(d.crossings().size()); ++i) {
    const auto dist = bfs_distances(adj, d.crossing_subgraph(i).vertices);
    for (Vertex v = 0; v < n; ++v)
      if (dist[v] >= 0) near_crossing[v] = std::min(near_crossing[v], dist[v]);
  }
  std::vector<std::vector<int>> dist(n);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex src[] = {v};
    dist[v] = bfs_distances(adj, src);
  }
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  for (int attempt = 0; attempt < 64; ++attempt) {
    rng.shuffle(order);
    std::vector<Vertex> picked;
    for (Vertex v : order) {
      if (near_crossing[v] < nx) continue;
      bool ok = true;
      for (Vertex u : picked) ok = ok && (dist[u][v] < 0 || dist[u][v] >= nn);
      if (ok) picked.push_back(v);
      if (static_cast<int>(picked.size()) == count) break;
    }
    if (static_cast<int>(picked.size()) == count) {
      std::sort(picked.begin(), picked.end());
      return picked;
    }
  }
  throw InfeasibleSpec("cannot place " + std::to_string(count) + " N vertices at pairwise distance " +
                       std::to_string(nn) + " on " + std::to_string(n) + " vertices");
}

ColorList random_list(Rng& rng, int size, int palette) { return rng.sample(1, std::max(size, palette), size); }

// Singleton colors on the path, proper on the subgraph it induces.
void color_path(Instance& inst, Rng& rng, int palette) {
  std::vector<Color> used;
  for (std::size_t i = 0; i < inst.path.size(); ++i) {
    Color c = 0;
    while (true) {
      c = 1 + static_cast<Color>(rng.below(std::max(palette, 3)));
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) ok = ok && !(used[j] == c && inst.drawing.adjacent(inst.path[j], inst.path[i]));
      if (ok) break;
    }
    used.push_back(c);
    inst.lists.set(inst.path[i], {c});
  }
}

// A common neighbor of a 3-vertex path may not have exactly the path colors.
void fix_common_neighbors(Instance& inst, Rng& rng, int palette) {
  if (inst.path.size() != 3) return;
  ColorList u;
  for (Vertex p : inst.path) u = list_union(u, inst.lists[p]);
  const auto& adj = inst.adjacency();
  for (Vertex x = 0; x < inst.num_vertices(); ++x) {
    bool common = true;
    for (Vertex p : inst.path) common = common && std::find(adj[x].begin(), adj[x].end(), p) != adj[x].end();
    for (int tries = 0; common && inst.lists[x] == u && tries < 1000; ++tries) {
      inst.lists.set(x, random_list(rng, inst.lists.list_size(x), std::max(palette, inst.lists.list_size(x) + 1)));
    }
  }
}

void assign_lists(Instance& inst, Theorem t, const ListProfile& prof, Rng& rng) {
  const int n = inst.num_vertices();
  const auto& adj = inst.adjacency();
  inst.lists = ListAssignment(n);
  std::vector<bool> in_path(n, false);
  for (Vertex p : inst.path) in_path[p] = true;
  for (Vertex v = 0; v < n; ++v) {
    if (in_path[v]) continue;
    int size = prof.interior;
    if (std::binary_search(inst.n_set.begin(), inst.n_set.end(), v)) {
      size = prof.special;
    } else if ((t == Theorem::Thomassen || t == Theorem::Basic) && inst.drawing.on_outer_face(v)) {
      size = prof.outer;
      if (t == Theorem::Basic && size <= 3) {
        size = 3;
        for (Vertex w : adj[v])
          if (w < v && !in_path[w] && inst.lists.list_size(w) == 3) size = 4;
      }
    }
    inst.lists.set(v, random_list(rng, size, prof.palette));
  }
  color_path(inst, rng, prof.palette);
  if (t == Theorem::Basic) fix_common_neighbors(inst, rng, prof.palette);
}

std::vector<Vertex> outer_segment(const PlaneGraph& g, int length, Rng& rng) {
  const Walk c = g.outer_cycle();
  const int k = static_cast<int>(c.vertices.size());
  const int start = static_cast<int>(rng.below(k));
  std::vector<Vertex> path;
  for (int i = 0; i <= length; ++i) path.push_back(c.vertices[(start + i) % k]);
  return path;
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw InfeasibleSpec(what);
}

}  // namespace

PlaneGraph random_triangulation(int n, Rng& rng, int flips) {
  require_range(n >= 3, "a triangulation needs at least 3 vertices");
  Adjacency rot = triangulation_rotation(n, rng);
  flip_edges(rot, flips, rng);
  return PlaneGraph(std::move(rot), triangle_outer());
}

PlaneGraph grid_graph(int width, int height) {
  require_range(width >= 2 && height >= 2, "a grid needs width and height >= 2");
  return PlaneGraph::from_positions(grid_points(width, height), grid_edges(width, height));
}

PlaneGraph wheel_stack(int rings, int spokes) {
  require_range(rings >= 1 && spokes >= 3, "a wheel stack needs rings >= 1 and spokes >= 3");
  // Built from rotations directly: straight-line coordinates collide for
  // small spoke counts. Vertex (r, i) meets (r+1, i) and (r+1, i-1) outside
  // and (r-1, i), (r-1, i+1) inside.
  auto id = [&](int r, int i) { return 1 + (r - 1) * spokes + (i % spokes + spokes) % spokes; };
  Adjacency rot(1 + rings * spokes);
  for (int i = 0; i < spokes; ++i) rot[0].push_back(id(1, i));
  for (int r = 1; r <= rings; ++r) {
    for (int i = 0; i < spokes; ++i) {
      auto& out = rot[id(r, i)];
      if (r < rings) out.push_back(id(r + 1, i));
      out.push_back(id(r, i + 1));
      if (r == 1) {
        out.push_back(0);
      } else {
        out.push_back(id(r - 1, i + 1));
        out.push_back(id(r - 1, i));
      }
      out.push_back(id(r, i - 1));
      if (r < rings) out.push_back(id(r + 1, i - 1));
    }
  }
  return PlaneGraph(std::move(rot), {{id(rings, 1), id(rings, 0)}});
}

Instance gen_instance(const GenSpec& spec) {
  Rng rng(spec.seed);
  const Theorem t = target_theorem(spec);
  const bool planar_family =
      spec.family == Family::Triangulation || spec.family == Family::Grid || spec.family == Family::WheelStack;
  const bool supported = planar_family ? t != Theorem::OneCrossing && t != Theorem::Valid
                         : spec.family == Family::NearPlanar
                             ? t == Theorem::Main0 || t == Theorem::TwoCrossings || t == Theorem::OneCrossing
                             : t == Theorem::MainAlt || t == Theorem::Main0;
  if (!supported) {
    throw InfeasibleSpec(std::string(to_string(spec.family)) + " does not generate instances for " + to_string(t));
  }
  require_range(spec.n <= 100000 && spec.width <= 1000 && spec.height <= 1000 && spec.rings <= 1000 &&
                    spec.spokes <= 1000,
                "size parameters too large");
  require_range(spec.lists.interior >= 1 && spec.lists.outer >= 1 && spec.lists.special >= 1,
                "list sizes must be positive");

  Instance inst;
  int nn = 11;
  switch (spec.family) {
    case Family::Triangulation: inst.drawing = Drawing(random_triangulation(spec.n, rng, spec.flips)); break;
    case Family::Grid: inst.drawing = Drawing(grid_graph(spec.width, spec.height)); break;
    case Family::WheelStack: inst.drawing = Drawing(wheel_stack(spec.rings, spec.spokes)); break;
    case Family::NearPlanar: {
      require_range(spec.crossings >= 0, "crossings must be nonnegative");
      if (t == Theorem::OneCrossing) require_range(spec.crossings == 1, "one-crossing instances need crossings = 1");
      if (t == Theorem::TwoCrossings) require_range(spec.crossings <= 2, "two-crossings instances need crossings <= 2");
      const int min_dist = spec.min_distance >= 0 ? spec.min_distance : t == Theorem::Main0 ? 15 : 0;
      if (t == Theorem::Main0) require_range(min_dist >= 15, "crossings closer than 15 violate the hypotheses");
      RawDrawing raw;
      if (spec.base == Base::Triangulation) {
        raw = triangulation_crossings(random_triangulation(spec.n, rng, spec.flips), spec.crossings, min_dist, rng);
      } else if (spec.base == Base::Grid) {
        require_range(spec.width >= 2 && spec.height >= 2, "a grid needs width and height >= 2");
        raw = grid_crossings(spec.width, spec.height, spec.crossings, min_dist, rng);
      } else {
        throw InfeasibleSpec("NEAR_PLANAR supports grid and triangulation bases");
      }
      inst.drawing = Drawing::planarize(raw);
      break;
    }
    case Family::Thm5NSet: {
      nn = spec.min_distance >= 0 ? spec.min_distance : 11;
      require_range(nn >= 11, "N vertices closer than 11 violate the hypotheses");
      require_range(spec.n_count >= 0, "n_count must be nonnegative");
      if (spec.base == Base::Triangulation) inst.drawing = Drawing(random_triangulation(spec.n, rng, spec.flips));
      else if (spec.base == Base::Grid) inst.drawing = Drawing(grid_graph(spec.width, spec.height));
      else inst.drawing = Drawing(strip_graph(spec.width, spec.n - spec.width, rng));
      break;
    }
  }
  if (spec.n_count > 0) {
    require_range(t == Theorem::Main0 || t == Theorem::MainAlt, "N vertices only belong to main0 and mainalt");
    inst.n_set = place_n(inst.drawing, spec.n_count, nn, 13, rng);
  }
  if (t == Theorem::Thomassen || t == Theorem::Basic) {
    int len = spec.path_length;
    if (t == Theorem::Thomassen) {
      require_range(len < 0 || len == 1, "thomassen instances have a precolored edge");
      len = 1;
    } else if (len < 0) {
      len = rng.uniform(0, 2);
    }
    require_range(len <= 2, "path length above 2");
    inst.path = outer_segment(inst.drawing.planarization(), len, rng);
  }
  assign_lists(inst, t, spec.lists, rng);

  const ValidityReport rep = check_theorem(inst, t);
  if (!rep.ok()) {
    const Violation& v = rep.violations.front();
    throw InfeasibleSpec("generated instance fails " + std::string(to_string(t)) + " condition " + v.condition +
                         ": " + v.detail);
  }
  return inst;
}

namespace {

bool connected_without(const Adjacency& rot, Vertex a, Vertex b) {
  Adjacency adj = rot;
  erase(adj, a, b);
  erase(adj, b, a);
  const Vertex src[] = {0};
  const auto d = bfs_distances(adj, src);
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

// Outer face walks of length 0..2 in both directions, without repeats.
std::vector<std::vector<Vertex>> outer_paths(const PlaneGraph& g) {
  const auto walk = g.faces()[g.outer_face()].vertices();
  std::set<std::vector<Vertex>> seen;
  std::vector<std::vector<Vertex>> out;
  const int k = static_cast<int>(walk.size());
  for (int dir : {1, -1}) {
    for (int s = 0; s < k; ++s) {
      for (int len = 0; len <= 2; ++len) {
        std::vector<Vertex> p;
        for (int i = 0; i <= len; ++i) p.push_back(walk[((s + dir * i) % k + k) % k]);
        std::vector<Vertex> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        if (seen.insert(p).second) out.push_back(p);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Instance> basic_sweep(const SweepSpec& spec) {
  require_range(spec.max_n >= 3 && spec.palette >= 5 && spec.count >= 0, "sweep needs max_n >= 3 and palette >= 5");
  std::vector<Instance> out;
  for (std::uint64_t b = 0; static_cast<int>(out.size()) < spec.count; ++b) {
    Rng rng(derive_seed(spec.seed, b));
    const int n = rng.uniform(3, spec.max_n);
    Adjacency rot = triangulation_rotation(n, rng);
    flip_edges(rot, rng.uniform(0, n), rng);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : rot[v])
        if (v < w && !(v == 0 && w == 2)) edges.push_back({v, w});
    rng.shuffle(edges);
    const int deletions = rng.uniform(0, static_cast<int>(edges.size()) / 2);
    for (int i = 0, done = 0; i < static_cast<int>(edges.size()) && done < deletions; ++i) {
      auto [a, c] = edges[i];
      if (!connected_without(rot, a, c)) continue;
      erase(rot, a, c);
      erase(rot, c, a);
      ++done;
    }
    const PlaneGraph g(rot, triangle_outer());
    for (const auto& path : outer_paths(g)) {
      try {
        require_outer_path(g, path, 2);
      } catch (const StructuralError&) {
        continue;
      }
      for (int j = 0; j < spec.lists_per_path && static_cast<int>(out.size()) < spec.count; ++j) {
        Instance inst = make_planar_instance(g, ListAssignment(n), path);
        std::vector<bool> in_path(n, false);
        for (Vertex p : path) in_path[p] = true;
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        rng.shuffle(order);
        std::vector<int> size(n, 0);
        for (Vertex v : order) {
          if (in_path[v]) continue;
          if (!g.on_outer_face(v)) {
            size[v] = 5;
            continue;
          }
          bool three_ok = true;
          for (Vertex w : g.adjacency()[v]) three_ok = three_ok && size[w] != 3;
          size[v] = three_ok && rng.chance(0.75) ? 3 : rng.chance(0.8) ? 4 : 5;
        }
        for (Vertex v = 0; v < n; ++v)
          if (!in_path[v]) inst.lists.set(v, random_list(rng, size[v], spec.palette));
        color_path(inst, rng, std::min(spec.palette, 4));
        fix_common_neighbors(inst, rng, spec.palette);
        if (check_basic(g, path, inst.lists).ok()) out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

}  // namespace fivelist
