#pragma once
// Reference implementations for the tests. Deliberately naive and written
// without the library's helpers so that they can serve as oracles.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fivelist/format.hpp"
#include "fivelist/harness.hpp"
#include "fivelist/nearplanar.hpp"
#include "fivelist/plane_graph.hpp"

namespace ref {

using namespace fivelist;

inline std::vector<std::vector<bool>> matrix(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) m[v][w] = true;
  return m;
}

// Own verifier: total, in-list, no monochromatic edge.
inline bool proper(const Adjacency& adj, const ListAssignment& l, const Coloring& c) {
  const int n = static_cast<int>(adj.size());
  if (static_cast<int>(c.size()) != n) return false;
  for (int v = 0; v < n; ++v) {
    if (std::find(l[v].begin(), l[v].end(), c[v]) == l[v].end()) return false;
    for (int w : adj[v])
      if (c[w] == c[v]) return false;
  }
  return true;
}

// Vertex-by-id backtracking, no look-ahead. `visit` returns false to stop.
inline long enumerate(const Adjacency& adj, const ListAssignment& l,
                      const std::function<bool(const Coloring&)>& visit) {
  const int n = static_cast<int>(adj.size());
  const auto m = matrix(adj);
  Coloring c(n, -1);
  long found = 0;
  bool stop = false;
  std::function<void(int)> go = [&](int v) {
    if (stop) return;
    if (v == n) {
      ++found;
      if (!visit(c)) stop = true;
      return;
    }
    for (int col : l[v]) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = !(m[v][u] && c[u] == col);
      if (!ok) continue;
      c[v] = col;
      go(v + 1);
      if (stop) return;
    }
    c[v] = -1;
  };
  go(0);
  return found;
}

inline bool colorable(const Adjacency& adj, const ListAssignment& l) {
  return enumerate(adj, l, [](const Coloring&) { return false; }) > 0;
}

// All-pairs shortest paths.
inline std::vector<std::vector<int>> distances(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int w : adj[v]) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int set_distance(const std::vector<std::vector<int>>& d, const std::vector<int>& a,
                        const std::vector<int>& b) {
  int best = 1 << 20;
  for (int x : a)
    for (int y : b) best = std::min(best, d[x][y]);
  return best;
}

inline ListAssignment uniform_lists(int n, ColorList l) { return ListAssignment(std::vector<ColorList>(n, l)); }

inline Adjacency complete(int n) {
  Adjacency adj(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (v != w) adj[v].push_back(w);
  return adj;
}

inline Adjacency cycle(int n) {
  Adjacency adj(n);
  for (int v = 0; v < n; ++v) adj[v] = {(v + n - 1) % n, (v + 1) % n};
  return adj;
}

// Counterclockwise rotation from coordinates, edges may cross.
inline Adjacency angular(const std::vector<std::pair<double, double>>& pts, const std::vector<Edge>& edges) {
  Adjacency rot(pts.size());
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (std::size_t v = 0; v < pts.size(); ++v) {
    auto ang = [&](int w) { return std::atan2(pts[w].second - pts[v].second, pts[w].first - pts[v].first); };
    std::sort(rot[v].begin(), rot[v].end(), [&](int x, int y) { return ang(x) < ang(y); });
  }
  return rot;
}

// w x h grid drawing; each square listed in `crossed` (by its lower left
// vertex) gets both diagonals, crossing each other. Vertex (col, row) has id
// row * w + col.
inline RawDrawing grid_drawing(int w, int h, const std::vector<int>& crossed) {
  std::vector<std::pair<double, double>> pts;
  for (int row = 0; row < h; ++row)
    for (int col = 0; col < w; ++col) pts.push_back({double(col), double(row)});
  std::vector<Edge> edges;
  for (int row = 0; row < h; ++row)
    for (int col = 0; col < w; ++col) {
      const int v = row * w + col;
      if (col + 1 < w) edges.push_back({v, v + 1});
      if (row + 1 < h) edges.push_back({v, v + w});
    }
  RawDrawing raw;
  for (int s : crossed) {
    edges.push_back(make_edge(s, s + w + 1));
    edges.push_back(make_edge(s + 1, s + w));
    raw.crossings.push_back({s, s + w + 1, s + 1, s + w});
  }
  raw.rotation = angular(pts, edges);
  raw.outer = {{1, 0}};
  return raw;
}

// Crossing of straight segments ab and cd, written so that a, c, b, d run
// counterclockwise around the crossing point.
inline CrossingSpec oriented(const std::vector<std::pair<double, double>>& pts, int a, int b, int c, int d) {
  const auto [ax, ay] = pts[a];
  const auto [bx, by] = pts[b];
  const auto [cx, cy] = pts[c];
  const auto [dx, dy] = pts[d];
  const double den = (bx - ax) * (dy - cy) - (by - ay) * (dx - cx);
  const double t = ((cx - ax) * (dy - cy) - (cy - ay) * (dx - cx)) / den;
  const double px = ax + t * (bx - ax), py = ay + t * (by - ay);
  // c is counterclockwise from a iff the cross product is positive.
  const double cr = (ax - px) * (cy - py) - (ay - py) * (cx - px);
  return cr > 0 ? CrossingSpec{a, b, c, d} : CrossingSpec{a, b, d, c};
}

// K6 as a triangular prism whose three quadrilaterals get both diagonals.
inline RawDrawing k6_drawing() {
  const std::vector<std::pair<double, double>> pts{{0, 10}, {-8.66, -5}, {8.66, -5}, {0, 2}, {-1.73, -1}, {1.73, -1}};
  std::vector<Edge> edges;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) edges.push_back({u, v});
  RawDrawing raw;
  raw.rotation = angular(pts, edges);
  raw.crossings = {oriented(pts, 0, 4, 1, 3), oriented(pts, 1, 5, 2, 4), oriented(pts, 2, 3, 0, 5)};
  raw.outer = {{1, 0}};
  return raw;
}

inline RawDrawing ladder(int len, const std::vector<int>& crossed) { return grid_drawing(len, 2, crossed); }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') out += line + "\n";
  return out;
}

inline int count_of(const std::string& hay, const std::string& needle) {
  int k = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++k;
  return k;
}

}  // namespace ref
