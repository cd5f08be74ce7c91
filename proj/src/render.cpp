#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "fivelist/harness.hpp"
#include "fivelist/render.hpp"

namespace fivelist {

const char* fill_for_color(Color c) {
  static const char* kFills[] = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231",
                                 "#911eb4", "#42d4f4", "#f032e6", "#bfef45", "#fabed4"};
  if (c == kUncolored) return "#ffffff";
  return kFills[((c % 10) + 10) % 10];
}

namespace {

using Point = std::pair<double, double>;

bool tutte_applies(const PlaneGraph& g) {
  if (g.num_vertices() < 3 || g.num_components() != 1) return false;
  const BlockTree bt = blocks_and_cuts(g);
  return bt.blocks.size() == 1;
}

// Outer face pinned to a regular polygon, everything else at the average of
// its neighbors.
std::vector<Point> tutte_layout(const PlaneGraph& g) {
  const int n = g.num_vertices();
  std::vector<Point> pos(n, {0, 0});
  std::vector<bool> fixed(n, false);
  const auto outer = g.faces()[g.outer_face()].vertices();
  const int m = static_cast<int>(outer.size());
  for (int k = 0; k < m; ++k) {
    // The outer face is traced clockwise.
    const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * k / m;
    pos[outer[k]] = {std::cos(a), std::sin(a)};
    fixed[outer[k]] = true;
  }
  for (int iter = 0; iter < 20000; ++iter) {
    double moved = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (fixed[v] || g.degree(v) == 0) continue;
      Point s{0, 0};
      for (Vertex w : g.rotation(v)) s.first += pos[w].first, s.second += pos[w].second;
      const Point p{s.first / g.degree(v), s.second / g.degree(v)};
      moved = std::max(moved, std::abs(p.first - pos[v].first) + std::abs(p.second - pos[v].second));
      pos[v] = p;
    }
    if (moved < 1e-10) break;
  }
  return pos;
}

// Fruchterman-Reingold from seeded random positions.
std::vector<Point> spring_layout(const PlaneGraph& g) {
  const int n = g.num_vertices();
  Rng rng(1);
  std::vector<Point> pos(n);
  for (auto& p : pos) {
    p.first = static_cast<double>(rng.below(1 << 20)) / (1 << 20);
    p.second = static_cast<double>(rng.below(1 << 20)) / (1 << 20);
  }
  const double k = 1.0 / std::sqrt(std::max(n, 1));
  double temp = 0.1;
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Point> disp(n, {0, 0});
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u = 0; u < n; ++u) {
        if (u == v) continue;
        const double dx = pos[v].first - pos[u].first, dy = pos[v].second - pos[u].second;
        const double d = std::max(1e-6, std::hypot(dx, dy));
        disp[v].first += dx / d * k * k / d;
        disp[v].second += dy / d * k * k / d;
      }
      for (Vertex u : g.rotation(v)) {
        const double dx = pos[v].first - pos[u].first, dy = pos[v].second - pos[u].second;
        const double d = std::max(1e-6, std::hypot(dx, dy));
        disp[v].first -= dx / d * d * d / k;
        disp[v].second -= dy / d * d * d / k;
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      const double d = std::max(1e-9, std::hypot(disp[v].first, disp[v].second));
      pos[v].first += disp[v].first / d * std::min(d, temp);
      pos[v].second += disp[v].second / d * std::min(d, temp);
    }
    temp *= 0.98;
  }
  return pos;
}

}  // namespace

std::string render_svg(const Instance& inst, const std::optional<Coloring>& coloring) {
  const Drawing& d = inst.drawing;
  const PlaneGraph& g = d.planarization();
  const int n = d.num_original();
  std::vector<Point> pos = tutte_applies(g) ? tutte_layout(g) : spring_layout(g);

  constexpr double kSize = 600, kMargin = 40;
  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  if (!pos.empty()) {
    lo_x = hi_x = pos[0].first;
    lo_y = hi_y = pos[0].second;
    for (auto [x, y] : pos) {
      lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
    }
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  auto sx = [&](Vertex v) { return kMargin + (pos[v].first - lo_x) / span * (kSize - 2 * kMargin); };
  // SVG y grows downwards.
  auto sy = [&](Vertex v) { return kSize - kMargin - (pos[v].second - lo_y) / span * (kSize - 2 * kMargin); };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Edge& e : d.original_edges()) {
    const int x = d.crossing_of(e);
    if (x < 0) {
      const bool m = std::binary_search(inst.m_set.begin(), inst.m_set.end(), e);
      out << "<line class=\"edge" << (m ? " m" : "") << "\" x1=\"" << sx(e.first) << "\" y1=\"" << sy(e.first)
          << "\" x2=\"" << sx(e.second) << "\" y2=\"" << sy(e.second) << "\" stroke=\"black\" stroke-width=\""
          << (m ? 3 : 1.5) << "\"/>\n";
    } else {
      const Vertex mid = d.crossings()[x].dummy;
      out << "<polyline class=\"edge crossed\" points=\"" << sx(e.first) << ',' << sy(e.first) << ' ' << sx(mid)
          << ',' << sy(mid) << ' ' << sx(e.second) << ',' << sy(e.second)
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const Crossing& x : d.crossings()) {
    out << "<rect class=\"crossing\" x=\"" << sx(x.dummy) - 4 << "\" y=\"" << sy(x.dummy) - 4
        << "\" width=\"8\" height=\"8\" fill=\"none\" stroke=\"red\"/>\n";
  }
  for (Vertex v = 0; v < n; ++v) {
    const Color c = coloring && v < static_cast<Vertex>(coloring->size()) ? (*coloring)[v] : kUncolored;
    const bool on_path = std::find(inst.path.begin(), inst.path.end(), v) != inst.path.end();
    const bool in_n = std::binary_search(inst.n_set.begin(), inst.n_set.end(), v);
    out << "<circle class=\"vertex\" data-vertex=\"" << v << "\" data-color=\"" << c << "\" cx=\"" << sx(v)
        << "\" cy=\"" << sy(v) << "\" r=\"11\" fill=\"" << fill_for_color(c) << "\" stroke=\"black\" stroke-width=\""
        << (on_path ? 3 : 1) << '"' << (in_n ? " stroke-dasharray=\"3,2\"" : "") << "/>\n";
    out << "<text x=\"" << sx(v) << "\" y=\"" << sy(v) + 4 << "\" font-size=\"10\" text-anchor=\"middle\">" << v
        << "</text>\n";
    const int size = v < inst.lists.size() ? inst.lists.list_size(v) : 0;
    out << "<text class=\"list-size\" x=\"" << sx(v) + 13 << "\" y=\"" << sy(v) - 9 << "\" font-size=\"9\">" << size
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace fivelist
