#include "fivelist/nearplanar.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace fivelist {

CrossingSpec canonical(const CrossingSpec& x) {
  // Cyclic order a, c, b, d; the four rotations of it as records.
  const CrossingSpec options[] = {
      {x.a, x.b, x.c, x.d}, {x.c, x.d, x.b, x.a}, {x.b, x.a, x.d, x.c}, {x.d, x.c, x.a, x.b}};
  return *std::min_element(std::begin(options), std::end(options),
                           [](const CrossingSpec& l, const CrossingSpec& r) { return l.a < r.a; });
}

Drawing::Drawing(PlaneGraph g) : planar_(std::move(g)), n_original_(planar_.num_vertices()) {
  index();
}

Drawing Drawing::planarize(const RawDrawing& raw) {
  const int n = static_cast<int>(raw.rotation.size());
  auto has = [&](Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n || v >= n) return false;
    const auto& r = raw.rotation[u];
    return std::find(r.begin(), r.end(), v) != r.end();
  };
  std::map<Edge, int> crossed;
  for (std::size_t i = 0; i < raw.crossings.size(); ++i) {
    const auto& x = raw.crossings[i];
    const std::string tag = "crossing " + std::to_string(x.a) + " " + std::to_string(x.b) + " " +
                            std::to_string(x.c) + " " + std::to_string(x.d);
    if (!has(x.a, x.b) || !has(x.c, x.d)) throw StructuralError(tag + ": edge not in the graph");
    const Edge e1 = make_edge(x.a, x.b);
    const Edge e2 = make_edge(x.c, x.d);
    if (e1 == e2) throw StructuralError(tag + ": an edge cannot cross itself");
    if (x.a == x.c || x.a == x.d || x.b == x.c || x.b == x.d) {
      throw StructuralError(tag + ": edges sharing an endpoint cannot cross");
    }
    for (const Edge& e : {e1, e2}) {
      if (crossed.contains(e)) {
        throw StructuralError(tag + ": edge " + std::to_string(e.first) + "-" +
                              std::to_string(e.second) + " is already crossed");
      }
      crossed[e] = static_cast<int>(i);
    }
  }

  Adjacency rot = raw.rotation;
  rot.resize(n + raw.crossings.size());
  auto replace = [&](Vertex at, Vertex old, Vertex now) {
    auto it = std::find(rot[at].begin(), rot[at].end(), old);
    if (it == rot[at].end()) throw StructuralError("rotation is not symmetric at " + std::to_string(at));
    *it = now;
  };
  for (std::size_t i = 0; i < raw.crossings.size(); ++i) {
    const auto& x = raw.crossings[i];
    const Vertex dummy = n + static_cast<int>(i);
    replace(x.a, x.b, dummy);
    replace(x.b, x.a, dummy);
    replace(x.c, x.d, dummy);
    replace(x.d, x.c, dummy);
    rot[dummy] = {x.a, x.c, x.b, x.d};
  }
  std::vector<Dart> outer;
  for (const Dart& d : raw.outer) {
    if (!has(d.from, d.to)) throw StructuralError("outer dart is not an edge of the graph");
    auto it = crossed.find(make_edge(d.from, d.to));
    outer.push_back(it == crossed.end() ? d : Dart{d.from, n + it->second});
  }

  Drawing out;
  try {
    out.planar_ = PlaneGraph(std::move(rot), std::move(outer));
  } catch (const StructuralError& e) {
    throw StructuralError(std::string("planarization is not a plane graph: ") + e.what());
  }
  out.n_original_ = n;
  out.index();
  return out;
}

Drawing planarize(const RawDrawing& raw) { return Drawing::planarize(raw); }

void Drawing::index() {
  const int total = planar_.num_vertices();
  crossings_.clear();
  for (Vertex x = n_original_; x < total; ++x) {
    const auto r = planar_.rotation(x);
    if (r.size() != 4) throw StructuralError("crossing vertex " + std::to_string(x) + " must have degree 4");
    crossings_.push_back({x, CrossingSpec{r[0], r[2], r[1], r[3]}});
  }
  original_.assign(n_original_, {});
  for (Vertex v = 0; v < n_original_; ++v) {
    for (Vertex w : planar_.rotation(v)) {
      if (w < n_original_) {
        original_[v].push_back(w);
        continue;
      }
      const auto& x = crossings_[w - n_original_].ends;
      Vertex far = -1;
      if (v == x.a) far = x.b;
      else if (v == x.b) far = x.a;
      else if (v == x.c) far = x.d;
      else if (v == x.d) far = x.c;
      if (far < 0 || far >= n_original_) {
        throw StructuralError("crossing vertex " + std::to_string(w) + " is not an edge interior");
      }
      original_[v].push_back(far);
    }
  }
}

RawDrawing Drawing::unplanarize() const {
  RawDrawing raw;
  raw.rotation = original_;
  for (const auto& x : crossings_) raw.crossings.push_back(x.ends);
  for (const Dart& d : planar_.outer_darts()) {
    Dart o = d;
    if (is_dummy(o.from)) o = planar_.next_in_face(o);
    if (is_dummy(o.to)) {
      const auto& x = crossings_[o.to - n_original_].ends;
      Vertex far = -1;
      if (o.from == x.a) far = x.b;
      else if (o.from == x.b) far = x.a;
      else if (o.from == x.c) far = x.d;
      else far = x.c;
      o.to = far;
    }
    raw.outer.push_back(o);
  }
  return raw;
}

bool Drawing::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_original_ || v >= n_original_) return false;
  const auto& r = original_[u];
  return std::find(r.begin(), r.end(), v) != r.end();
}

std::vector<Edge> Drawing::original_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_original_; ++u)
    for (Vertex w : original_[u])
      if (u < w) out.emplace_back(u, w);
  std::sort(out.begin(), out.end());
  return out;
}

int Drawing::crossing_of(Edge e) const {
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    if (crossings_[i].first() == e || crossings_[i].second() == e) return static_cast<int>(i);
  }
  return -1;
}

bool Drawing::is_crossed(Edge e) const { return crossing_of(e) >= 0; }

SubgraphRef Drawing::crossing_subgraph(int i) const {
  const auto& x = crossings_.at(i).ends;
  SubgraphRef ref;
  ref.vertices = {x.a, x.b, x.c, x.d};
  std::sort(ref.vertices.begin(), ref.vertices.end());
  ref.edges = {make_edge(x.a, x.b), make_edge(x.c, x.d)};
  std::sort(ref.edges.begin(), ref.edges.end());
  return ref;
}

std::vector<Vertex> Drawing::outer_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_original_; ++v)
    if (planar_.on_outer_face(v)) out.push_back(v);
  return out;
}

bool Drawing::on_outer_face(Vertex v) const { return planar_.on_outer_face(v); }

bool Drawing::edge_on_outer_face(Vertex u, Vertex v) const {
  if (!planar_.adjacent(u, v)) return false;
  return planar_.is_outer_face(planar_.face_of({u, v})) || planar_.is_outer_face(planar_.face_of({v, u}));
}

bool crossing_adjacent(const Drawing& d, Vertex u, Vertex v) {
  for (const auto& x : d.crossings()) {
    const auto& e = x.ends;
    const bool u1 = u == e.a || u == e.b;
    const bool u2 = u == e.c || u == e.d;
    const bool v1 = v == e.a || v == e.b;
    const bool v2 = v == e.c || v == e.d;
    if ((u1 && v2) || (u2 && v1)) return true;
  }
  return false;
}

std::vector<int> DrawingFace::crossing_ids() const {
  std::vector<int> out;
  for (const auto& it : items)
    if (it.is_crossing) out.push_back(it.id);
  return out;
}

std::vector<DrawingFace> drawing_faces(const Drawing& d) {
  std::vector<DrawingFace> out;
  const auto& g = d.planarization();
  for (int f = 0; f < static_cast<int>(g.faces().size()); ++f) {
    DrawingFace face;
    face.outer = g.is_outer_face(f);
    for (const Dart& dart : g.faces()[f].darts) {
      if (d.is_dummy(dart.from)) {
        face.items.push_back({true, dart.from - d.num_original()});
      } else {
        face.items.push_back({false, dart.from});
      }
    }
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace fivelist
