#pragma once

#include <vector>

#include "fivelist/plane_graph.hpp"

namespace fivelist {

/// Edge ab crosses edge cd; around the crossing point the four half-edges
/// appear counterclockwise as a, c, b, d.
struct CrossingSpec {
  Vertex a = -1, b = -1, c = -1, d = -1;
  friend auto operator<=>(const CrossingSpec&, const CrossingSpec&) = default;
};

/// The same crossing with the cyclic order rotated to start at its smallest
/// endpoint.
CrossingSpec canonical(const CrossingSpec& x);

struct Crossing {
  Vertex dummy = -1;
  CrossingSpec ends;
  Edge first() const { return make_edge(ends.a, ends.b); }
  Edge second() const { return make_edge(ends.c, ends.d); }
};

/// Rotation system of a drawing in which some edges cross, with crossed
/// edges listed at their real endpoints.
struct RawDrawing {
  Adjacency rotation;
  std::vector<CrossingSpec> crossings;
  std::vector<Dart> outer;  // darts between original vertices

  friend bool operator==(const RawDrawing&, const RawDrawing&) = default;
};

/// A drawing, stored as its planarization: original vertices keep ids
/// 0..n-1 and crossing i becomes the degree-4 vertex n+i.
class Drawing {
 public:
  Drawing() = default;
  /// Crossing-free drawing.
  explicit Drawing(PlaneGraph g);

  /// Replaces each crossing by a dummy vertex. Throws StructuralError for
  /// unknown edges, an edge crossing itself or an edge sharing an endpoint
  /// with its partner, an edge crossed more than once, or a result that is
  /// not a plane embedding.
  static Drawing planarize(const RawDrawing& raw);
  RawDrawing unplanarize() const;

  int num_original() const { return n_original_; }
  const PlaneGraph& planarization() const { return planar_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  bool is_dummy(Vertex v) const { return v >= n_original_; }

  /// Adjacency of the drawn graph, crossed edges restored.
  const Adjacency& original_adjacency() const { return original_; }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> original_edges() const;
  bool is_crossed(Edge e) const;
  /// Index of the crossing on edge e, or -1.
  int crossing_of(Edge e) const;

  /// G_x: the two crossed edges of crossing i and their endpoints.
  SubgraphRef crossing_subgraph(int i) const;
  /// Original vertices on the outer face boundary (isolated ones included).
  std::vector<Vertex> outer_vertices() const;
  bool on_outer_face(Vertex v) const;
  /// Whether edge uv (uncrossed) borders the outer face.
  bool edge_on_outer_face(Vertex u, Vertex v) const;

  friend bool operator==(const Drawing& a, const Drawing& b) {
    return a.planar_ == b.planar_ && a.n_original_ == b.n_original_;
  }

 private:
  void index();

  PlaneGraph planar_;
  int n_original_ = 0;
  std::vector<Crossing> crossings_;
  Adjacency original_;
};

Drawing planarize(const RawDrawing& raw);

/// True iff u and v lie on the two different edges of some crossing.
bool crossing_adjacent(const Drawing& d, Vertex u, Vertex v);

/// A face of a drawing; items are original vertices or crossings.
struct DrawingFace {
  struct Item {
    bool is_crossing = false;
    int id = -1;  // vertex id, or crossing index
    friend bool operator==(const Item&, const Item&) = default;
  };
  std::vector<Item> items;
  bool outer = false;

  std::vector<int> crossing_ids() const;
};

std::vector<DrawingFace> drawing_faces(const Drawing& d);

}  // namespace fivelist
