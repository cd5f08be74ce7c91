#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fivelist {

using Vertex = int;

/// A directed edge `from -> to` of a rotation system.
struct Dart {
  Vertex from = -1;
  Vertex to = -1;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Undirected edge, always stored with `first < second`.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Malformed input: asymmetric rotation, a walk that is not a cycle, and so on.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Adjacency = std::vector<std::vector<Vertex>>;

/// A face as the closed sequence of darts that bound it, starting at its
/// lexicographically least dart.
struct Face {
  std::vector<Dart> darts;

  std::size_t size() const { return darts.size(); }
  /// Boundary vertices in traversal order (repeats kept for non-cycle faces).
  std::vector<Vertex> vertices() const;
};

/// Vertex sequence; edges are implied by consecutive entries. A closed walk
/// does not repeat its first vertex at the end.
struct Walk {
  std::vector<Vertex> vertices;
  bool closed = false;

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Number of edges of a walk.
int length(const Walk& w);

/// Vertex and edge ids of a subgraph of some host graph.
struct SubgraphRef {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

struct SubEmbedding;

/// Simple plane graph given by a rotation system (counterclockwise neighbor
/// order at every vertex) and one outer dart per connected component that
/// has edges. The outer face of a component is the face to the left of its
/// outer dart. Faces are traced with next(u->v) = (v -> predecessor of u in
/// the rotation at v), so bounded faces come out counterclockwise.
///
/// Rotations are normalized to start at their smallest neighbor and each
/// outer dart is normalized to the least dart of its face, so two equal
/// embeddings compare equal.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// Throws StructuralError if the rotation is not symmetric, has loops or
  /// parallel edges, an outer dart is missing or invalid, or some component
  /// violates Euler's formula.
  explicit PlaneGraph(Adjacency rotation, std::vector<Dart> outer = {});

  /// Straight-line drawing: rotations come from the angular order of the
  /// neighbors and the outer face of each component is the clockwise one.
  static PlaneGraph from_positions(const std::vector<std::pair<double, double>>& points,
                                   const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(rot_.size()); }
  int num_edges() const { return static_cast<int>(twin_.size()) / 2; }
  int num_components() const { return num_components_; }

  std::span<const Vertex> rotation(Vertex v) const { return rot_[v]; }
  const Adjacency& adjacency() const { return rot_; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;
  int component(Vertex v) const { return component_[v]; }

  const std::vector<Face>& faces() const { return faces_; }
  /// Face to the left of dart d. Throws if d is not a dart of the graph.
  int face_of(Dart d) const;
  /// Next dart along the face to the left of d.
  Dart next_in_face(Dart d) const;

  /// Outer face ids, one per component with at least one edge.
  const std::vector<int>& outer_faces() const { return outer_faces_; }
  /// Outer face of the first component that has edges; -1 for edgeless graphs.
  int outer_face() const { return outer_faces_.empty() ? -1 : outer_faces_.front(); }
  const std::vector<Dart>& outer_darts() const { return outer_darts_; }
  bool is_outer_face(int f) const;
  /// Isolated vertices count as lying on the outer face.
  bool on_outer_face(Vertex v) const { return on_outer_[v]; }
  std::vector<Vertex> outer_vertices() const;
  /// For a 2-connected component, its outer face boundary as a cycle.
  Walk outer_cycle(int component = 0) const;

  /// Subgraph on the kept vertices minus `drop` edges, with the embedding
  /// and outer face inherited.
  SubEmbedding subgraph(const std::vector<bool>& keep_vertex,
                        const std::set<Edge>& drop = {}) const;
  SubEmbedding subgraph(const std::vector<Vertex>& vertices) const;
  /// Same embedding with a different outer face per component.
  PlaneGraph with_outer(std::vector<Dart> outer) const;

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.rot_ == b.rot_ && a.outer_darts_ == b.outer_darts_;
  }

 private:
  int dart_index(Dart d) const;

  Adjacency rot_;
  std::vector<int> offset_;
  std::vector<int> twin_;
  std::vector<int> dart_face_;
  std::vector<Face> faces_;
  std::vector<Dart> outer_darts_;
  std::vector<int> outer_faces_;
  std::vector<int> component_;
  std::vector<bool> on_outer_;
  int num_components_ = 0;
};

/// A subgraph together with the id maps to and from its host.
struct SubEmbedding {
  PlaneGraph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;  // -1 when the vertex was dropped
};

/// Faces of g; every dart lies on exactly one face.
std::vector<Face> trace_faces(const PlaneGraph& g);

/// V - E + F == 1 + C, counting the shared outer region once.
bool euler_consistent(const PlaneGraph& g);

/// Throws unless `k` is a cycle of g (closed, at least 3 distinct vertices,
/// consecutive vertices adjacent).
void require_cycle(const PlaneGraph& g, const Walk& k);

/// All k-chords of the cycle `k` of the given order (1 = chords). Each path
/// is reported once, oriented so that its first vertex is the smaller end.
std::vector<Walk> k_chords(const PlaneGraph& g, const Walk& k, int order);

struct CycleSplit {
  SubEmbedding interior;  // closed disc bounded by the cycle; its outer face is the cycle
  SubEmbedding exterior;  // everything outside the open disc
};

/// Int/Ext split relative to the designated outer face. Components not
/// containing the cycle are assigned to the exterior.
CycleSplit split_at_cycle(const PlaneGraph& g, const Walk& k);

/// Inside/outside classification of vertices and edges without building
/// the subgraphs. `inside_vertex` includes the cycle itself.
struct CycleSides {
  std::vector<bool> inside_vertex;
  std::vector<bool> outside_vertex;
  std::set<Edge> inside_edges;   // strictly inside (no cycle edges)
  std::set<Edge> outside_edges;  // strictly outside
  bool has_interior_vertex = false;
};
CycleSides cycle_sides(const PlaneGraph& g, const Walk& k);

/// The two Q-components of g, where `outer` is the outer face cycle and `q`
/// a k-chord of it. The first component uses the arc of `outer` that runs
/// forward from the last vertex of q back to its first vertex.
std::pair<SubEmbedding, SubEmbedding> q_components(const PlaneGraph& g, const Walk& outer,
                                                   const Walk& q);

/// BFS distances from a set of sources; unreachable vertices get -1.
std::vector<int> bfs_distances(const Adjacency& adj, std::span<const Vertex> sources);

/// Minimum distance between vertices of the two subgraphs; nullopt when no
/// path connects them.
std::optional<int> subgraph_distance(const Adjacency& adj, const SubgraphRef& h1,
                                     const SubgraphRef& h2);
std::optional<int> subgraph_distance(const PlaneGraph& g, const SubgraphRef& h1,
                                     const SubgraphRef& h2);

struct BlockTree {
  std::vector<Vertex> cut_vertices;              // sorted
  std::vector<std::vector<Vertex>> blocks;       // vertex sets, each sorted
  std::vector<std::vector<Edge>> block_edges;    // parallel to `blocks`
};

/// Biconnected components. Isolated vertices form single-vertex blocks.
BlockTree blocks_and_cuts(const Adjacency& adj);
BlockTree blocks_and_cuts(const PlaneGraph& g);

/// Connected components as sorted vertex lists.
std::vector<std::vector<Vertex>> connected_components(const Adjacency& adj);

}  // namespace fivelist
