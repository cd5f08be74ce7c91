#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fivelist/lists.hpp"
#include "fivelist/nearplanar.hpp"
#include "fivelist/plane_graph.hpp"

namespace fivelist {

/// Full input of the near-planar statement: a drawing, a precolored path on
/// its outer face, the sets N and M, and the lists.
struct Instance {
  Drawing drawing;
  std::vector<Vertex> path;
  std::vector<Vertex> n_set;  // sorted
  std::vector<Edge> m_set;    // sorted, normalized
  ListAssignment lists;

  int num_vertices() const { return drawing.num_original(); }
  const Adjacency& adjacency() const { return drawing.original_adjacency(); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Build an instance over a crossing-free plane graph.
Instance make_planar_instance(PlaneGraph g, ListAssignment lists, std::vector<Vertex> path = {},
                              std::vector<Vertex> n_set = {}, std::vector<Edge> m_set = {});

/// One failed condition together with the vertices/edges that witness it.
struct Violation {
  std::string condition;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<SubgraphRef> parts;  // distance failures: the two subgraphs
  int measured = -1;               // distance failures: measured distance
  int threshold = -1;              // distance failures: required distance
  std::string detail;
};

struct ValidityReport {
  std::vector<std::string> conditions;  // every condition that was evaluated
  std::vector<Violation> violations;    // all failures, not just the first

  bool ok() const { return violations.empty(); }
  bool passed(std::string_view condition) const;
  std::vector<const Violation*> failures(std::string_view condition) const;
  void merge(const ValidityReport& other);
};

enum class SpecialKind { CrossingPair, MiddleEdge, NVertex, MEdge };

const char* to_string(SpecialKind k);

struct SpecialSubgraph {
  SpecialKind kind;
  SubgraphRef ref;
  int rank = 0;
};

/// Rank of each kind of special subgraph.
int special_rank(SpecialKind k);
/// Minimum distance two special subgraphs of the given kinds must keep.
int required_distance(SpecialKind a, SpecialKind b);

/// Throws StructuralError unless `path` is a simple path of g, of length at
/// most `max_length`, running along the outer face.
void require_outer_path(const PlaneGraph& g, const std::vector<Vertex>& path, int max_length);
/// Same for a drawing; additionally no edge of the path may be crossed.
void require_outer_path(const Drawing& d, const std::vector<Vertex>& path, int max_length);

/// The six hypotheses of the planar statement with a precolored path of
/// length at most two: conditions "i" .. "vi".
ValidityReport check_basic(const PlaneGraph& g, const std::vector<Vertex>& path,
                           const ListAssignment& lists);

/// Hypotheses of Thomassen's theorem with precolored edge xy.
ValidityReport check_thomassen(const PlaneGraph& g, const ListAssignment& lists, Vertex x, Vertex y);

std::vector<SpecialSubgraph> special_subgraphs(const Instance& inst);

/// Every pair of distinct special subgraphs keeps distance at least
/// r(H1) + r(H2) + 7 in the drawn graph.
ValidityReport check_distant(const Instance& inst);

/// Stand-in for condition (O); the catalog of small non-colorable
/// configurations is not modeled, so the default accepts everything.
using ObstructionPredicate = std::function<bool(const Instance&)>;

/// Conditions "S", "N", "M", "P", "T", "C" and, when a predicate is given, "O".
ValidityReport check_valid(const Instance& inst, const ObstructionPredicate& obstructions = {});

/// Crossing pairs at distance >= 15, crossings and N at >= 13, N pairs at
/// >= 11, lists of size 4 on N and at least 5 elsewhere.
ValidityReport check_main0(const Drawing& drawing, const std::vector<Vertex>& n_set,
                           const ListAssignment& lists);

/// Planar drawing, N pairwise at distance >= 11, 4-lists on N, 5+ elsewhere.
ValidityReport check_mainalt(const Drawing& drawing, const std::vector<Vertex>& n_set,
                             const ListAssignment& lists);

/// At most `max_crossings` crossings and every list of size at least 5.
ValidityReport check_few_crossings(const Drawing& drawing, const ListAssignment& lists,
                                   int max_crossings);

/// Statements whose hypotheses can be checked on an Instance.
enum class Theorem { Thomassen, Basic, Main0, TwoCrossings, MainAlt, OneCrossing, Valid };

const char* to_string(Theorem t);
/// Accepts thomassen, basic, main0, two-crossings, mainalt (or n-set),
/// one-crossing, valid.
std::optional<Theorem> theorem_from_name(std::string_view name);

/// Hypotheses of the named statement. Thomassen uses the path as the
/// precolored edge; Valid combines check_valid and check_distant.
ValidityReport check_theorem(const Instance& inst, Theorem t);

/// Re-evaluates the failed condition on the witness alone.
bool witness_reproduces(const PlaneGraph& g, const std::vector<Vertex>& path,
                        const ListAssignment& lists, const Violation& v);
bool witness_reproduces(const Instance& inst, const Violation& v);

}  // namespace fivelist
