#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fivelist/lists.hpp"
#include "fivelist/nearplanar.hpp"
#include "fivelist/plane_graph.hpp"
#include "fivelist/validity.hpp"

namespace fivelist {

enum class Outcome { Colored, Uncolorable, HypothesisViolation };

const char* to_string(Outcome o);

struct ColoringResult {
  Outcome outcome = Outcome::Uncolorable;
  Coloring coloring;        // total when outcome == Colored
  ValidityReport report;    // failed hypotheses when outcome == HypothesisViolation
  std::map<std::string, int> steps;  // reductions taken, by name ("chord", "X2", ...)
  bool ok() const { return outcome == Outcome::Colored; }
};

/// A reduction step failed although the hypotheses held. This is a bug;
/// `dump` is the offending sub-instance in the text file format.
class InternalError : public std::logic_error {
 public:
  InternalError(const std::string& what, std::string dump)
      : std::logic_error(what), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

/// Precolored edge xy on the outer face, 3-lists on the outer face and
/// 5-lists inside.
ColoringResult color_thomassen(const PlaneGraph& g, const ListAssignment& lists, Vertex x, Vertex y);

/// Precolored path of length at most two on the outer face, conditions
/// (i)..(vi) of check_basic.
ColoringResult color_basic(const PlaneGraph& g, const std::vector<Vertex>& path,
                           const ListAssignment& lists);

/// Exactly one crossing and lists of size at least five. The crossing is
/// replaced by a 4-cycle that becomes the outer face, three of its vertices
/// are precolored and color_basic finishes the job.
ColoringResult color_one_crossing(const Drawing& drawing, const ListAssignment& lists);

/// Thrown by reduce_by_partial_coloring when phi does not meet its
/// preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// G - dom(phi) with the lists L_phi. `r[z]` is the set R_z that was added
/// back to the list of z (indexed by parent ids).
struct ReducedInstance {
  Adjacency adjacency;              // of G - dom(phi), child ids
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;  // -1 for colored vertices
  ListAssignment lists;             // L_phi, child ids
  std::vector<ColorList> r;         // R_z, parent ids
};

/// `phi` is a partial coloring indexed by vertex (kUncolored = not in the
/// domain). Requires phi proper and inside the lists, no color of phi in the
/// list of an adjacent path vertex, and singleton lists on uncolored path
/// vertices.
ReducedInstance reduce_by_partial_coloring(const Adjacency& adj, const ListAssignment& lists,
                                           const std::vector<Vertex>& path, const Coloring& phi);

/// Any L_phi-coloring psi of the reduced graph, combined with phi.
Coloring compose(const ReducedInstance& red, const Coloring& phi, const Coloring& psi);

enum class XRule { X1, X2, X3, X4a, X4b, X5, X6 };

const char* to_string(XRule r);

/// Local view of the outer face F = p2 p1 p0 v1 v2 v3 v4 ... used to pick X.
struct XContext {
  std::array<Vertex, 5> ids{};      // p0, v1, v2, v3, v4
  std::array<ColorList, 5> lists;   // their lists, same order
  bool v123_common_neighbor = false;
  bool v12_crossing_adjacent = false;
};

struct XSelection {
  std::vector<Vertex> x_set;  // in order v1, v2, v3 restricted to X
  Coloring colors;            // parallel to x_set; kUncolored for v2 under X4b
  XRule rule = XRule::X1;
};

/// First applicable rule in the order X1, X2, X3, X4a, X4b, X5, X6, with the
/// smallest admissible colors. Throws std::invalid_argument when no rule
/// applies.
XSelection select_x(const XContext& ctx);

}  // namespace fivelist
