#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fivelist/plane_graph.hpp"

namespace fivelist {

using Color = int;
/// Sorted, duplicate-free set of admissible colors.
using ColorList = std::vector<Color>;

inline constexpr Color kUncolored = -1;

/// Total or partial coloring indexed by vertex; kUncolored marks gaps.
using Coloring = std::vector<Color>;

ColorList normalize_list(ColorList list);
bool list_contains(const ColorList& list, Color c);
ColorList list_minus(const ColorList& list, const ColorList& removed);
ColorList list_union(const ColorList& a, const ColorList& b);

/// Map vertex -> list of admissible colors; every vertex of the host has an
/// entry.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(int n) : lists_(n) {}
  explicit ListAssignment(std::vector<ColorList> lists);

  int size() const { return static_cast<int>(lists_.size()); }
  const ColorList& operator[](Vertex v) const { return lists_[v]; }
  int list_size(Vertex v) const { return static_cast<int>(lists_[v].size()); }
  bool contains(Vertex v, Color c) const { return list_contains(lists_[v], c); }

  void set(Vertex v, ColorList list) { lists_[v] = normalize_list(std::move(list)); }
  /// Returns true when c was present.
  bool remove(Vertex v, Color c);

  /// Lists of the given vertices, in that order.
  ListAssignment restricted(const std::vector<Vertex>& to_parent) const;

  const std::vector<ColorList>& lists() const { return lists_; }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<ColorList> lists_;
};

/// Independent check that `c` is a total proper coloring from the lists.
/// Returns a description of the first problem, or nullopt.
std::optional<std::string> coloring_problem(const Adjacency& adj, const ListAssignment& lists,
                                            const Coloring& c);

inline bool is_proper_list_coloring(const Adjacency& adj, const ListAssignment& lists,
                                    const Coloring& c) {
  return !coloring_problem(adj, lists, c).has_value();
}

}  // namespace fivelist
