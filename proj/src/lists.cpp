#include "fivelist/lists.hpp"

#include <algorithm>

namespace fivelist {

ColorList normalize_list(ColorList list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

bool list_contains(const ColorList& list, Color c) {
  return std::binary_search(list.begin(), list.end(), c);
}

ColorList list_minus(const ColorList& list, const ColorList& removed) {
  ColorList out;
  std::set_difference(list.begin(), list.end(), removed.begin(), removed.end(),
                      std::back_inserter(out));
  return out;
}

ColorList list_union(const ColorList& a, const ColorList& b) {
  ColorList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ListAssignment::ListAssignment(std::vector<ColorList> lists) : lists_(std::move(lists)) {
  for (auto& l : lists_) l = normalize_list(std::move(l));
}

bool ListAssignment::remove(Vertex v, Color c) {
  auto& l = lists_[v];
  auto it = std::lower_bound(l.begin(), l.end(), c);
  if (it == l.end() || *it != c) return false;
  l.erase(it);
  return true;
}

ListAssignment ListAssignment::restricted(const std::vector<Vertex>& to_parent) const {
  ListAssignment out(static_cast<int>(to_parent.size()));
  for (std::size_t i = 0; i < to_parent.size(); ++i) out.lists_[i] = lists_[to_parent[i]];
  return out;
}

std::optional<std::string> coloring_problem(const Adjacency& adj, const ListAssignment& lists,
                                            const Coloring& c) {
  if (c.size() != adj.size()) return "coloring has wrong length";
  for (Vertex v = 0; v < static_cast<Vertex>(adj.size()); ++v) {
    if (!lists.contains(v, c[v])) {
      return "vertex " + std::to_string(v) + " has color " + std::to_string(c[v]) +
             " outside its list";
    }
    for (Vertex w : adj[v]) {
      if (v < w && c[v] == c[w]) {
        return "edge " + std::to_string(v) + "-" + std::to_string(w) + " is monochromatic";
      }
    }
  }
  return std::nullopt;
}

}  // namespace fivelist
