#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fivelist/lists.hpp"
#include "fivelist/plane_graph.hpp"
#include "fivelist/validity.hpp"

namespace fivelist {

enum class SearchResult { Colorable, Uncolorable, Limit };

const char* to_string(SearchResult r);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
  double seconds = 0;
  SearchResult result = SearchResult::Uncolorable;
};

struct ExactResult {
  SearchResult result = SearchResult::Uncolorable;
  Coloring coloring;  // filled when colorable
  SearchStats stats;
};

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

/// Backtracking with forward checking; the next vertex is the one with the
/// fewest live colors (ties by id), colors are tried in increasing order.
ExactResult solve_exact(const Adjacency& adj, const ListAssignment& lists,
                        std::uint64_t node_limit = kDefaultNodeLimit);

/// Calls `visit` on every proper L-coloring until it returns false. Returns
/// the search statistics; result is Limit if the node budget ran out.
SearchStats for_each_coloring(const Adjacency& adj, const ListAssignment& lists,
                              const std::function<bool(const Coloring&)>& visit,
                              std::uint64_t node_limit = kDefaultNodeLimit);

class LimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ChoosabilityOptions {
  int max_vertices = 10;
  int max_palette = -1;  // -1: twice the list size
  std::uint64_t node_limit = kDefaultNodeLimit;
};

struct ChoosabilityResult {
  bool choosable = true;
  std::optional<ListAssignment> witness;  // a bad assignment when not choosable
  std::uint64_t assignments = 0;          // canonical assignments examined
};

/// Tries every assignment of k-subsets of {0..palette-1}, up to renaming
/// colors. Throws LimitError when the graph or palette exceed the options.
ChoosabilityResult is_choosable(const Adjacency& adj, int k, int palette,
                                const ChoosabilityOptions& opts = {});

struct BatchReport {
  int total = 0;
  int colorable = 0;
  int uncolorable = 0;
  int skipped = 0;
  int limit = 0;
  std::vector<int> falsifications;  // indices of hypothesis-passing uncolorable instances
  std::vector<int> skipped_indices;
  std::vector<ValidityReport> skipped_reports;
  SearchStats stats;  // nodes and backtracks summed, seconds summed
};

/// Runs the oracle on every instance that passes the hypotheses of `which`;
/// the rest are skipped. `workers` = 0 picks the hardware concurrency.
BatchReport verify_theorem_batch(const std::vector<Instance>& instances, Theorem which,
                                 std::uint64_t node_limit = kDefaultNodeLimit, int workers = 0);

}  // namespace fivelist
