#include "fivelist/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace fivelist {

const char* to_string(SearchResult r) {
  switch (r) {
    case SearchResult::Colorable: return "COLORABLE";
    case SearchResult::Uncolorable: return "UNCOLORABLE";
    case SearchResult::Limit: return "LIMIT";
  }
  return "?";
}

namespace {

// Colors are renamed to 0..k-1 so that live lists fit in word bitsets.
class Search {
 public:
  Search(const Adjacency& adj, const ListAssignment& lists, std::uint64_t limit,
         const std::function<bool(const Coloring&)>& visit)
      : adj_(adj), n_(static_cast<int>(adj.size())), limit_(limit), visit_(visit) {
    for (Vertex v = 0; v < n_; ++v)
      for (Color c : lists[v]) palette_.push_back(c);
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
    words_ = std::max<int>(1, (static_cast<int>(palette_.size()) + 63) / 64);
    live_.assign(static_cast<std::size_t>(n_) * words_, 0);
    count_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (Color c : lists[v]) {
        const int i = static_cast<int>(std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin());
        live_[v * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
      }
      count_[v] = lists.list_size(v);
    }
    color_.assign(n_, -1);
  }

  SearchStats run() {
    const auto start = std::chrono::steady_clock::now();
    dfs(0);
    stats_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (aborted_) stats_.result = SearchResult::Limit;
    else stats_.result = found_ ? SearchResult::Colorable : SearchResult::Uncolorable;
    return stats_;
  }

 private:
  bool has(Vertex v, int c) const { return (live_[v * words_ + c / 64] >> (c % 64)) & 1U; }
  void clear(Vertex v, int c) {
    live_[v * words_ + c / 64] &= ~(std::uint64_t{1} << (c % 64));
    --count_[v];
  }
  void set(Vertex v, int c) {
    live_[v * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
    ++count_[v];
  }

  // Returns false when the search must stop.
  bool dfs(int assigned) {
    if (++stats_.nodes > limit_) {
      aborted_ = true;
      return false;
    }
    if (assigned == n_) {
      found_ = true;
      Coloring out(n_);
      for (Vertex v = 0; v < n_; ++v) out[v] = palette_[color_[v]];
      return visit_(out);
    }
    Vertex v = -1;
    for (Vertex u = 0; u < n_; ++u)
      if (color_[u] < 0 && (v < 0 || count_[u] < count_[v])) v = u;
    std::vector<Vertex> touched;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = live_[v * words_ + w];
      while (bits) {
        const int c = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        color_[v] = c;
        touched.clear();
        bool wipeout = false;
        for (Vertex u : adj_[v]) {
          if (color_[u] < 0 && has(u, c)) {
            clear(u, c);
            touched.push_back(u);
            wipeout = wipeout || count_[u] == 0;
          }
        }
        const bool go_on = wipeout || dfs(assigned + 1);
        for (Vertex u : touched) set(u, c);
        color_[v] = -1;
        if (!go_on) return false;
      }
    }
    ++stats_.backtracks;
    return true;
  }

  const Adjacency& adj_;
  int n_;
  std::uint64_t limit_;
  const std::function<bool(const Coloring&)>& visit_;
  std::vector<Color> palette_;
  int words_ = 1;
  std::vector<std::uint64_t> live_;
  std::vector<int> count_;
  std::vector<int> color_;
  SearchStats stats_;
  bool aborted_ = false;
  bool found_ = false;
};

}  // namespace

SearchStats for_each_coloring(const Adjacency& adj, const ListAssignment& lists,
                              const std::function<bool(const Coloring&)>& visit, std::uint64_t node_limit) {
  Search s(adj, lists, node_limit, visit);
  return s.run();
}

ExactResult solve_exact(const Adjacency& adj, const ListAssignment& lists, std::uint64_t node_limit) {
  ExactResult res;
  const std::function<bool(const Coloring&)> keep_first = [&](const Coloring& c) {
    res.coloring = c;
    return false;
  };
  Search s(adj, lists, node_limit, keep_first);
  res.stats = s.run();
  // Stopping at the first coloring is not a resource limit.
  if (!res.coloring.empty() || adj.empty()) res.stats.result = SearchResult::Colorable;
  res.result = res.stats.result;
  return res;
}

ChoosabilityResult is_choosable(const Adjacency& adj, int k, int palette, const ChoosabilityOptions& opts) {
  const int n = static_cast<int>(adj.size());
  const int max_palette = opts.max_palette < 0 ? 2 * k : opts.max_palette;
  if (k < 1) throw LimitError("list size must be positive");
  if (n > opts.max_vertices) {
    throw LimitError("graph has " + std::to_string(n) + " vertices; the limit is " +
                     std::to_string(opts.max_vertices));
  }
  if (palette > max_palette) {
    throw LimitError("palette of " + std::to_string(palette) + " colors exceeds the limit of " +
                     std::to_string(max_palette));
  }
  ChoosabilityResult res;
  if (palette < k) throw LimitError("palette is smaller than the list size");

  std::vector<ColorList> lists(n);
  // Lists use old colors 0..used-1 plus the next j unused ones, so each
  // assignment is enumerated once up to renaming colors.
  std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
    if (v == n) {
      ++res.assignments;
      const ListAssignment la(lists);
      const ExactResult r = solve_exact(adj, la, opts.node_limit);
      if (r.result == SearchResult::Limit) throw LimitError("search node limit reached");
      if (r.result == SearchResult::Uncolorable) {
        res.choosable = false;
        res.witness = la;
        return false;
      }
      return true;
    }
    for (int j = 0; j <= std::min(k, palette - used); ++j) {
      const int take = k - j;
      if (take > used) continue;
      std::vector<int> idx(take);
      for (int i = 0; i < take; ++i) idx[i] = i;
      while (true) {
        ColorList l;
        for (int i : idx) l.push_back(i);
        for (int i = 0; i < j; ++i) l.push_back(used + i);
        lists[v] = l;
        if (!rec(v + 1, used + j)) return false;
        int i = take - 1;
        while (i >= 0 && idx[i] == used - take + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int t = i + 1; t < take; ++t) idx[t] = idx[t - 1] + 1;
      }
    }
    return true;
  };
  rec(0, 0);
  return res;
}

BatchReport verify_theorem_batch(const std::vector<Instance>& instances, Theorem which, std::uint64_t node_limit,
                                 int workers) {
  struct Item {
    enum { Colorable, Uncolorable, Skipped, Limit } kind = Skipped;
    ValidityReport report;
    SearchStats stats;
  };
  std::vector<Item> items(instances.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::string error;
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      const Instance& inst = instances[i];
      Item& it = items[i];
      try {
        it.report = check_theorem(inst, which);
      } catch (const StructuralError& e) {
        it.report.violations.push_back({"structure", {}, {}, {}, -1, -1, e.what()});
      }
      if (!it.report.ok()) continue;
      const ExactResult r = solve_exact(inst.adjacency(), inst.lists, node_limit);
      it.stats = r.stats;
      if (r.result == SearchResult::Limit) {
        it.kind = Item::Limit;
      } else if (r.result == SearchResult::Uncolorable) {
        it.kind = Item::Uncolorable;
      } else {
        if (auto problem = coloring_problem(inst.adjacency(), inst.lists, r.coloring)) {
          std::lock_guard lock(error_mutex);
          error = "oracle returned an invalid coloring: " + *problem;
        }
        it.kind = Item::Colorable;
      }
    }
  };
  if (workers <= 0) workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (!error.empty()) throw std::logic_error(error);

  BatchReport rep;
  rep.total = static_cast<int>(instances.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& it = items[i];
    rep.stats.nodes += it.stats.nodes;
    rep.stats.backtracks += it.stats.backtracks;
    rep.stats.seconds += it.stats.seconds;
    switch (it.kind) {
      case Item::Colorable: ++rep.colorable; break;
      case Item::Uncolorable:
        ++rep.uncolorable;
        rep.falsifications.push_back(static_cast<int>(i));
        break;
      case Item::Limit: ++rep.limit; break;
      case Item::Skipped:
        ++rep.skipped;
        rep.skipped_indices.push_back(static_cast<int>(i));
        rep.skipped_reports.push_back(it.report);
        break;
    }
  }
  rep.stats.result = rep.uncolorable ? SearchResult::Uncolorable
                     : rep.limit     ? SearchResult::Limit
                                     : SearchResult::Colorable;
  return rep;
}

}  // namespace fivelist
