#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace fivelist;

namespace {

ListAssignment random_lists(Rng& rng, int n, int palette, int lo, int hi) {
  ListAssignment l(n);
  for (Vertex v = 0; v < n; ++v) l.set(v, rng.sample(1, palette, lo + static_cast<int>(rng.below(hi - lo + 1))));
  return l;
}

Adjacency random_graph(Rng& rng, int n, double p) {
  Adjacency adj(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) adj[u].push_back(v), adj[v].push_back(u);
  return adj;
}

}  // namespace

TEST_CASE("solve_exact examples") {
  const auto k6 = solve_exact(ref::complete(6), ref::uniform_lists(6, {1, 2, 3, 4, 5}));
  CHECK(k6.result == SearchResult::Uncolorable);
  CHECK(k6.stats.nodes >= 1);
  CHECK(solve_exact(ref::cycle(5), ref::uniform_lists(5, {1, 2})).result == SearchResult::Uncolorable);
  const auto c6 = solve_exact(ref::cycle(6), ref::uniform_lists(6, {1, 2}));
  REQUIRE(c6.result == SearchResult::Colorable);
  CHECK(ref::proper(ref::cycle(6), ref::uniform_lists(6, {1, 2}), c6.coloring));
  CHECK(solve_exact(ref::complete(4), ref::uniform_lists(4, {1, 2, 3})).result == SearchResult::Uncolorable);
  CHECK(solve_exact(ref::complete(5), ref::uniform_lists(5, {1, 2, 3, 4, 5})).result == SearchResult::Colorable);
  CHECK(solve_exact({}, ListAssignment(0)).result == SearchResult::Colorable);
}

TEST_CASE("node limit is reported as LIMIT") {
  const auto r = solve_exact(ref::complete(7), ref::uniform_lists(7, {1, 2, 3, 4, 5, 6}), 10);
  CHECK(r.result == SearchResult::Limit);
  CHECK(r.stats.nodes <= 11);
}

TEST_CASE("solve_exact agrees with plain enumeration for n <= 6") {
  Rng rng(99);
  int yes = 0, no = 0;
  for (int t = 0; t < 2000; ++t) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Adjacency adj = random_graph(rng, n, 0.6);
    const ListAssignment l = random_lists(rng, n, 4, 1, 3);
    const bool expect = ref::colorable(adj, l);
    const auto r = solve_exact(adj, l);
    CHECK((r.result == SearchResult::Colorable) == expect);
    if (expect) CHECK(ref::proper(adj, l, r.coloring));
    (expect ? yes : no)++;

    long count = 0;
    for_each_coloring(adj, l, [&](const Coloring& c) {
      CHECK(ref::proper(adj, l, c));
      ++count;
      return true;
    });
    CHECK(count == ref::enumerate(adj, l, [](const Coloring&) { return true; }));
  }
  CHECK(yes > 100);
  CHECK(no > 100);
}

TEST_CASE("solve_exact is deterministic") {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const int n = 4 + static_cast<int>(rng.below(8));
    const Adjacency adj = random_graph(rng, n, 0.5);
    const ListAssignment l = random_lists(rng, n, 6, 2, 4);
    const auto a = solve_exact(adj, l);
    const auto b = solve_exact(adj, l);
    CHECK(a.result == b.result);
    CHECK(a.coloring == b.coloring);
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.stats.backtracks == b.stats.backtracks);
  }
}

TEST_CASE("is_choosable examples") {
  const auto k4 = is_choosable(ref::complete(4), 4, 8);
  CHECK(k4.choosable);
  CHECK(k4.assignments > 1);

  const auto c5 = is_choosable(ref::cycle(5), 2, 4);
  REQUIRE_FALSE(c5.choosable);
  REQUIRE(c5.witness.has_value());
  CHECK_FALSE(ref::colorable(ref::cycle(5), *c5.witness));

  const auto k6 = is_choosable(ref::complete(6), 5, 10);
  REQUIRE_FALSE(k6.choosable);
  for (Vertex v = 1; v < 6; ++v) CHECK((*k6.witness)[v] == (*k6.witness)[0]);

  // Even cycles are 2-choosable, K_{2,4} is not.
  CHECK(is_choosable(ref::cycle(6), 2, 4).choosable);
  Adjacency k24(6);
  for (int a : {0, 1})
    for (int b = 2; b < 6; ++b) k24[a].push_back(b), k24[b].push_back(a);
  const auto bip = is_choosable(k24, 2, 4);
  REQUIRE_FALSE(bip.choosable);
  CHECK_FALSE(ref::colorable(k24, *bip.witness));
}

TEST_CASE("is_choosable limits") {
  CHECK_THROWS_AS(is_choosable(ref::complete(11), 2, 4), LimitError);
  CHECK_THROWS_AS(is_choosable(ref::cycle(5), 2, 5), LimitError);
  CHECK_THROWS_AS(is_choosable(ref::cycle(5), 3, 2), LimitError);
  ChoosabilityOptions wide;
  wide.max_palette = 5;
  CHECK_FALSE(is_choosable(ref::cycle(5), 2, 5, wide).choosable);
}

TEST_CASE("canonical enumeration does not change the decision") {
  Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rng.below(4));
    const Adjacency adj = random_graph(rng, n, 0.55);
    const int k = 2 + static_cast<int>(rng.below(2));
    const auto r = is_choosable(adj, k, 2 * k);
    if (r.choosable) {
      // Any assignment from the palette, renamed or not, must be colorable.
      for (int s = 0; s < 20; ++s) {
        ListAssignment l(n);
        for (Vertex v = 0; v < n; ++v) l.set(v, rng.sample(0, 2 * k - 1, k));
        CHECK(ref::colorable(adj, l));
      }
    } else {
      CHECK_FALSE(ref::colorable(adj, *r.witness));
      // Renaming colors keeps the witness bad.
      for (int s = 0; s < 20; ++s) {
        std::vector<int> perm(2 * k);
        for (int c = 0; c < 2 * k; ++c) perm[c] = c;
        rng.shuffle(perm);
        ListAssignment l(n);
        for (Vertex v = 0; v < n; ++v) {
          ColorList cl;
          for (Color c : (*r.witness)[v]) cl.push_back(perm[c]);
          l.set(v, cl);
        }
        CHECK_FALSE(ref::colorable(adj, l));
      }
    }
  }
}

TEST_CASE("batch verification skips the K6 control") {
  Instance k6;
  k6.drawing = planarize(ref::k6_drawing());
  REQUIRE(k6.drawing.crossings().size() == 3);
  k6.lists = ref::uniform_lists(6, {1, 2, 3, 4, 5});
  CHECK(solve_exact(k6.adjacency(), k6.lists).result == SearchResult::Uncolorable);

  std::vector<Instance> batch;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    GenSpec spec;
    spec.family = Family::NearPlanar;
    spec.base = Base::Triangulation;
    spec.n = 10;
    spec.crossings = static_cast<int>(s % 3);
    spec.theorem = Theorem::TwoCrossings;
    spec.seed = s;
    batch.push_back(gen_instance(spec));
  }
  batch.push_back(k6);
  for (Theorem t : {Theorem::TwoCrossings, Theorem::Main0}) {
    const BatchReport r = verify_theorem_batch(batch, t, kDefaultNodeLimit, 2);
    CHECK(r.total == 11);
    CHECK(r.falsifications.empty());
    CHECK(std::find(r.skipped_indices.begin(), r.skipped_indices.end(), 10) != r.skipped_indices.end());
    CHECK(r.colorable + r.uncolorable + r.skipped + r.limit == r.total);
    CHECK(r.uncolorable == 0);
  }
}
