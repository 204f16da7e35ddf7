#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

namespace {

// Random simple path on up to `max_edges` edges in the union graph, or a
// random vertex sequence when the union is too sparse.
std::vector<Vertex> random_walk(const GraphCollection& coll, Rng& rng, int max_edges) {
  const int n = coll.order();
  std::vector<Vertex> seq{static_cast<Vertex>(rng.below(n))};
  const int target = 1 + static_cast<int>(rng.below(max_edges));
  Mask used = bit(seq[0]);
  while (static_cast<int>(seq.size()) <= target) {
    Mask options = 0;
    for (Color c = 0; c < coll.size(); ++c) options |= coll[c].neighbors(seq.back());
    options &= ~used;
    if (options == 0) break;
    const auto list = bits_of(options);
    seq.push_back(list[rng.below(list.size())]);
    used |= bit(seq.back());
  }
  return seq;
}

}  // namespace

TEST_CASE("assign_colors agrees with exhaustive assignment") {
  Rng rng(7);
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const int m = 2 + static_cast<int>(seed % 6);
    const auto coll = gen_random_collection(n, m, 1, seed);
    for (int t = 0; t < 30; ++t) {
      const auto seq = random_walk(coll, rng, 6);
      if (seq.size() < 2) continue;
      const Mask forbidden = rng.chance(0.3) ? bit(static_cast<int>(rng.below(m))) : 0;
      const auto view = restrict(coll, 0, forbidden);
      bool all_edges = true;
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        all_edges = all_edges && view.edge_colors(seq[i], seq[i + 1]) != 0;
      }
      if (!all_edges) {
        CHECK_THROWS_AS(assign_colors(coll, seq, forbidden), InvalidInput);
        continue;
      }
      const auto got = assign_colors(coll, seq, forbidden);
      const bool expect = oracle::colorable(coll, coll.all_colors() & ~forbidden, seq);
      REQUIRE(got.has_value() == expect);
      if (got) {
        CHECK(verify_colored_path(restrict(coll, 0, forbidden), {seq, *got}).ok);
      }
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("assign_colors rejects sequences that are not paths") {
  const auto coll = replicate(build_graph(3, std::vector<Edge>{{0, 1}}), 2);
  const std::vector<Vertex> repeated{0, 1, 0};
  CHECK_THROWS_AS(assign_colors(coll, repeated), InvalidInput);
  const std::vector<Vertex> gap{0, 2};
  CHECK_THROWS_WITH_AS(assign_colors(coll, gap), doctest::Contains("not an edge"), InvalidInput);
}

TEST_CASE("matching beats greedy on a Hall-tight sequence") {
  // Edge 01 lies in graphs 0 and 1, edge 12 only in graph 0: greedy picking
  // graph 0 first for 01 would fail.
  const std::vector<Edge> g0{{0, 1}, {1, 2}};
  const std::vector<Edge> g1{{0, 1}};
  const GraphCollection coll(3, {build_graph(3, g0), build_graph(3, g1)});
  const std::vector<Vertex> seq{0, 1, 2};
  const auto colors = assign_colors(coll, seq);
  REQUIRE(colors);
  CHECK(*colors == std::vector<Color>{1, 0});
}

TEST_CASE("find_rainbow_path matches enumeration on every query") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const int m = 2 + static_cast<int>(seed % 5);
    const auto coll = gen_random_collection(n, m, 1 + static_cast<int>(seed % 2), seed);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (x == y) continue;
        for (int k = 2; k <= n; ++k) {
          const auto r = find_rainbow_path(coll, x, y, k);
          REQUIRE(r.outcome != Outcome::exhausted);
          REQUIRE(r.found() == oracle::has_rainbow_path(coll, x, y, k));
          if (r.found()) {
            CHECK(r.witness->vertices.front() == x);
            CHECK(r.witness->vertices.back() == y);
            CHECK(static_cast<int>(r.witness->order()) == k);
            CHECK(verify_colored_path(coll, *r.witness).ok);
          }
        }
        const auto d = rainbow_distance(coll, x, y);
        const auto expect = oracle::rainbow_distance(coll, x, y);
        CHECK(d.distance == expect);
        CHECK((d.outcome == Outcome::found) == expect.has_value());
      }
    }
  }
}

TEST_CASE("search respects views") {
  const auto coll = gen_random_collection(7, 6, 3, 11);
  const auto view = restrict(coll, bit(2) | bit(5), bit(0) | bit(3));
  for (Vertex x : {0, 1, 3}) {
    for (Vertex y : {4, 6}) {
      for (int k = 2; k <= 5; ++k) {
        const auto r = find_rainbow_path(view, x, y, k);
        CHECK(r.found() == oracle::has_rainbow_path(coll, view.vertices(), view.colors(), x, y, k));
        if (r.found()) CHECK(verify_colored_path(view, *r.witness).ok);
      }
    }
  }
  CHECK_THROWS_AS(find_rainbow_path(view, 2, 4, 3), InvalidInput);
}

TEST_CASE("path search preconditions and trivial answers") {
  const auto coll = replicate(complete_graph(5), 2);
  CHECK_THROWS_AS(find_rainbow_path(coll, 1, 1, 3), InvalidInput);
  CHECK_THROWS_AS(find_rainbow_path(coll, 0, 1, 6), InvalidInput);
  CHECK_THROWS_AS(find_rainbow_path(coll, 0, 1, 1), InvalidInput);
  // Three edges need three colors.
  CHECK(find_rainbow_path(coll, 0, 1, 4).outcome == Outcome::none);
  CHECK(find_rainbow_path(coll, 0, 1, 3).found());
}

TEST_CASE("rainbow cycles match enumeration") {
  for (std::uint64_t seed = 200; seed < 220; ++seed) {
    const int n = 5 + static_cast<int>(seed % 2);
    const auto coll = gen_random_collection(n, n - 1, 2, seed);
    for (int len = 3; len <= n; ++len) {
      const auto r = find_rainbow_cycle(coll, len);
      REQUIRE(r.found() ==
              oracle::has_rainbow_cycle(coll, coll.all_vertices(), coll.all_colors(), len));
      if (r.found()) {
        CHECK(static_cast<int>(r.witness->length()) == len);
        CHECK(verify_colored_cycle(coll, *r.witness).ok);
      }
    }
  }
}

TEST_CASE("Hamiltonian path searches") {
  const auto coll = gen_random_collection(7, 6, 4, 3);
  const auto fixed = find_rainbow_ham_path(coll, 0, 6);
  REQUIRE(fixed.found());
  CHECK(fixed.witness->order() == 7);
  CHECK(verify_colored_path(coll, *fixed.witness).ok);
  const auto any = find_any_rainbow_ham_path(coll);
  REQUIRE(any.found());
  CHECK(verify_colored_path(coll, *any.witness).ok);

  const std::vector<std::vector<Vertex>> blocks{{0, 1, 2}, {3, 4, 5}};
  const auto split = replicate(clique_union(6, blocks), 6);
  CHECK(find_any_rainbow_ham_path(split).outcome == Outcome::none);
}

TEST_CASE("budget exhaustion is never reported as absence") {
  // Two cliques joined by the bridge 5-6: no Hamiltonian 0-1 path, but
  // reachability pruning cannot see that.
  const auto split = replicate(
      clique_union(12, std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}})
          .with_edge(5, 6),
      11);
  SearchBudget tiny;
  tiny.node_limit = 10;
  const auto r = find_rainbow_path(split, 0, 1, 12, 0, tiny);
  CHECK(r.outcome == Outcome::exhausted);
  CHECK_FALSE(r.witness.has_value());
  CHECK(find_rainbow_path(split, 0, 1, 12).outcome == Outcome::none);
}

TEST_CASE("RAINBOW_BUDGET overrides the default node limit") {
  ::setenv("RAINBOW_BUDGET", "1234", 1);
  CHECK(SearchBudget::from_environment().node_limit == 1234);
  ::setenv("RAINBOW_BUDGET", "garbage", 1);
  CHECK_THROWS_AS(SearchBudget::from_environment(), InvalidInput);
  ::unsetenv("RAINBOW_BUDGET");
  CHECK(SearchBudget::from_environment().node_limit == SearchBudget::kDefaultNodeLimit);
}
