#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/structure.hpp"

using namespace rainbow;

TEST_CASE("complete graphs are rainbow panconnected with full certificates") {
  const auto coll = replicate(complete_graph(5), 4);
  const auto cert = is_rainbow_panconnected(coll);
  CHECK(cert.verdict == Verdict::holds);
  CHECK(cert.k_max == 5);
  CHECK_FALSE(cert.k_capped);
  CHECK(cert.pairs.size() == 10);
  for (const auto& p : cert.pairs) {
    CHECK(p.distance == 1);
    CHECK(p.witnesses.size() == 4);
    for (const auto& [k, path] : p.witnesses) {
      CHECK(static_cast<int>(path.order()) == k);
      CHECK(verify_colored_path(coll, path).ok);
    }
  }
  CHECK_FALSE(cert.failure.has_value());
}

TEST_CASE("k range is capped by the number of colors") {
  const auto coll = replicate(complete_graph(6), 3);
  const auto cert = is_rainbow_panconnected(coll);
  CHECK(cert.k_max == 4);
  CHECK(cert.k_capped);
  CHECK(cert.verdict == Verdict::holds);
}

TEST_CASE("single-graph panconnectivity") {
  CHECK(is_panconnected_single(complete_graph(4)) == Verdict::holds);
  const std::vector<Edge> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  CHECK(is_panconnected_single(build_graph(5, c5)) == Verdict::fails);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const auto g = gen_random_collection(n, 1, 2, seed)[0];
    CHECK((is_panconnected_single(g) == Verdict::holds) == oracle::panconnected(g));
  }
}

TEST_CASE("certificate verdict equals the conjunction of path queries") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto coll = gen_random_collection(5, 4, 2, seed);
    const auto cert = is_rainbow_panconnected(coll);
    bool all = true;
    std::optional<FailingTriple> first;
    for (Vertex x = 0; x < 5 && all; ++x) {
      for (Vertex y = x + 1; y < 5 && all; ++y) {
        const auto d = oracle::rainbow_distance(coll, x, y);
        if (!d) {
          all = false;
          first = FailingTriple{x, y, 2};
          break;
        }
        for (int k = *d + 1; k <= 5; ++k) {
          if (!oracle::has_rainbow_path(coll, x, y, k)) {
            all = false;
            first = FailingTriple{x, y, k};
            break;
          }
        }
      }
    }
    CHECK((cert.verdict == Verdict::holds) == all);
    CHECK(cert.failure == first);
  }
}

TEST_CASE("five-vertex collections above the threshold are panconnected") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto coll = gen_random_collection(5, 4, 3, seed);
    CHECK(is_rainbow_panconnected(coll).verdict == Verdict::holds);
  }
}

TEST_CASE("extremal family fails exactly at the single-edge pair") {
  for (int n : {7, 9}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto planted = gen_extremal_F(n, n - 1, {}, seed);
      CheckOptions opts;
      opts.jobs = 4;
      const auto cert = is_rainbow_panconnected(planted.coll, opts);
      REQUIRE(cert.verdict == Verdict::fails);
      const auto [u, v] = *planted.planted.single_edge;
      CHECK(cert.failure == FailingTriple{u, v, 4});
      CHECK_FALSE(oracle::has_rainbow_path(planted.coll, u, v, 4));
      REQUIRE(cert.extremal.has_value());
      CHECK(cert.extremal->parts == planted.planted.parts);
    }
  }
}

TEST_CASE("F-family recognition") {
  const auto planted = gen_extremal_F(7, 6, {}, 5);
  const auto w = recognize_F_family(planted.coll);
  REQUIRE(w);
  CHECK(w->kind == ExtremalKind::f_family);
  CHECK(w->parts == planted.planted.parts);
  CHECK(w->single_edge == planted.planted.single_edge);
  CHECK(reverify(*w, planted.coll));

  for (int n : {9, 11}) {
    const auto p = gen_extremal_F(n, n - 1, {}, 9);
    const auto r = recognize_F_family(p.coll);
    REQUIRE(r);
    CHECK(reverify(*r, p.coll));
  }

  CHECK_FALSE(recognize_F_family(replicate(complete_graph(7), 6)));
  const auto q1 = planted.planted.parts[0];
  const auto broken =
      planted.coll.with_graph(3, planted.coll[3].with_edge(q1[0], q1[1]));
  CHECK_FALSE(recognize_F_family(broken));
}

TEST_CASE("rainbow Hamiltonian connectivity") {
  const auto f = gen_extremal_F(7, 6, {}, 1).coll;
  const auto r = is_rainbow_ham_connected(f);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.witnesses.size() == 21);
  for (const auto& p : r.witnesses) CHECK(verify_colored_path(f, p).ok);

  const std::vector<std::vector<Vertex>> blocks{{0, 1, 2}, {3, 4, 5}};
  const auto split = replicate(clique_union(6, blocks), 6);
  const auto s = is_rainbow_ham_connected(split);
  CHECK(s.verdict == Verdict::fails);
  REQUIRE(s.failing_pair);
  CHECK(s.failing_pair == Edge{0, 1});

  CHECK_THROWS_AS(is_rainbow_ham_connected(replicate(complete_graph(6), 4)),
                  PreconditionFailure);
}

TEST_CASE("Hamiltonian path obstruction classification") {
  for (int n : {4, 6, 8}) {
    const auto two = gen_cor23_obstruction(n, "ii", 3);
    const auto a = classify_ham_path_obstruction(two.coll);
    CHECK(a.tag == ObstructionCase::two_cliques);
    REQUIRE(a.witness);
    CHECK(a.witness->parts == two.planted.parts);
    CHECK(find_any_rainbow_ham_path(two.coll).outcome == Outcome::none);

    const auto join = gen_cor23_obstruction(n, "iii", 3);
    const auto b = classify_ham_path_obstruction(join.coll);
    CHECK(b.tag == ObstructionCase::join_partition);
    REQUIRE(b.witness);
    CHECK(b.witness->parts == join.planted.parts);
    CHECK(reverify(*b.witness, join.coll));
    CHECK(find_any_rainbow_ham_path(join.coll).outcome == Outcome::none);
  }
  const auto random = gen_random_collection(6, 6, 2, 17);
  const auto c = classify_ham_path_obstruction(random);
  if (c.tag == ObstructionCase::has_ham_path) {
    REQUIRE(c.ham_path);
    CHECK(verify_colored_path(random, *c.ham_path).ok);
  }
  const auto sparse = gen_random_collection(6, 6, 0, 2);
  CHECK(classify_ham_path_obstruction(sparse).outside_hypothesis ==
        (collection_min_degree(sparse) < 2));
  CHECK_THROWS_AS(classify_ham_path_obstruction(replicate(complete_graph(6), 5)),
                  PreconditionFailure);
}

TEST_CASE("clique split recognizer") {
  const std::vector<std::vector<Vertex>> blocks{{0, 3}, {1, 2, 4}};
  const auto coll = replicate(clique_union(5, blocks), 3);
  const auto w = recognize_clique_split(coll);
  REQUIRE(w);
  CHECK(w->kind == ExtremalKind::single_graph_split);
  CHECK(reverify(*w, coll));
  CHECK_FALSE(recognize_two_cliques(coll));
  CHECK_FALSE(recognize_clique_split(replicate(complete_graph(5), 2)));
}

TEST_CASE("panconnected-or-F verification") {
  const auto f = gen_extremal_F(7, 6, {}, 2).coll;
  const auto a = verify_theorem_1_5(f);
  CHECK(a.verdict == Verdict::holds);
  CHECK(a.branch == "F_family");

  const auto random = gen_random_collection(7, 6, 4, 8);
  const auto b = verify_theorem_1_5(random);
  CHECK(b.verdict == Verdict::holds);
  CHECK(b.branch == "panconnected");

  // Drop one vertex of graph 0 to degree 3.
  auto g = random[0];
  for (Vertex v = 1; v < 7 && g.degree(0) > 3; ++v) {
    if (g.adjacent(0, v)) g = g.without_edge(0, v);
  }
  CHECK_THROWS_AS(verify_theorem_1_5(random.with_graph(0, g)), PreconditionFailure);
  CHECK_THROWS_AS(verify_theorem_1_5(replicate(complete_graph(7), 5)), PreconditionFailure);
}
