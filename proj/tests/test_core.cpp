#include <sstream>

#include "doctest.h"
#include "rainbow/core.hpp"
#include "rainbow/instance_io.hpp"

using namespace rainbow;

TEST_CASE("build_graph rejects bad input") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(build_graph(3, loop), InvalidInput);
  const std::vector<Edge> out{{0, 3}};
  CHECK_THROWS_WITH_AS(build_graph(3, out), doctest::Contains("out of range"), InvalidInput);
  CHECK_THROWS_AS(SimpleGraph(0), InvalidInput);
  CHECK_THROWS_AS(SimpleGraph(65), InvalidInput);
}

TEST_CASE("edges are canonical and duplicates collapse") {
  const std::vector<Edge> es{{2, 1}, {0, 2}, {1, 2}, {0, 1}};
  const auto g = build_graph(3, es);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(g.degree(0) == 2);
  CHECK(g.without_edge(0, 1).edge_count() == 2);
  CHECK(g.without_edge(0, 1).with_edge(1, 0) == g);
}

TEST_CASE("degree statistics") {
  const auto k4 = complete_graph(4);
  CHECK(min_degree(k4) == 3);
  CHECK_FALSE(sigma2(k4).has_value());
  // Path 0-1-2-3: nonadjacent pairs (0,2): 1+2, (0,3): 1+1, (1,3): 2+1.
  const std::vector<Edge> p{{0, 1}, {1, 2}, {2, 3}};
  CHECK(sigma2(build_graph(4, p)) == 2);
  const std::vector<std::vector<Vertex>> blocks{{0, 1, 2}, {3, 4, 5}};
  const auto two = clique_union(6, blocks);
  CHECK(two.edge_count() == 6);
  CHECK_FALSE(two.adjacent(2, 3));
}

TEST_CASE("collections validate their graphs") {
  CHECK_THROWS_AS(GraphCollection(3, {}), InvalidInput);
  CHECK_THROWS_AS(GraphCollection(3, {SimpleGraph(3), SimpleGraph(4)}), InvalidInput);
  const auto coll = replicate(complete_graph(5), 4);
  CHECK(coll.size() == 4);
  CHECK(coll.all_identical());
  CHECK(collection_min_degree(coll) == 4);
  const auto changed = coll.with_graph(2, complete_graph(5).without_edge(0, 1));
  CHECK_FALSE(changed.all_identical());
  CHECK(collection_min_degree(changed) == 3);
}

TEST_CASE("views delete vertices and colors without copying") {
  const auto coll = replicate(complete_graph(5), 4);
  const auto view = restrict(coll, bit(0) | bit(4), bit(1));
  CHECK(view.vertex_count() == 3);
  CHECK(view.color_count() == 3);
  CHECK_FALSE(view.adjacent(1, 2, 3));
  CHECK(view.adjacent(0, 2, 3));
  CHECK_FALSE(view.adjacent(0, 0, 2));
  CHECK(view.neighbors(0, 2) == (bit(1) | bit(3)));
  CHECK(view.edge_colors(1, 2) == (bit(0) | bit(2) | bit(3)));
  const auto inner = view.restrict(bit(3), bit(0));
  CHECK(inner.vertex_count() == 2);
  CHECK(inner.colors() == (bit(2) | bit(3)));
}

TEST_CASE("path and cycle verification names the violation") {
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  const auto coll = GraphCollection(4, {build_graph(4, tri), build_graph(4, tri), SimpleGraph(4)});
  CHECK(verify_colored_path(coll, {{0, 1, 2}, {0, 1}}).ok);
  CHECK_FALSE(verify_colored_path(coll, {{0, 1, 2}, {0, 0}}).ok);
  CHECK(verify_colored_path(coll, {{0, 1, 2}, {0, 0}}).violation.find("repeated color") !=
        std::string::npos);
  CHECK(verify_colored_path(coll, {{0, 1, 2}, {0, 2}}).violation.find("absent") !=
        std::string::npos);
  CHECK(verify_colored_path(coll, {{0, 1, 0}, {0, 1}}).violation.find("repeated vertex") !=
        std::string::npos);
  CHECK(verify_colored_path(restrict(coll, bit(1), 0), {{0, 1, 2}, {0, 1}})
            .violation.find("not in view") != std::string::npos);
  CHECK_FALSE(verify_colored_path(restrict(coll, 0, bit(1)), {{0, 1, 2}, {0, 1}}).ok);
  CHECK_FALSE(verify_colored_cycle(coll, {{0, 1, 2}, {0, 1, 1}}).ok);
  CHECK_FALSE(verify_colored_cycle(coll, {{0, 1, 2}, {0, 1, 2}}).ok);
  const auto four = replicate(complete_graph(4), 3);
  CHECK(verify_colored_cycle(four, {{0, 1, 2}, {0, 1, 2}}).ok);
  const ColoredPath p{{0, 1, 2}, {0, 1}};
  CHECK(p.reversed().vertices == std::vector<Vertex>{2, 1, 0});
  CHECK(p.reversed().colors == std::vector<Color>{1, 0});
}

TEST_CASE("instance text round-trips canonically") {
  const std::string text =
      "# two graphs\n"
      "4 2\n"
      "graph 0\n"
      "2 1\n"
      "0 3  # trailing comment\n"
      "end\n"
      "\n"
      "graph 1\n"
      "end\n";
  const auto coll = parse_instance(text);
  CHECK(coll.order() == 4);
  CHECK(coll.size() == 2);
  CHECK(coll[0].adjacent(1, 2));
  CHECK(coll[1].edge_count() == 0);
  const auto canonical = format_instance(coll);
  CHECK(canonical == "4 2\ngraph 0\n0 3\n1 2\nend\ngraph 1\nend\n");
  CHECK(parse_instance(canonical) == coll);
}

TEST_CASE("instance parser reports the offending line") {
  CHECK_THROWS_WITH_AS(parse_instance("3 1\ngraph 0\n0 5\nend\n"),
                       doctest::Contains("line 3"), InvalidInput);
  CHECK_THROWS_AS(parse_instance("3 2\ngraph 1\nend\n"), InvalidInput);
  CHECK_THROWS_AS(parse_instance("3 1\ngraph 0\n0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_instance("3 1\ngraph 0\n1 1\nend\n"), InvalidInput);
}
