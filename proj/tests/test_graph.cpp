#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "antimagic/graph.hpp"

using namespace antimagic;

TEST_CASE("parse a plain edge list", "[graph]") {
  const ParseResult result = parse_edge_list("0 1\n1 2\n");
  CHECK(result.graph.vertex_count() == 3);
  REQUIRE(result.graph.edge_count() == 2);
  CHECK(result.graph.edges()[0] == Edge{0, 1});
  CHECK(result.graph.edges()[1] == Edge{1, 2});
  CHECK(result.vertex_ids == std::vector<std::uint64_t>{0, 1, 2});
}

TEST_CASE("parse rejects duplicates and self-loops", "[graph]") {
  CHECK_THROWS_AS(parse_edge_list("0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), ParseError);  // same unordered edge
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
  try {
    parse_edge_list("0 1\n\n0 0\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("parse handles comments, blanks and headers", "[graph]") {
  const ParseResult result =
      parse_edge_list("# a path\n\np 5 2\n0 1\n1 2\n");
  CHECK(result.graph.vertex_count() == 5);  // vertices 3, 4 isolated
  CHECK(result.graph.edge_count() == 2);
  CHECK_THROWS_AS(parse_edge_list("p 2 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("p 3 2\n0 1\n"), ParseError);  // edge count mismatch
}

TEST_CASE("parse remaps sparse ids densely", "[graph]") {
  const ParseResult result = parse_edge_list("10 40\n40 7\n");
  CHECK(result.graph.vertex_count() == 3);
  CHECK(result.vertex_ids == std::vector<std::uint64_t>{7, 10, 40});
  // 10 -> 1, 40 -> 2, 7 -> 0
  CHECK(result.graph.edges()[0] == Edge{1, 2});
  CHECK(result.graph.edges()[1] == Edge{2, 0});
}

TEST_CASE("parse errors name the offending line", "[graph]") {
  try {
    parse_edge_list("0 1\nnot an edge\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("graph constructor enforces invariants", "[graph]") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::invalid_argument);
  CHECK_NOTHROW(Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("generated families have the expected shape", "[graph]") {
  const Graph triangle = generate("cycle:3", 0);
  REQUIRE(triangle.edge_count() == 3);
  CHECK(triangle.edges()[0] == Edge{0, 1});
  CHECK(triangle.edges()[1] == Edge{1, 2});
  CHECK(triangle.edges()[2] == Edge{2, 0});

  const Graph k24 = generate("complete_bipartite:2,4", 0);
  CHECK(k24.edge_count() == 8);
  const auto deg = degrees(k24);
  CHECK(std::count(deg.begin(), deg.end(), 4) == 2);
  CHECK(std::count(deg.begin(), deg.end(), 2) == 4);

  const Graph k2 = generate("path:2", 0);
  CHECK(k2.edge_count() == 1);
  CHECK_FALSE(validate(k2).is_labellable);

  const Graph star = generate("star:3", 0);
  CHECK(star.edge_count() == 3);
  CHECK(degrees(star)[0] == 3);
}

TEST_CASE("generation is reproducible and respects parameter checks", "[graph]") {
  const Graph a = generate("random_gnp:20,0.3", 42);
  const Graph b = generate("random_gnp:20,0.3", 42);
  CHECK(a.edges() == b.edges());
  const Graph c = generate("random_gnp:20,0.3", 43);
  CHECK(a.edges() != c.edges());

  const Graph t1 = generate("random_tree:30", 9);
  const Graph t2 = generate("random_tree:30", 9);
  CHECK(t1.edges() == t2.edges());
  CHECK(t1.edge_count() == 29);

  CHECK_THROWS_AS(generate("cycle:2", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("random_gnp:5,1.5", 0), std::invalid_argument);
  CHECK_THROWS_AS(generate("nonsense:5", 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("path"), std::invalid_argument);
}

TEST_CASE("gnp output is always labellable", "[graph]") {
  // p low enough that isolated edges would be common without the retry
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate("random_gnp:10,0.12", seed);
    CHECK(validate(g).is_labellable);
  }
}

TEST_CASE("degree sum equals twice the edge count", "[graph]") {
  for (const char* spec : {"path:9", "cycle:11", "star:6", "complete:7",
                           "complete_bipartite:3,5", "random_tree:25"}) {
    const Graph g = generate(spec, 123);
    const auto deg = degrees(g);
    std::size_t total = 0;
    for (auto d : deg) total += d;
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("validation flags isolated edges and vertices", "[graph]") {
  const Graph p3 = generate("path:3", 0);
  CHECK(validate(p3).is_labellable);

  const Graph k2(2, {{0, 1}});
  const ValidationReport r = validate(k2);
  REQUIRE(r.isolated_edges.size() == 1);
  CHECK(r.isolated_edges[0] == Edge{0, 1});
  CHECK_FALSE(r.is_labellable);

  // K_2 plus a disjoint triangle: still blocked by the isolated edge
  const Graph mixed(5, {{0, 1}, {2, 3}, {3, 4}, {4, 2}});
  CHECK_FALSE(validate(mixed).is_labellable);

  const Graph lonely(3, {{0, 1}, {1, 2}});
  CHECK(validate(lonely).isolated_vertices.empty());
  const Graph with_isolated(4, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(validate(with_isolated).isolated_vertices ==
        std::vector<VertexId>{3});

  const Graph empty_graph(3, {});
  CHECK_FALSE(validate(empty_graph).is_labellable);
}

TEST_CASE("edge list round trip", "[graph]") {
  const Graph g = generate("complete_bipartite:2,3", 0);
  std::ostringstream out;
  write_edge_list(out, g);
  const ParseResult back = parse_edge_list(out.str());
  CHECK(back.graph.vertex_count() == g.vertex_count());
  CHECK(back.graph.edges() == g.edges());
}
