#include <doctest.h>

#include <random>

#include "borgia/error.hpp"
#include "borgia/graph_io.hpp"
#include "fixtures.hpp"

using namespace borgia;

TEST_CASE("edge list builds the four-actor directed example") {
  const Graph g = fixtures::fig1();
  REQUIRE(g.size() == 4);
  CHECK(g.directed());
  const double expected[4][4] = {{0, 5, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 0}, {0, 1, 7, 0}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(g.weight(i, j) == expected[i][j]);
  }
}

TEST_CASE("empty edge list is rejected") {
  CHECK_THROWS_WITH_AS(load_graph("", GraphFormat::edge_list, false), doctest::Contains("at least one edge"), Error);
  CHECK_THROWS_AS(load_graph("# only a comment\n", GraphFormat::edge_list, false), Error);
}

TEST_CASE("negative weight reports its line") {
  try {
    load_graph("a b -1", GraphFormat::edge_list, false);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("negative weight at line 1") != std::string::npos);
  }
}

TEST_CASE("malformed records") {
  CHECK_THROWS_AS(load_graph("a b c d", GraphFormat::edge_list, false), ParseError);
  CHECK_THROWS_AS(load_graph("a b x", GraphFormat::edge_list, false), ParseError);
  CHECK_THROWS_AS(load_graph("a a 1", GraphFormat::edge_list, false), Error);
}

TEST_CASE("tab separated labels may contain spaces") {
  const Graph g = load_graph("New York\tLos Angeles\t2\n", GraphFormat::edge_list, false);
  CHECK(g.label(0) == "New York");
  CHECK(g.weight(0, 1) == 2.0);
}

TEST_CASE("round trip through every format") {
  std::mt19937_64 rng(3);
  for (bool directed : {false, true}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = fixtures::random_graph(rng, 3 + trial, 0.5, directed, true);
      if (g.edge_count() == 0) continue;
      for (auto format : {GraphFormat::edge_list, GraphFormat::matrix_csv, GraphFormat::gml}) {
        CAPTURE(graph_format_name(format));
        const Graph back = load_graph(write_graph(g, format), format, directed);
        CHECK(back == g);
      }
    }
  }
}

TEST_CASE("matrix csv dimension mismatch") {
  CHECK_THROWS_AS(load_graph("a,b\n0,1\n", GraphFormat::matrix_csv, false), Error);
  CHECK_THROWS_AS(load_graph("a,b\n0,1,2\n1,0\n", GraphFormat::matrix_csv, false), Error);
}

TEST_CASE("gml directed flag overrides the caller") {
  const std::string text = "graph [ directed 1 node [ id 0 label \"a\" ] node [ id 1 label \"b\" ] edge [ source 0 target 1 value 2 ] ]";
  const Graph g = load_graph(text, GraphFormat::gml, false);
  CHECK(g.directed());
  CHECK(g.weight(0, 1) == 2.0);
  CHECK(g.weight(1, 0) == 0.0);
}

TEST_CASE("format detection and names") {
  CHECK(format_from_path("x.csv") == GraphFormat::matrix_csv);
  CHECK(format_from_path("x.gml") == GraphFormat::gml);
  CHECK(format_from_path("x.edges") == GraphFormat::edge_list);
  CHECK(parse_graph_format(graph_format_name(GraphFormat::gml)) == GraphFormat::gml);
  CHECK_THROWS_AS(parse_graph_format("xml"), Error);
}

TEST_CASE("csv helpers") {
  CHECK(split_csv_line("a,\"b,c\",d") == std::vector<std::string>{"a", "b,c", "d"});
  CHECK(csv_escape("x,y") == "\"x,y\"");
  CHECK(std::stod(format_double(0.1)) == 0.1);
}

TEST_CASE("missing file is an io error") {
  try {
    read_file("/nonexistent/graph.edges");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io);
  }
}
