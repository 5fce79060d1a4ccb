#include <doctest.h>

#include <random>

#include "borgia/error.hpp"
#include "borgia/graph.hpp"
#include "fixtures.hpp"

using namespace borgia;

TEST_CASE("weighted out-degree follows the adjacency row") {
  const Graph g = fixtures::fig1();
  const auto d = *g.index_of("d");
  CHECK(degree(g, d, DegreeMode::out) == 8.0);
  CHECK(degree(g, d, DegreeMode::in) == 0.0);
  CHECK(degree(g, *g.index_of("c"), DegreeMode::in) == 10.0);
  CHECK(degree(g, *g.index_of("b"), DegreeMode::total, Weighting::unweighted) == 3.0);
}

TEST_CASE("isolated actor has zero degree") {
  const Graph g = load_graph("a b\nz", GraphFormat::edge_list, false);
  CHECK(degree(g, *g.index_of("z")) == 0.0);
}

TEST_CASE("undirected degree counts each incident edge once") {
  const Graph g = fixtures::triangle();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(degree(g, i) == 2.0);
    CHECK(degree(g, i, DegreeMode::in) == 2.0);
  }
}

TEST_CASE("density") {
  CHECK(density(fixtures::fig1()) == doctest::Approx(4.0 / 12.0));
  CHECK(density(fixtures::triangle()) == 1.0);
  CHECK(density(fixtures::path(4)) == doctest::Approx(0.5));
}

TEST_CASE("edge count") {
  CHECK(fixtures::fig1().edge_count() == 4);
  CHECK(fixtures::triangle().edge_count() == 3);
}

TEST_CASE("constructor rejects broken invariants") {
  Matrix loop = Matrix::square(2);
  loop(0, 0) = 1.0;
  CHECK_THROWS_AS(Graph({"a", "b"}, loop, false), Error);

  Matrix asym = Matrix::square(2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(Graph({"a", "b"}, asym, false), Error);
  CHECK_NOTHROW(Graph({"a", "b"}, asym, true));

  Matrix neg = Matrix::square(2);
  neg(0, 1) = -1.0;
  CHECK_THROWS_AS(Graph({"a", "b"}, neg, true), Error);

  CHECK_THROWS_AS(Graph({"a", "a"}, Matrix::square(2), true), Error);
  CHECK_THROWS_AS(Graph({"a"}, Matrix::square(2), true), Error);
}

TEST_CASE("builder accumulates repeated records and keeps first-appearance order") {
  GraphBuilder b(false);
  b.add_edge("x", "y", 1.0);
  b.add_edge("y", "x", 2.0);
  b.add_edge("y", "z", 1.0);
  const Graph g = b.build();
  CHECK(g.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(g.weight(0, 1) == 3.0);
  CHECK(g.weight(1, 0) == 3.0);
  CHECK(b.edge_records() == 3);
}

TEST_CASE("builder rejects self-loops") {
  GraphBuilder b(true);
  CHECK_THROWS_AS(b.add_edge("x", "x", 1.0), Error);
}

TEST_CASE("property: undirected random graphs stay symmetric and degree sums equal twice the weight") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = fixtures::random_graph(rng, 2 + trial % 20, 0.3, false, true);
    double deg_sum = 0.0, weight_sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      deg_sum += degree(g, i);
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        REQUIRE(g.weight(i, j) == g.weight(j, i));
        weight_sum += g.weight(i, j);
      }
    }
    CHECK(deg_sum == doctest::Approx(2.0 * weight_sum));
  }
}
