#include <doctest.h>

#include <algorithm>
#include <random>

#include "borgia/datasets.hpp"
#include "borgia/error.hpp"
#include "borgia/metrics.hpp"

using namespace borgia;

namespace {

double weight(const Graph& g, std::string_view a, std::string_view b) { return g.weight(*g.index_of(a), *g.index_of(b)); }

}  // namespace

TEST_CASE("karate benchmark is bundled") {
  const auto d = load_benchmark("karate");
  CHECK(d.graph.size() == 34);
  CHECK(d.graph.edge_count() == 78);
  CHECK_FALSE(d.graph.directed());
  REQUIRE(d.ground_truth);
  CHECK(d.ground_truth->community_count() == 2);
  double mass = 0.0;
  for (std::size_t i = 0; i < d.graph.size(); ++i) mass += degree(d.graph, i, DegreeMode::total, Weighting::unweighted);
  CHECK(mass == 156.0);
  CHECK(ari(*d.ground_truth, *d.ground_truth) == 1.0);
}

TEST_CASE("unknown benchmark lists the available ones") {
  try {
    load_benchmark("nope");
    FAIL("expected not_found");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_found);
    CHECK(std::string(e.what()).find("karate") != std::string::npos);
  }
  CHECK_THROWS_AS(benchmark_provenance("nope"), Error);
  CHECK(std::find(benchmark_names().begin(), benchmark_names().end(), "football") != benchmark_names().end());
}

TEST_CASE("cooccurrence of two paragraphs") {
  CorpusSpec spec;
  spec.text = "a b. \n\n a c.";
  spec.top_n = 3;
  const auto c = build_cooccurrence(spec);
  REQUIRE(c.graph.size() == 3);
  CHECK(weight(c.graph, "a", "b") == 1.0);
  CHECK(weight(c.graph, "a", "c") == 1.0);
  CHECK(weight(c.graph, "b", "c") == 0.0);
  CHECK(c.frequencies[*c.graph.index_of("a")] == 2);
}

TEST_CASE("cooccurrence honours stopwords and top_n prefix") {
  CorpusSpec spec;
  spec.text = "The cat and the dog.\n\nThe cat sat.\n\nA dog, a cat, a bird.";
  spec.stopwords = default_stopwords();
  spec.top_n = 2;
  const auto small = build_cooccurrence(spec);
  CHECK(small.graph.labels() == std::vector<std::string>{"cat", "dog"});
  spec.top_n = 10;
  const auto large = build_cooccurrence(spec);
  CHECK(std::equal(small.graph.labels().begin(), small.graph.labels().end(), large.graph.labels().begin()));
  CHECK(weight(large.graph, "cat", "dog") == 2.0);
}

TEST_CASE("chapter offsets produce slices that sum to the whole") {
  CorpusSpec spec;
  spec.text = "x y\n\nx z\n\ny z\n\nx y";
  spec.top_n = 3;
  spec.chapter_offsets = {0, 10};
  const auto c = build_cooccurrence(spec);
  REQUIRE(c.slices);
  CHECK(c.slices->slice_count() == 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(c.slices->slice(0).weight(i, j) + c.slices->slice(1).weight(i, j) == c.graph.weight(i, j));
    }
  }
  CHECK(parse_chapter_offsets("0\n10\n") == std::vector<std::size_t>{0, 10});
  CHECK_THROWS_AS(parse_chapter_offsets("# none\n"), Error);
  CHECK_THROWS_AS(parse_chapter_offsets("x\n"), Error);
}

TEST_CASE("tokenizer and paragraphs") {
  CHECK(tokenize("Hello, WORLD! it's 42") == std::vector<std::string>{"hello", "world", "it", "s"});
  CHECK(split_paragraphs("a\n\n\nb\n  \nc").size() == 3);
}

TEST_CASE("votes accumulate points") {
  const Graph g = load_votes("year,from,to,points\n2010,SE,NO,12\n", 2000, 2020);
  CHECK(g.directed());
  CHECK(g.edge_count() == 1);
  CHECK(weight(g, "SE", "NO") == 12.0);
  CHECK(weight(g, "NO", "SE") == 0.0);

  const Graph two = load_votes("year,from,to,points\n2010,SE,NO,12\n2011,SE,NO,8\n1990,SE,DK,5\n", 2000, 2020);
  CHECK(weight(two, "SE", "NO") == 20.0);
}

TEST_CASE("votes errors") {
  CHECK_THROWS_WITH_AS(load_votes("year,from,to,points\n2010,SE,NO,12\n", 2015, 2020), doctest::Contains("no rows selected"), Error);
  CHECK_THROWS_AS(load_votes("year,from,to\n2010,SE,NO\n", 2000, 2020), Error);
  CHECK_THROWS_AS(load_votes("year,from,to,points\n2010,SE,NO,x\n", 2000, 2020), Error);
  CHECK_THROWS_AS(load_votes("year,from,to,points\n2010,SE,NO,-3\n", 2000, 2020), Error);
}

TEST_CASE("votes ignore row order") {
  const std::string a = "year,from,to,points\n2010,SE,NO,12\n2010,NO,DK,5\n2011,DK,SE,3\n";
  const std::string b = "year,from,to,points\n2011,DK,SE,3\n2010,NO,DK,5\n2010,SE,NO,12\n";
  CHECK(load_votes(a, 2000, 2020) == load_votes(b, 2000, 2020));
}

TEST_CASE("synthetic vote network matches its size contract") {
  const Graph g = synthetic_vote_network(52, 2369, 60, 1);
  CHECK(g.size() == 52);
  CHECK(g.edge_count() == 2369);
  CHECK(g.directed());
  CHECK(synthetic_vote_network(52, 2369, 60, 1) == g);
  CHECK_THROWS_AS(synthetic_vote_network(3, 7, 1, 1), Error);
}

TEST_CASE("edge sampling") {
  const Graph g = synthetic_vote_network(20, 150, 5, 2);
  const Graph half = sample_edges(g, 0.5, 3);
  CHECK(half.size() == 20);
  CHECK(half.edge_count() == 75);
  for (std::size_t i = 0; i < 20; ++i) {
    for (std::size_t j = 0; j < 20; ++j) {
      if (half.weight(i, j) > 0.0) CHECK(half.weight(i, j) == g.weight(i, j));
    }
  }
  CHECK(sample_edges(g, 1.0, 3) == g);
  CHECK(sample_edges(g, 0.5, 3) == half);
  CHECK_THROWS_AS(sample_edges(g, 1.5, 3), Error);
}
