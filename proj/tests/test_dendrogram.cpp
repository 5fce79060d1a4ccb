#include <doctest.h>

#include <cmath>

#include "borgia/dendrogram.hpp"
#include "borgia/error.hpp"

using namespace borgia;

namespace {

// Five leaves; the 4-community configuration lasts 5 and the 2-community one lasts 7.
Dendrogram scored() {
  Dendrogram d;
  d.n = 5;
  d.fusions = {{0.0, 0, 1, 5, 2, false}, {5.0, 2, 3, 6, 2, false}, {5.0, 5, 6, 7, 4, false}, {12.0, 4, 7, 8, 5, false}};
  d.total_time = 12.0;
  return d;
}

}  // namespace

TEST_CASE("score prefers stable configurations with more communities") {
  const auto d = scored();
  const auto configs = enumerate_configurations(d);
  REQUIRE(configs.size() == 3);
  CHECK(configs[0].k == 4);
  CHECK(configs[0].score == doctest::Approx(5.0 * std::log(4.0)));
  CHECK(configs[2].k == 2);
  CHECK(configs[2].score == doctest::Approx(7.0 * std::log(2.0)));
  CHECK(select_by_score(d).community_count() == 4);
  CHECK(select_by_lifespan(d).community_count() == 2);
}

TEST_CASE("score argmax ignores the logarithm base") {
  const auto configs = enumerate_configurations(scored());
  auto argmax = [&](double base) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < configs.size(); ++i) {
      if (configs[i].lifespan * std::log(configs[i].k) / std::log(base) >
          configs[best].lifespan * std::log(configs[best].k) / std::log(base)) {
        best = i;
      }
    }
    return best;
  };
  CHECK(argmax(2.0) == argmax(10.0));
  CHECK(argmax(std::exp(1.0)) == argmax(3.0));
}

TEST_CASE("fixed-k cuts") {
  const auto d = scored();
  CHECK(select_fixed_k(d, 5) == Partition::singletons(5));
  CHECK(select_fixed_k(d, 1) == Partition::single_community(5));
  CHECK(select_fixed_k(d, 3) == Partition(std::vector<long long>{0, 0, 1, 1, 2}));
  CHECK_THROWS_AS(select_fixed_k(d, 0), Error);
  CHECK_THROWS_AS(select_fixed_k(d, 6), Error);
}

TEST_CASE("cut after applies a prefix of the fusions") {
  const auto d = scored();
  CHECK(cut_after(d, 0) == Partition::singletons(5));
  CHECK(cut_after(d, 3) == Partition(std::vector<long long>{0, 0, 0, 0, 1}));
}

TEST_CASE("validation") {
  CHECK_NOTHROW(validate_dendrogram(scored()));
  auto back = scored();
  back.fusions[1].t = -1.0;
  CHECK_THROWS_AS(validate_dendrogram(back), Error);
  auto reuse = scored();
  reuse.fusions[2].right = 0;
  CHECK_THROWS_AS(validate_dendrogram(reuse), Error);
  auto short_tree = scored();
  short_tree.fusions.pop_back();
  CHECK_THROWS_AS(validate_dendrogram(short_tree), Error);
}

TEST_CASE("json round trip") {
  const auto d = scored();
  CHECK(dendrogram_from_json(dendrogram_to_json(d)) == d);
  CHECK_THROWS_AS(dendrogram_from_json("{"), Error);
  CHECK_THROWS_AS(dendrogram_from_json("{\"n\": 2}"), Error);
}

TEST_CASE("partition canonical numbering and csv") {
  const Partition p(std::vector<long long>{7, 3, 7, 9});
  CHECK(p.assignment() == std::vector<std::size_t>{0, 1, 0, 2});
  CHECK(p.community_count() == 3);
  const std::vector<std::string> labels{"a", "b", "c", "d"};
  CHECK(partition_from_csv(partition_to_csv(p, labels), labels) == p);
  CHECK_THROWS_AS(partition_from_csv("actor,community\na,1\n", labels), Error);
}
