#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "borgia/graph.hpp"
#include "borgia/graph_io.hpp"
#include "borgia/partition.hpp"

namespace fixtures {

inline borgia::Graph fig1() { return borgia::load_graph("a b 5\nb c 3\nd b 1\nd c 7", borgia::GraphFormat::edge_list, true); }

inline borgia::Graph triangle() { return borgia::load_graph("a b\nb c\nc a", borgia::GraphFormat::edge_list, false); }

inline borgia::Graph path(std::size_t n) {
  std::string text;
  for (std::size_t i = 0; i + 1 < n; ++i) text += "v" + std::to_string(i) + " v" + std::to_string(i + 1) + "\n";
  return borgia::load_graph(text, borgia::GraphFormat::edge_list, false);
}

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("n" + std::to_string(i));
  return out;
}

/// Random graph with edge probability `p`; weights are 1 when `weighted` is false.
inline borgia::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p, bool directed, bool weighted) {
  std::bernoulli_distribution edge(p);
  std::uniform_int_distribution<int> weight(1, 9);
  borgia::Matrix w = borgia::Matrix::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j || !edge(rng)) continue;
      const double v = weighted ? weight(rng) : 1.0;
      w(i, j) = v;
      if (!directed) w(j, i) = v;
    }
  }
  return borgia::Graph(labels(n), std::move(w), directed);
}

/// Random graph where actor 0 is a hub linked to everyone, plus sparse extra edges.
inline borgia::Graph hub_graph(std::mt19937_64& rng, std::size_t n, double p) {
  borgia::Graph base = random_graph(rng, n, p, false, true);
  borgia::Matrix w = base.weights();
  for (std::size_t j = 1; j < n; ++j) {
    if (w(0, j) == 0.0) w(0, j) = w(j, 0) = 1.0;
  }
  return borgia::Graph(base.labels(), std::move(w), false);
}

inline borgia::Partition random_partition(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<long long> label(0, static_cast<long long>(k) - 1);
  std::vector<long long> v(n);
  for (auto& x : v) x = label(rng);
  return borgia::Partition(v);
}

}  // namespace fixtures
