#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "borgia/graph.hpp"
#include "borgia/partition.hpp"

namespace borgia {

/// Newman modularity on the undirected reading of g (directed edges are
/// symmetrized by the larger of the two directions).
double modularity(const Graph& g, const Partition& part);

/// Li's modularity density: sum over communities of (2 L_in - L_out) / |c|,
/// with edge weights standing in for edge counts.
double modularity_density(const Graph& g, const Partition& part);

/// Normalized mutual information with arithmetic-mean normalization.
double nmi(const Partition& a, const Partition& b);

/// Adjusted Rand index.
double ari(const Partition& a, const Partition& b);

struct MetricReport {
  double modularity = 0.0;
  double modularity_density = 0.0;
  std::size_t k = 0;
  // Present only when a reference partition was supplied.
  std::optional<double> nmi;
  std::optional<double> ari;
};

MetricReport evaluate(const Graph& g, const Partition& part, const Partition* truth = nullptr);

/// `key: value` lines, one per metric.
std::string report_to_text(const MetricReport& r);
/// Header row plus one value row.
std::string report_to_csv(const MetricReport& r);

}  // namespace borgia
