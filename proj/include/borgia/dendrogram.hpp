#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "borgia/partition.hpp"

namespace borgia {

/// One merge event. Leaves are ids 0..n-1; the f-th fusion creates id n + f.
struct Fusion {
  double t = 0.0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t id = 0;
  double mass = 0.0;
  bool forced = false;  // last-resort merge of communities that could never attract

  bool operator==(const Fusion&) const = default;
};

struct Dendrogram {
  std::size_t n = 0;
  std::vector<Fusion> fusions;
  double total_time = 0.0;

  bool operator==(const Dendrogram&) const = default;
};

/// Checks the merge-tree contract: n - 1 fusions, non-decreasing timestamps,
/// sequential ids, and each id consumed at most once. Throws on violation.
void validate_dendrogram(const Dendrogram& d);

/// A partition that existed between two consecutive fusions.
struct Configuration {
  std::size_t fusions_applied = 0;
  std::size_t k = 0;
  double lifespan = 0.0;
  double score = 0.0;  // lifespan * ln(k)
};

/// Every inter-fusion configuration except the all-singleton start and the final
/// single community, in fusion order.
std::vector<Configuration> enumerate_configurations(const Dendrogram& d);

/// The partition after applying the first `fusions_applied` fusions.
Partition cut_after(const Dendrogram& d, std::size_t fusions_applied);

/// Maximizes lifespan * ln(k); ties keep the earlier configuration. Falls back to
/// the final single community when no candidate configuration exists.
Partition select_by_score(const Dendrogram& d);

/// The configuration that lasted longest (ties keep the earlier one).
Partition select_by_lifespan(const Dendrogram& d);

/// Exactly k communities, taken at the last moment k communities existed.
Partition select_fixed_k(const Dendrogram& d, std::size_t k);

/// JSON document: {"n": .., "total_time": .., "fusions": [{"t", "left", "right", "new", "mass", "forced"}]}.
std::string dendrogram_to_json(const Dendrogram& d);
Dendrogram dendrogram_from_json(std::string_view text);

}  // namespace borgia
