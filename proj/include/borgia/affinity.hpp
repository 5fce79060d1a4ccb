#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "borgia/graph.hpp"
#include "borgia/matrix.hpp"

namespace borgia {

enum class AffinityKind {
  best_friend,
  best_common_friend,
  friends_forever,
  social_networking,
  machiavelli,
  combined,
};

const char* affinity_kind_name(AffinityKind kind) noexcept;
AffinityKind parse_affinity_kind(std::string_view name);

/// Pairwise actor affinities in [0, 1] with a zero diagonal.
struct AffinityMatrix {
  AffinityKind kind = AffinityKind::best_friend;
  double alpha = 1.0;  // only meaningful for combined
  Matrix values;

  std::size_t size() const noexcept { return values.rows(); }
  double operator()(std::size_t x, std::size_t y) const { return values(x, y); }
};

/// A one-level affinity description usable as the base of a derived affinity.
struct BaseAffinity {
  AffinityKind kind = AffinityKind::best_friend;
  double alpha = 1.0;
};

struct AffinitySpec {
  AffinityKind kind = AffinityKind::best_friend;
  double alpha = 1.0;
  // Base matrix for social_networking (default best_friend) and best_common_friend
  // (default: the adjacency weights).
  std::optional<BaseAffinity> base;
};

/// C(x,y) / sum_a C(x,a); rows with no outgoing weight are zero.
AffinityMatrix best_friend(const Graph& g);

/// max_z min(M(x,z), M(y,z)) / sum_a M(x,a) with z ranging over third parties,
/// where M is `base` when given and the adjacency weights otherwise.
AffinityMatrix best_common_friend(const Graph& g, const AffinityMatrix* base = nullptr);
Matrix best_common_friend_values(const Matrix& m);

/// Mean over slices of the per-slice best friend value.
AffinityMatrix friends_forever(const TemporalGraph& tg);

/// Unweighted mean of base(x', y) over the actors x' with base(x, x') > 0.
AffinityMatrix social_networking(const AffinityMatrix& base);
AffinityMatrix social_networking(const Graph& g, const BaseAffinity& base = {});

/// 1 - |I_x - I_y| / max(I_x, I_y), with I_a the sum of the unweighted total
/// degrees of the actors a points to.
AffinityMatrix machiavelli(const Graph& g);

/// alpha * best_friend + (1 - alpha) * best_common_friend.
AffinityMatrix combine(const Graph& g, double alpha);

/// Resolves any spec that does not need temporal input.
AffinityMatrix compute_affinity(const Graph& g, const AffinitySpec& spec);

/// Affinity for temporal input; non-temporal kinds are computed on the slice sum.
AffinityMatrix compute_affinity(const TemporalGraph& tg, const AffinitySpec& spec);

/// Matrix CSV with a label header, the same layout graphs use.
std::string affinity_to_matrix_csv(const AffinityMatrix& a, const std::vector<std::string>& labels);

/// Long-form `row,col,value` CSV with one line per matrix entry.
std::string affinity_to_long_csv(const AffinityMatrix& a, const std::vector<std::string>& labels);

}  // namespace borgia
