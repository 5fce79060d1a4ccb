#include "borgia/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "borgia/error.hpp"
#include "borgia/graph_io.hpp"

namespace borgia {
namespace {

Matrix row_normalized(const Matrix& c) {
  const std::size_t n = c.rows();
  Matrix out = Matrix::square(n);
  for (std::size_t x = 0; x < n; ++x) {
    double total = 0.0;
    for (double w : c.row(x)) total += w;
    if (total <= 0.0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x) out(x, y) = c(x, y) / total;
    }
  }
  return out;
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::out_of_range, "alpha must lie in [0, 1], got " + format_double(alpha));
  }
}

AffinityMatrix resolve_base(const Graph& g, const BaseAffinity& base) {
  switch (base.kind) {
    case AffinityKind::best_friend: return best_friend(g);
    case AffinityKind::best_common_friend: return best_common_friend(g);
    case AffinityKind::machiavelli: return machiavelli(g);
    case AffinityKind::combined: return combine(g, base.alpha);
    case AffinityKind::social_networking: return social_networking(best_friend(g));
    case AffinityKind::friends_forever:
      throw Error(ErrorCode::invalid_argument, "friends_forever cannot be a base affinity: it needs temporal input");
  }
  throw Error(ErrorCode::invalid_argument, "unknown base affinity");
}

Graph slice_sum(const TemporalGraph& tg) {
  const std::size_t n = tg.size();
  Matrix w = Matrix::square(n);
  bool directed = false;
  for (const auto& g : tg.slices()) {
    directed = directed || g.directed();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w(i, j) += g.weight(i, j);
    }
  }
  return Graph(tg.slice(0).labels(), std::move(w), directed);
}

}  // namespace

const char* affinity_kind_name(AffinityKind kind) noexcept {
  switch (kind) {
    case AffinityKind::best_friend: return "bf";
    case AffinityKind::best_common_friend: return "bcf";
    case AffinityKind::friends_forever: return "ff";
    case AffinityKind::social_networking: return "sn";
    case AffinityKind::machiavelli: return "ma";
    case AffinityKind::combined: return "combined";
  }
  return "unknown";
}

AffinityKind parse_affinity_kind(std::string_view name) {
  if (name == "bf" || name == "best-friend") return AffinityKind::best_friend;
  if (name == "bcf" || name == "best-common-friend") return AffinityKind::best_common_friend;
  if (name == "ff" || name == "friends-forever") return AffinityKind::friends_forever;
  if (name == "sn" || name == "social-networking") return AffinityKind::social_networking;
  if (name == "ma" || name == "machiavelli") return AffinityKind::machiavelli;
  if (name == "combined" || name == "mix") return AffinityKind::combined;
  throw Error(ErrorCode::invalid_argument,
              "unknown affinity kind '" + std::string(name) + "' (expected bf, bcf, ff, sn, ma, combined)");
}

AffinityMatrix best_friend(const Graph& g) {
  return {AffinityKind::best_friend, 1.0, row_normalized(g.weights())};
}

Matrix best_common_friend_values(const Matrix& m) {
  const std::size_t n = m.rows();
  // in_lists[z] = actors y with m(y, z) > 0
  std::vector<std::vector<std::size_t>> in_lists(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      if (y != z && m(y, z) > 0.0) in_lists[z].push_back(y);
    }
  }
  Matrix out = Matrix::square(n);
  std::vector<double> best(n);
  for (std::size_t x = 0; x < n; ++x) {
    double total = 0.0;
    for (double w : m.row(x)) total += w;
    if (total <= 0.0) continue;
    std::fill(best.begin(), best.end(), 0.0);
    for (std::size_t z = 0; z < n; ++z) {
      const double xz = m(x, z);
      if (z == x || xz <= 0.0) continue;
      for (std::size_t y : in_lists[z]) {
        if (y == x) continue;
        best[y] = std::max(best[y], std::min(xz, m(y, z)));
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x) out(x, y) = best[y] / total;
    }
  }
  return out;
}

AffinityMatrix best_common_friend(const Graph& g, const AffinityMatrix* base) {
  if (base && base->size() != g.size()) {
    throw Error(ErrorCode::dimension_mismatch, "base affinity has " + std::to_string(base->size()) +
                                                   " actors but the graph has " + std::to_string(g.size()));
  }
  return {AffinityKind::best_common_friend, 1.0, best_common_friend_values(base ? base->values : g.weights())};
}

AffinityMatrix friends_forever(const TemporalGraph& tg) {
  const std::size_t n = tg.size();
  Matrix sum = Matrix::square(n);
  for (const auto& slice : tg.slices()) {
    const Matrix bf = row_normalized(slice.weights());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum(i, j) += bf(i, j);
    }
  }
  const double count = static_cast<double>(tg.slice_count());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum(i, j) /= count;
  }
  return {AffinityKind::friends_forever, 1.0, std::move(sum)};
}

AffinityMatrix social_networking(const AffinityMatrix& base) {
  const std::size_t n = base.size();
  Matrix out = Matrix::square(n);
  std::vector<std::size_t> friends;
  for (std::size_t x = 0; x < n; ++x) {
    friends.clear();
    for (std::size_t f = 0; f < n; ++f) {
      if (f != x && base(x, f) > 0.0) friends.push_back(f);
    }
    if (friends.empty()) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      double total = 0.0;
      for (std::size_t f : friends) total += base(f, y);
      out(x, y) = total / static_cast<double>(friends.size());
    }
  }
  return {AffinityKind::social_networking, 1.0, std::move(out)};
}

AffinityMatrix social_networking(const Graph& g, const BaseAffinity& base) {
  return social_networking(resolve_base(g, base));
}

AffinityMatrix machiavelli(const Graph& g) {
  const std::size_t n = g.size();
  const auto deg = degrees(g, DegreeMode::total, Weighting::unweighted);
  std::vector<double> influence(n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      if (g.weight(a, x) > 0.0) influence[a] += deg[x];
    }
  }
  Matrix out = Matrix::square(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const double hi = std::max(influence[x], influence[y]);
      if (hi <= 0.0) continue;
      out(x, y) = 1.0 - std::abs(influence[x] - influence[y]) / hi;
    }
  }
  return {AffinityKind::machiavelli, 1.0, std::move(out)};
}

AffinityMatrix combine(const Graph& g, double alpha) {
  check_alpha(alpha);
  const Matrix bf = row_normalized(g.weights());
  const Matrix bcf = best_common_friend_values(g.weights());
  const std::size_t n = g.size();
  Matrix out = Matrix::square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = alpha * bf(i, j) + (1.0 - alpha) * bcf(i, j);
  }
  return {AffinityKind::combined, alpha, std::move(out)};
}

AffinityMatrix compute_affinity(const Graph& g, const AffinitySpec& spec) {
  switch (spec.kind) {
    case AffinityKind::best_friend: return best_friend(g);
    case AffinityKind::best_common_friend: {
      if (!spec.base) return best_common_friend(g);
      const AffinityMatrix base = resolve_base(g, *spec.base);
      return best_common_friend(g, &base);
    }
    case AffinityKind::social_networking: return social_networking(g, spec.base.value_or(BaseAffinity{}));
    case AffinityKind::machiavelli: return machiavelli(g);
    case AffinityKind::combined: return combine(g, spec.alpha);
    case AffinityKind::friends_forever:
      throw Error(ErrorCode::invalid_argument, "friends_forever needs temporal input (one graph per time slice)");
  }
  throw Error(ErrorCode::invalid_argument, "unknown affinity kind");
}

AffinityMatrix compute_affinity(const TemporalGraph& tg, const AffinitySpec& spec) {
  if (spec.kind == AffinityKind::friends_forever) return friends_forever(tg);
  return compute_affinity(slice_sum(tg), spec);
}

std::string affinity_to_matrix_csv(const AffinityMatrix& a, const std::vector<std::string>& labels) {
  if (labels.size() != a.size()) throw Error(ErrorCode::dimension_mismatch, "label count does not match affinity size");
  std::ostringstream out;
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << csv_escape(labels[i]);
  out << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out << (j ? "," : "") << format_double(a(i, j));
    out << '\n';
  }
  return out.str();
}

std::string affinity_to_long_csv(const AffinityMatrix& a, const std::vector<std::string>& labels) {
  if (labels.size() != a.size()) throw Error(ErrorCode::dimension_mismatch, "label count does not match affinity size");
  std::ostringstream out;
  out << "row,col,value\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      out << csv_escape(labels[i]) << ',' << csv_escape(labels[j]) << ',' << format_double(a(i, j)) << '\n';
    }
  }
  return out.str();
}

}  // namespace borgia
