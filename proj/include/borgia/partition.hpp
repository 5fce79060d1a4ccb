#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace borgia {

/// Community membership of every actor. Community ids are contiguous from 0 and
/// numbered in order of each community's first member.
class Partition {
 public:
  Partition() = default;
  /// Accepts arbitrary non-negative labels and renumbers them canonically.
  explicit Partition(const std::vector<long long>& labels);

  static Partition singletons(std::size_t n);
  static Partition single_community(std::size_t n);

  std::size_t size() const noexcept { return assignment_.size(); }
  std::size_t community_count() const noexcept { return k_; }
  std::size_t community_of(std::size_t actor) const { return assignment_.at(actor); }
  const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

  std::vector<std::vector<std::size_t>> communities() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::size_t> assignment_;
  std::size_t k_ = 0;
};

/// `actor_label,community_id` CSV with a header row.
std::string partition_to_csv(const Partition& p, const std::vector<std::string>& labels);

/// Reads `actor_label,community` rows (header optional) and orders them by `labels`.
/// Community values may be any strings; they are renumbered canonically.
Partition partition_from_csv(std::string_view text, const std::vector<std::string>& labels);

}  // namespace borgia
