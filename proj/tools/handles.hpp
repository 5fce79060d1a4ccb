#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "borgia/borgia.h"

namespace cli {

class Failure : public std::runtime_error {
 public:
  Failure(std::string code, const std::string& message, int exit_code)
      : std::runtime_error(message), code_(std::move(code)), exit_code_(exit_code) {}

  const std::string& code() const noexcept { return code_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string code_;
  int exit_code_;
};

inline constexpr int kUsageExit = 64;

[[noreturn]] inline void usage_error(const std::string& message) { throw Failure("usage_error", message, kUsageExit); }

inline void check(borgia_status status) {
  if (status != BORGIA_OK) throw Failure(borgia_status_name(status), borgia_last_error(), static_cast<int>(status));
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using GraphPtr = std::unique_ptr<borgia_graph, Deleter<borgia_graph, borgia_graph_free>>;
using TemporalPtr = std::unique_ptr<borgia_temporal, Deleter<borgia_temporal, borgia_temporal_free>>;
using AffinityPtr = std::unique_ptr<borgia_affinity, Deleter<borgia_affinity, borgia_affinity_free>>;
using DendrogramPtr = std::unique_ptr<borgia_dendrogram, Deleter<borgia_dendrogram, borgia_dendrogram_free>>;
using PartitionPtr = std::unique_ptr<borgia_partition, Deleter<borgia_partition, borgia_partition_free>>;

/// Takes ownership of a library-allocated string.
inline std::string take(char* s) {
  std::string out = s ? s : "";
  borgia_string_free(s);
  return out;
}

}  // namespace cli
