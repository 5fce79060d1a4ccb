#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "borgia/dendrogram.hpp"
#include "borgia/graph.hpp"
#include "borgia/matrix.hpp"
#include "borgia/partition.hpp"

namespace borgia {

enum class TNorm { product, minimum };

inline double apply_tnorm(TNorm t, double a, double b) noexcept {
  return t == TNorm::product ? a * b : (a < b ? a : b);
}

enum class DeltaMode { fixed, dynamic_first };

// naive ignores size; early_roman divides attraction by m^p.
enum class Policy { naive, early_roman };

const char* tnorm_name(TNorm t) noexcept;
const char* delta_mode_name(DeltaMode m) noexcept;
const char* policy_name(Policy p) noexcept;
TNorm parse_tnorm(std::string_view name);
DeltaMode parse_delta_mode(std::string_view name);
Policy parse_policy(std::string_view name);

struct EngineConfig {
  double alpha = 0.7;
  double p = 3.0;
  double c = 0.0;
  TNorm tnorm = TNorm::product;
  double delta = 0.1;
  DeltaMode delta_mode = DeltaMode::dynamic_first;
  Policy policy = Policy::early_roman;
  std::optional<std::size_t> target_k;
  std::size_t max_stall_iterations = 1'000'000;
  Weighting mass_weighting = Weighting::unweighted;

  /// The greedy expanse exponent actually applied (0 under the naive policy).
  double effective_p() const noexcept { return policy == Policy::naive ? 0.0 : p; }

  /// Throws on out-of-range fields; `n` bounds target_k when nonzero.
  void validate(std::size_t n = 0) const;
};

struct Community {
  std::size_t id = 0;
  std::vector<std::size_t> members;
  double mass = 0.0;
};

/// Live communities with their influence (S) and affinity (A) matrices.
/// Row i of `influence` is the influence vector of community i; entry (i, j)
/// is the influence of j over i. Communities are kept in ascending id order.
struct SimulationState {
  std::vector<Community> live;
  Matrix influence;
  Matrix affinity;
  double t = 0.0;
  std::size_t iteration = 0;
  std::size_t next_id = 0;
  // partners[i] = live positions j with affinity(i, j) > 0, ascending.
  std::vector<std::vector<std::size_t>> partners;

  std::size_t size() const noexcept { return live.size(); }
  void rebuild_partners();
  double total_mass() const;
  /// Ordered pairs (i, j), i != j, with affinity(i, j) > 0.
  std::size_t nonzero_affinity_pairs() const;

  /// Builds a state directly from parts (ids 0..k-1); used by tests and tools.
  static SimulationState from_parts(std::vector<double> masses, Matrix influence, Matrix affinity);
};

SimulationState initialize(const Graph& g, const EngineConfig& cfg);

/// Per-unit-dt attraction of every live community. g_i = forces[i] * dt.
struct ForceField {
  std::vector<std::vector<double>> forces;
  // Sum over partners of the force magnitudes, already divided by m_i^p.
  std::vector<double> magnitude_sum;
  std::size_t visited_pairs = 0;
  // True when some influence vectors coincided with nonzero affinity.
  std::vector<std::pair<std::size_t, std::size_t>> coincident;
};

ForceField accumulate_forces(const SimulationState& state, const EngineConfig& cfg);

/// Index of the community with the largest per-unit-dt force.
std::size_t fastest_community(const ForceField& field);

/// Time step that moves the fastest community by at most `delta`. Throws when
/// no pair exerts any force.
double compute_dt(const ForceField& field, double delta);

using Displacements = std::vector<std::vector<double>>;

/// g_i = forces[i] * dt.
Displacements attraction_step(const ForceField& field, double dt);

/// s_i <- s_i + g_i / m_i and t <- t + dt.
void apply_movement(SimulationState& state, const Displacements& g, double dt);

/// Unordered pairs (i, j), i < j, of live positions where s_ij >= s_jj or
/// s_ji >= s_ii, in ascending lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> detect_collisions(const SimulationState& state);

/// Merges live positions a and b into a new community appended at the end.
Fusion fuse(SimulationState& state, std::size_t a, std::size_t b);

/// Smallest collision gap s_jj - s_ij over ordered pairs with positive affinity,
/// clamped below by 1e-9.
double first_iteration_delta(const SimulationState& state);

struct IterationTrace {
  std::size_t iteration = 0;
  double t = 0.0;
  double dt = 0.0;
  double delta = 0.0;
  std::size_t live = 0;
  std::size_t visited_pairs = 0;
  std::size_t nonzero_pairs = 0;
  double fastest_displacement = 0.0;  // |g_F|
};

using TraceCallback = std::function<void(const IterationTrace&)>;

struct RunResult {
  Dendrogram dendrogram;
  std::size_t iterations = 0;
  std::size_t forced_fusions = 0;
  std::vector<std::string> warnings;
};

/// Runs the simulation until one community remains.
RunResult run(const Graph& g, const EngineConfig& cfg, const TraceCallback& trace = {});

/// Picks the partition: fixed-k when cfg.target_k is set, score otherwise.
Partition select_configuration(const Dendrogram& d, const EngineConfig& cfg);

}  // namespace borgia
