#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "borgia/affinity.hpp"
#include "borgia/dendrogram.hpp"
#include "borgia/graph.hpp"

namespace borgia {

enum class FeatureSource { adjacency_rows, affinity_rows };

const char* feature_source_name(FeatureSource s) noexcept;
FeatureSource parse_feature_source(std::string_view name);

struct ClassicConfig {
  double G = 1.0;
  // Unset means 1e-3 of the largest initial pairwise distance.
  std::optional<double> epsilon;
  // Unset means half of epsilon, so no two particles can pass through each other.
  std::optional<double> delta;
  std::size_t max_iterations = 10'000'000;
  FeatureSource features = FeatureSource::adjacency_rows;
  AffinitySpec affinity{AffinityKind::combined, 0.7, std::nullopt};

  void validate() const;
};

/// Point masses in R^d that merge when closer than epsilon.
struct ParticleSystem {
  std::vector<std::vector<double>> positions;
  std::vector<double> masses;
  std::vector<std::size_t> ids;
  double t = 0.0;
  std::size_t next_id = 0;

  std::size_t size() const noexcept { return positions.size(); }
  double total_mass() const;

  /// Unit masses at the given coordinates, ids 0..n-1.
  static ParticleSystem from_points(std::vector<std::vector<double>> points);
};

/// Acceleration factor a_i with g(i) = a_i * dt^2 = 1/2 G sum_j m_j (s_j - s_i) / |s_j - s_i|^3 dt^2.
std::vector<std::vector<double>> classic_accelerations(const ParticleSystem& sys, double G);

/// Merges particles a and b at their centre of mass, appended at the end.
Fusion merge_particles(ParticleSystem& sys, std::size_t a, std::size_t b);

/// Merges every pair closer than epsilon, rescanning after each merge.
std::vector<Fusion> merge_close(ParticleSystem& sys, double epsilon);

struct ClassicStep {
  double dt = 0.0;
  double fastest_displacement = 0.0;
  std::vector<Fusion> fusions;
};

/// One movement of every particle (the fastest moves exactly delta) followed by
/// merging. A single particle is left untouched.
ClassicStep classic_step(ParticleSystem& sys, double G, double epsilon, double delta);

struct ClassicResult {
  Dendrogram dendrogram;
  std::size_t iterations = 0;
  double epsilon = 0.0;
  double delta = 0.0;
};

/// Unit-mass particles at the rows of the adjacency (or affinity) matrix, run
/// until one particle remains.
ClassicResult classic_run(const Graph& g, const ClassicConfig& cfg);

}  // namespace borgia
