#include "borgia/classic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "borgia/error.hpp"

namespace borgia {
namespace {

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
  return std::sqrt(s);
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

const char* feature_source_name(FeatureSource s) noexcept {
  return s == FeatureSource::adjacency_rows ? "adjacency-rows" : "affinity-rows";
}

FeatureSource parse_feature_source(std::string_view name) {
  if (name == "adjacency-rows" || name == "adjacency") return FeatureSource::adjacency_rows;
  if (name == "affinity-rows" || name == "affinity") return FeatureSource::affinity_rows;
  throw Error(ErrorCode::invalid_argument,
              "unknown feature source '" + std::string(name) + "' (expected adjacency-rows or affinity-rows)");
}

void ClassicConfig::validate() const {
  if (!(G > 0.0) || !std::isfinite(G)) throw Error(ErrorCode::out_of_range, "G must be positive");
  if (epsilon && (!(*epsilon > 0.0) || !std::isfinite(*epsilon))) {
    throw Error(ErrorCode::out_of_range, "epsilon must be positive");
  }
  if (delta && (!(*delta > 0.0) || !std::isfinite(*delta))) throw Error(ErrorCode::out_of_range, "delta must be positive");
  if (max_iterations == 0) throw Error(ErrorCode::out_of_range, "max_iterations must be positive");
}

double ParticleSystem::total_mass() const {
  double total = 0.0;
  for (double m : masses) total += m;
  return total;
}

ParticleSystem ParticleSystem::from_points(std::vector<std::vector<double>> points) {
  ParticleSystem sys;
  const std::size_t n = points.size();
  for (const auto& p : points) {
    if (p.size() != points.front().size()) throw Error(ErrorCode::dimension_mismatch, "particles differ in dimension");
  }
  sys.positions = std::move(points);
  sys.masses.assign(n, 1.0);
  sys.ids.resize(n);
  for (std::size_t i = 0; i < n; ++i) sys.ids[i] = i;
  sys.next_id = n;
  return sys;
}

std::vector<std::vector<double>> classic_accelerations(const ParticleSystem& sys, double G) {
  const std::size_t k = sys.size();
  const std::size_t dim = k ? sys.positions.front().size() : 0;
  std::vector<std::vector<double>> acc(k, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double r = distance(sys.positions[i], sys.positions[j]);
      if (r == 0.0) continue;
      const double inv = 0.5 * G / (r * r * r);
      for (std::size_t d = 0; d < dim; ++d) {
        const double diff = sys.positions[j][d] - sys.positions[i][d];
        acc[i][d] += inv * sys.masses[j] * diff;
        acc[j][d] -= inv * sys.masses[i] * diff;
      }
    }
  }
  return acc;
}

Fusion merge_particles(ParticleSystem& sys, std::size_t a, std::size_t b) {
  if (a >= sys.size() || b >= sys.size() || a == b) throw Error(ErrorCode::invalid_argument, "merge of a non-live pair");
  if (a > b) std::swap(a, b);
  const double ma = sys.masses[a];
  const double mb = sys.masses[b];
  const double mass = ma + mb;
  std::vector<double> centre(sys.positions[a].size());
  for (std::size_t d = 0; d < centre.size(); ++d) centre[d] = (ma * sys.positions[a][d] + mb * sys.positions[b][d]) / mass;
  const Fusion record{sys.t, sys.ids[a], sys.ids[b], sys.next_id, mass, false};

  for (std::size_t idx : {b, a}) {
    sys.positions.erase(sys.positions.begin() + static_cast<std::ptrdiff_t>(idx));
    sys.masses.erase(sys.masses.begin() + static_cast<std::ptrdiff_t>(idx));
    sys.ids.erase(sys.ids.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  sys.positions.push_back(std::move(centre));
  sys.masses.push_back(mass);
  sys.ids.push_back(sys.next_id++);
  return record;
}

std::vector<Fusion> merge_close(ParticleSystem& sys, double epsilon) {
  std::vector<Fusion> out;
  for (bool merged = true; merged && sys.size() > 1;) {
    merged = false;
    for (std::size_t i = 0; i < sys.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < sys.size() && !merged; ++j) {
        if (distance(sys.positions[i], sys.positions[j]) < epsilon) {
          out.push_back(merge_particles(sys, i, j));
          merged = true;
        }
      }
    }
  }
  return out;
}

ClassicStep classic_step(ParticleSystem& sys, double G, double epsilon, double delta) {
  ClassicStep step;
  if (sys.size() < 2) return step;
  const auto acc = classic_accelerations(sys, G);
  double fastest = 0.0;
  for (const auto& a : acc) fastest = std::max(fastest, norm(a));
  if (!(fastest > 0.0)) {
    // Only coincident particles remain; they merge without moving.
    step.fusions = merge_close(sys, std::max(epsilon, std::numeric_limits<double>::min()));
    return step;
  }
  const double dt2 = delta / fastest;
  step.dt = std::sqrt(dt2);
  step.fastest_displacement = fastest * dt2;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t d = 0; d < acc[i].size(); ++d) sys.positions[i][d] += acc[i][d] * dt2;
  }
  sys.t += step.dt;
  step.fusions = merge_close(sys, epsilon);
  return step;
}

ClassicResult classic_run(const Graph& g, const ClassicConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.size();
  if (n < 1) throw Error(ErrorCode::invalid_argument, "clustering needs at least one actor");
  const Matrix features =
      cfg.features == FeatureSource::adjacency_rows ? g.weights() : compute_affinity(g, cfg.affinity).values;
  std::vector<std::vector<double>> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = features.row(i);
    points[i].assign(row.begin(), row.end());
  }
  ParticleSystem sys = ParticleSystem::from_points(std::move(points));

  double widest = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) widest = std::max(widest, distance(sys.positions[i], sys.positions[j]));
  }
  ClassicResult result;
  result.epsilon = cfg.epsilon.value_or(widest > 0.0 ? 1e-3 * widest : 1.0);
  result.delta = cfg.delta.value_or(result.epsilon / 2.0);
  result.dendrogram.n = n;
  auto& fusions = result.dendrogram.fusions;

  auto initial = merge_close(sys, result.epsilon);
  fusions.insert(fusions.end(), initial.begin(), initial.end());
  while (sys.size() > 1) {
    if (result.iterations >= cfg.max_iterations) {
      throw Error(ErrorCode::stall, "classic gravity did not converge within " + std::to_string(cfg.max_iterations) +
                                        " iterations (" + std::to_string(sys.size()) + " particles left)");
    }
    auto step = classic_step(sys, cfg.G, result.epsilon, result.delta);
    ++result.iterations;
    fusions.insert(fusions.end(), step.fusions.begin(), step.fusions.end());
  }
  result.dendrogram.total_time = sys.t;
  return result;
}

}  // namespace borgia
