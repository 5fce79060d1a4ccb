#include "borgia/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "borgia/affinity.hpp"
#include "borgia/error.hpp"
#include "borgia/graph_io.hpp"

namespace borgia {
namespace {

constexpr double kMinCollisionGap = 1e-9;

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double mass_term(double mi, double mj, double c) { return c == 0.0 ? 1.0 : std::pow(mi * mj, c); }

double size_penalty(double m, double p) { return p == 0.0 ? 1.0 : std::pow(m, p); }

// Collapses rows/columns a and b of a square matrix into one appended at the end.
Matrix merge_square(const Matrix& in, std::size_t a, std::size_t b, double wa, double wb, double diagonal) {
  const std::size_t k = in.rows();
  std::vector<std::size_t> keep;
  keep.reserve(k - 2);
  for (std::size_t i = 0; i < k; ++i) {
    if (i != a && i != b) keep.push_back(i);
  }
  const std::size_t m = keep.size();
  Matrix out = Matrix::square(m + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) out(r, c) = in(keep[r], keep[c]);
    out(r, m) = wa * in(keep[r], a) + wb * in(keep[r], b);
    out(m, r) = wa * in(a, keep[r]) + wb * in(b, keep[r]);
  }
  out(m, m) = diagonal;
  return out;
}

std::string describe_live(const SimulationState& state, const Graph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < state.size(); ++i) {
    out << (i ? "; " : "") << "{";
    const auto& members = state.live[i].members;
    for (std::size_t k = 0; k < members.size() && k < 8; ++k) out << (k ? "," : "") << g.label(members[k]);
    if (members.size() > 8) out << ",... (" << members.size() << " actors)";
    out << "}";
  }
  return out.str();
}

}  // namespace

const char* tnorm_name(TNorm t) noexcept { return t == TNorm::product ? "product" : "minimum"; }
const char* delta_mode_name(DeltaMode m) noexcept { return m == DeltaMode::fixed ? "static" : "dynamic-first"; }
const char* policy_name(Policy p) noexcept { return p == Policy::naive ? "naive" : "early-roman"; }

TNorm parse_tnorm(std::string_view name) {
  if (name == "product" || name == "prod") return TNorm::product;
  if (name == "minimum" || name == "min") return TNorm::minimum;
  throw Error(ErrorCode::invalid_argument, "unknown t-norm '" + std::string(name) + "' (expected product or minimum)");
}

DeltaMode parse_delta_mode(std::string_view name) {
  if (name == "static" || name == "fixed") return DeltaMode::fixed;
  if (name == "dynamic-first" || name == "dynamic") return DeltaMode::dynamic_first;
  throw Error(ErrorCode::invalid_argument, "unknown delta mode '" + std::string(name) + "' (expected static or dynamic-first)");
}

Policy parse_policy(std::string_view name) {
  if (name == "naive" || name == "linear") return Policy::naive;
  if (name == "early-roman" || name == "early_roman") return Policy::early_roman;
  throw Error(ErrorCode::invalid_argument, "unknown policy '" + std::string(name) + "' (expected naive or early-roman)");
}

void EngineConfig::validate(std::size_t n) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::out_of_range, "alpha must lie in [0, 1]");
  if (!(p >= 0.0) || !std::isfinite(p)) throw Error(ErrorCode::out_of_range, "p must be a non-negative real");
  if (!std::isfinite(c)) throw Error(ErrorCode::out_of_range, "c must be finite");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw Error(ErrorCode::out_of_range, "delta must be positive");
  if (max_stall_iterations == 0) throw Error(ErrorCode::out_of_range, "max_stall_iterations must be positive");
  if (target_k) {
    if (*target_k == 0) throw Error(ErrorCode::out_of_range, "target k must be positive");
    if (n != 0 && *target_k > n) {
      throw Error(ErrorCode::out_of_range, "target k = " + std::to_string(*target_k) + " exceeds the " +
                                               std::to_string(n) + " actors");
    }
  }
}

double SimulationState::total_mass() const {
  double total = 0.0;
  for (const auto& c : live) total += c.mass;
  return total;
}

std::size_t SimulationState::nonzero_affinity_pairs() const {
  std::size_t count = 0;
  for (const auto& p : partners) count += p.size();
  return count;
}

void SimulationState::rebuild_partners() {
  const std::size_t k = live.size();
  partners.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && affinity(i, j) > 0.0) partners[i].push_back(j);
    }
  }
}

SimulationState SimulationState::from_parts(std::vector<double> masses, Matrix influence, Matrix affinity) {
  const std::size_t k = masses.size();
  if (influence.rows() != k || !influence.is_square() || affinity.rows() != k || !affinity.is_square()) {
    throw Error(ErrorCode::dimension_mismatch, "influence and affinity must be square with one row per community");
  }
  SimulationState s;
  s.live.resize(k);
  for (std::size_t i = 0; i < k; ++i) s.live[i] = {i, {i}, masses[i]};
  s.influence = std::move(influence);
  s.affinity = std::move(affinity);
  s.next_id = k;
  s.rebuild_partners();
  return s;
}

SimulationState initialize(const Graph& g, const EngineConfig& cfg) {
  if (g.size() < 2) throw Error(ErrorCode::invalid_argument, "clustering needs at least two actors");
  cfg.validate(g.size());
  const auto masses = degrees(g, DegreeMode::total, cfg.mass_weighting);
  Matrix a = combine(g, cfg.alpha).values;
  Matrix s = a;
  for (std::size_t i = 0; i < g.size(); ++i) s(i, i) = 1.0;
  return SimulationState::from_parts(masses, std::move(s), std::move(a));
}

ForceField accumulate_forces(const SimulationState& state, const EngineConfig& cfg) {
  const std::size_t k = state.size();
  const double p = cfg.effective_p();
  ForceField field;
  field.forces.assign(k, std::vector<double>(k, 0.0));
  field.magnitude_sum.assign(k, 0.0);
  std::vector<double> diff(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto si = state.influence.row(i);
    auto& fi = field.forces[i];
    double magnitude = 0.0;
    for (std::size_t j : state.partners[i]) {
      ++field.visited_pairs;
      const auto sj = state.influence.row(j);
      double r2 = 0.0;
      for (std::size_t d = 0; d < k; ++d) {
        diff[d] = sj[d] - si[d];
        r2 += diff[d] * diff[d];
      }
      if (r2 == 0.0) {
        field.coincident.emplace_back(std::min(i, j), std::max(i, j));
        continue;
      }
      const double w = apply_tnorm(cfg.tnorm, mass_term(state.live[i].mass, state.live[j].mass, cfg.c),
                                   state.affinity(i, j));
      const double r = std::sqrt(r2);
      const double scale = w / (r2 * r);
      for (std::size_t d = 0; d < k; ++d) fi[d] += scale * diff[d];
      magnitude += w / r2;
    }
    const double penalty = size_penalty(state.live[i].mass, p);
    if (penalty > 0.0 && penalty != 1.0) {
      for (double& x : fi) x /= penalty;
      magnitude /= penalty;
    }
    field.magnitude_sum[i] = magnitude;
  }
  return field;
}

std::size_t fastest_community(const ForceField& field) {
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t i = 0; i < field.forces.size(); ++i) {
    const double n = norm(field.forces[i]);
    if (n > best_norm) {
      best_norm = n;
      best = i;
    }
  }
  if (best_norm <= 0.0) {
    // every resultant cancelled; fall back to the largest magnitude sum
    best = static_cast<std::size_t>(std::max_element(field.magnitude_sum.begin(), field.magnitude_sum.end()) -
                                    field.magnitude_sum.begin());
  }
  return best;
}

double compute_dt(const ForceField& field, double delta) {
  if (field.forces.empty()) throw Error(ErrorCode::stall, "no live communities");
  const std::size_t f = fastest_community(field);
  const double denominator = field.magnitude_sum[f];
  if (!(denominator > 0.0) || !std::isfinite(denominator)) {
    throw Error(ErrorCode::stall, "no pair of live communities exerts any attraction");
  }
  return delta / denominator;
}

Displacements attraction_step(const ForceField& field, double dt) {
  Displacements g = field.forces;
  for (auto& v : g) {
    for (double& x : v) x *= dt;
  }
  return g;
}

void apply_movement(SimulationState& state, const Displacements& g, double dt) {
  const std::size_t k = state.size();
  if (g.size() != k) throw Error(ErrorCode::dimension_mismatch, "one displacement per live community expected");
  for (std::size_t i = 0; i < k; ++i) {
    const double m = state.live[i].mass;
    if (m <= 0.0) continue;
    auto row = state.influence.row(i);
    for (std::size_t d = 0; d < k; ++d) row[d] += g[i][d] / m;
  }
  state.t += dt;
}

std::vector<std::pair<std::size_t, std::size_t>> detect_collisions(const SimulationState& state) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& s = state.influence;
  for (std::size_t i = 0; i < state.size(); ++i) {
    for (std::size_t j = i + 1; j < state.size(); ++j) {
      if (s(i, j) >= s(j, j) || s(j, i) >= s(i, i)) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

Fusion fuse(SimulationState& state, std::size_t a, std::size_t b) {
  const std::size_t k = state.size();
  if (a >= k || b >= k || a == b) {
    throw Error(ErrorCode::invalid_argument, "fusion pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                                 ") is not a pair of live communities");
  }
  if (a > b) std::swap(a, b);
  const Community& ca = state.live[a];
  const Community& cb = state.live[b];
  const double mass = ca.mass + cb.mass;
  const double wa = mass > 0.0 ? ca.mass / mass : 0.5;
  const double wb = mass > 0.0 ? cb.mass / mass : 0.5;

  Community merged;
  merged.id = state.next_id++;
  merged.mass = mass;
  merged.members = ca.members;
  merged.members.insert(merged.members.end(), cb.members.begin(), cb.members.end());
  std::sort(merged.members.begin(), merged.members.end());

  const Fusion record{state.t, ca.id, cb.id, merged.id, mass, false};
  const double self_influence = wa * state.influence(a, a) + wb * state.influence(b, b);
  state.influence = merge_square(state.influence, a, b, wa, wb, self_influence);
  state.affinity = merge_square(state.affinity, a, b, wa, wb, 0.0);

  std::vector<Community> live;
  live.reserve(k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (i != a && i != b) live.push_back(std::move(state.live[i]));
  }
  live.push_back(std::move(merged));
  state.live = std::move(live);
  state.rebuild_partners();
  return record;
}

double first_iteration_delta(const SimulationState& state) {
  double best = INFINITY;
  for (std::size_t i = 0; i < state.size(); ++i) {
    for (std::size_t j : state.partners[i]) {
      const double gap = state.influence(j, j) - state.influence(i, j);
      best = std::min(best, std::max(kMinCollisionGap, gap));
    }
  }
  if (!std::isfinite(best)) throw Error(ErrorCode::stall, "no pair of live communities has positive affinity");
  return best;
}

RunResult run(const Graph& g, const EngineConfig& cfg, const TraceCallback& trace) {
  SimulationState state = initialize(g, cfg);
  const std::size_t n = g.size();
  RunResult result;
  result.dendrogram.n = n;
  auto& fusions = result.dendrogram.fusions;

  for (std::size_t i = 0; i < n; ++i) {
    if (state.live[i].mass == 0.0 && state.partners[i].empty()) {
      bool attracted = false;
      for (std::size_t j = 0; j < n && !attracted; ++j) attracted = state.affinity(j, i) > 0.0;
      if (!attracted) result.warnings.push_back("actor '" + g.label(i) + "' is isolated and can only be force-merged");
    }
  }

  auto cascade = [&] {
    std::size_t fused = 0;
    for (;;) {
      const auto pairs = detect_collisions(state);
      if (pairs.empty()) return fused;
      fusions.push_back(fuse(state, pairs.front().first, pairs.front().second));
      ++fused;
    }
  };

  cascade();
  std::size_t since_fusion = 0;
  bool first_iteration = true;
  while (state.size() > 1) {
    if (state.nonzero_affinity_pairs() == 0) break;
    ForceField field = accumulate_forces(state, cfg);
    if (!field.coincident.empty()) {
      // Coincident influence vectors already satisfy the collision test.
      fusions.push_back(fuse(state, field.coincident.front().first, field.coincident.front().second));
      cascade();
      since_fusion = 0;
      continue;
    }
    double delta = cfg.delta;
    if (first_iteration && cfg.delta_mode == DeltaMode::dynamic_first) delta = first_iteration_delta(state);
    first_iteration = false;

    const double dt = compute_dt(field, delta);
    const Displacements step = attraction_step(field, dt);
    const std::size_t fastest = fastest_community(field);
    const std::size_t nonzero = state.nonzero_affinity_pairs();
    const std::size_t live_before = state.size();
    apply_movement(state, step, dt);
    ++state.iteration;
    if (trace) {
      trace({state.iteration, state.t, dt, delta, live_before, field.visited_pairs, nonzero, norm(step[fastest])});
    }
    if (cascade() > 0) {
      since_fusion = 0;
    } else if (++since_fusion >= cfg.max_stall_iterations) {
      throw Error(ErrorCode::stall, "no fusion in " + std::to_string(since_fusion) +
                                        " iterations; live communities: " + describe_live(state, g));
    }
  }

  if (state.size() > 1) {
    // Remaining communities never attract each other: merge them by adjacency.
    const double last = fusions.empty() ? 0.0 : fusions.back().t;
    const double forced_t = last > 0.0 ? 2.0 * last : 1.0;
    state.t = std::max(state.t, forced_t);
    result.warnings.push_back("communities without mutual affinity were force-merged: " + describe_live(state, g));
    while (state.size() > 1) {
      std::size_t best_a = 0, best_b = 1;
      double best_w = -1.0;
      for (std::size_t a = 0; a < state.size(); ++a) {
        for (std::size_t b = a + 1; b < state.size(); ++b) {
          double w = 0.0;
          for (std::size_t x : state.live[a].members) {
            for (std::size_t y : state.live[b].members) w += g.weight(x, y) + g.weight(y, x);
          }
          if (w > best_w) {
            best_w = w;
            best_a = a;
            best_b = b;
          }
        }
      }
      Fusion f = fuse(state, best_a, best_b);
      f.forced = true;
      fusions.push_back(f);
      ++result.forced_fusions;
    }
  }

  result.dendrogram.total_time = fusions.empty() ? 0.0 : fusions.back().t;
  result.iterations = state.iteration;
  return result;
}

Partition select_configuration(const Dendrogram& d, const EngineConfig& cfg) {
  if (cfg.target_k) return select_fixed_k(d, *cfg.target_k);
  return select_by_score(d);
}

}  // namespace borgia
