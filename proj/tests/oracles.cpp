#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {
namespace {

double sym(const borgia::Graph& g, std::size_t i, std::size_t j) { return std::max(g.weight(i, j), g.weight(j, i)); }

bool same(const borgia::Partition& p, std::size_t i, std::size_t j) { return p.community_of(i) == p.community_of(j); }

}  // namespace

double modularity(const borgia::Graph& g, const borgia::Partition& p) {
  const std::size_t n = g.size();
  std::vector<double> k(n, 0.0);
  double two_m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      k[i] += sym(g, i, j);
      two_m += sym(g, i, j);
    }
  }
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (same(p, i, j)) q += sym(g, i, j) - k[i] * k[j] / two_m;
    }
  }
  return q / two_m;
}

double modularity_density(const borgia::Graph& g, const borgia::Partition& p) {
  double d = 0.0;
  for (const auto& members : p.communities()) {
    double in = 0.0, out = 0.0;
    for (std::size_t i : members) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (same(p, i, j)) {
          in += sym(g, i, j);
        } else {
          out += sym(g, i, j);
        }
      }
    }
    d += (in - out) / static_cast<double>(members.size());
  }
  return d;
}

double ari(const borgia::Partition& a, const borgia::Partition& b) {
  const std::size_t n = a.size();
  double both = 0.0, only_a = 0.0, only_b = 0.0, pairs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool sa = same(a, i, j), sb = same(b, i, j);
      both += sa && sb;
      only_a += sa && !sb;
      only_b += !sa && sb;
      pairs += 1.0;
    }
  }
  const double same_a = both + only_a, same_b = both + only_b;
  const double expected = same_a * same_b / pairs;
  const double best = (same_a + same_b) / 2.0;
  if (best == expected) return a == b ? 1.0 : 0.0;
  return (both - expected) / (best - expected);
}

double nmi(const borgia::Partition& a, const borgia::Partition& b) {
  const std::size_t n = a.size();
  const double N = static_cast<double>(n);
  double ha = 0.0, hb = 0.0, mi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double na = 0.0, nb = 0.0, nab = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      na += same(a, i, j);
      nb += same(b, i, j);
      nab += same(a, i, j) && same(b, i, j);
    }
    ha -= std::log(na / N) / N;
    hb -= std::log(nb / N) / N;
    mi += std::log(N * nab / (na * nb)) / N;
  }
  if (ha + hb == 0.0) return a == b ? 1.0 : 0.0;
  return std::clamp(2.0 * mi / (ha + hb), 0.0, 1.0);
}

borgia::Matrix best_friend(const borgia::Matrix& c) {
  const std::size_t n = c.rows();
  borgia::Matrix out = borgia::Matrix::square(n);
  for (std::size_t x = 0; x < n; ++x) {
    double total = 0.0;
    for (std::size_t a = 0; a < n; ++a) total += c(x, a);
    for (std::size_t y = 0; y < n; ++y) out(x, y) = (total > 0.0 && x != y) ? c(x, y) / total : 0.0;
  }
  return out;
}

borgia::Matrix best_common_friend(const borgia::Matrix& m) {
  const std::size_t n = m.rows();
  borgia::Matrix out = borgia::Matrix::square(n);
  for (std::size_t x = 0; x < n; ++x) {
    double total = 0.0;
    for (std::size_t a = 0; a < n; ++a) total += m(x, a);
    if (total == 0.0) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      double best = 0.0;
      for (std::size_t z = 0; z < n; ++z) {
        if (z != x && z != y) best = std::max(best, std::min(m(x, z), m(y, z)));
      }
      out(x, y) = best / total;
    }
  }
  return out;
}

borgia::Matrix social_networking(const borgia::Matrix& base) {
  const std::size_t n = base.rows();
  borgia::Matrix out = borgia::Matrix::square(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      double sum = 0.0, count = 0.0;
      for (std::size_t xp = 0; xp < n; ++xp) {
        if (xp != x && base(x, xp) > 0.0) {
          sum += xp == y ? 0.0 : base(xp, y);
          count += 1.0;
        }
      }
      out(x, y) = count > 0.0 ? sum / count : 0.0;
    }
  }
  return out;
}

borgia::Matrix machiavelli(const borgia::Graph& g) {
  const borgia::Matrix& c = g.weights();
  const std::size_t n = c.rows();
  std::vector<double> deg(n, 0.0), influence(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // directed degree counts in and out links separately
      if (c(i, j) > 0.0) deg[i] += 1.0;
      if (g.directed() && c(j, i) > 0.0) deg[i] += 1.0;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t xp = 0; xp < n; ++xp) {
      if (c(a, xp) > 0.0) influence[a] += deg[xp];
    }
  }
  borgia::Matrix out = borgia::Matrix::square(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double hi = std::max(influence[x], influence[y]);
      out(x, y) = (x == y || hi == 0.0) ? 0.0 : 1.0 - std::abs(influence[x] - influence[y]) / hi;
    }
  }
  return out;
}

}  // namespace oracle

#include <sstream>

#include "borgia/affinity.hpp"
#include "borgia/metrics.hpp"

namespace oracle {
namespace {

std::string describe(const std::string& what, double got, double want) {
  std::ostringstream s;
  s.precision(17);
  s << what << ": got " << got << ", want " << want;
  return s.str();
}

}  // namespace

std::vector<std::string> engine_violations(const borgia::Graph& g, const borgia::EngineConfig& cfg) {
  std::vector<std::string> out;
  std::vector<borgia::IterationTrace> rows;
  const auto first = borgia::run(g, cfg, [&](const borgia::IterationTrace& t) { rows.push_back(t); });
  const auto second = borgia::run(g, cfg);
  const auto& d = first.dendrogram;

  if (!(d == second.dendrogram)) out.push_back("repeat run produced a different dendrogram");
  if (d.fusions.size() + 1 != g.size()) out.push_back("fusion count " + std::to_string(d.fusions.size()));
  for (std::size_t f = 1; f < d.fusions.size(); ++f) {
    if (d.fusions[f].t < d.fusions[f - 1].t) out.push_back("timestamps decrease at fusion " + std::to_string(f));
  }

  std::vector<double> mass = borgia::degrees(g, borgia::DegreeMode::total, cfg.mass_weighting);
  double total = 0.0;
  for (double m : mass) total += m;
  for (const auto& f : d.fusions) {
    if (f.id != mass.size()) {
      out.push_back("fusion id " + std::to_string(f.id) + " out of sequence");
      break;
    }
    const double merged = mass.at(f.left) + mass.at(f.right);
    if (f.mass != merged) out.push_back(describe("fusion mass", f.mass, merged));
    mass.push_back(merged);
  }
  if (!d.fusions.empty() && d.fusions.back().mass != total) out.push_back(describe("root mass", d.fusions.back().mass, total));

  double last_t = 0.0;
  for (const auto& r : rows) {
    if (!(r.dt > 0.0)) out.push_back(describe("dt at iteration " + std::to_string(r.iteration), r.dt, 0.0));
    if (!(r.t > last_t)) out.push_back("time did not advance at iteration " + std::to_string(r.iteration));
    if (r.visited_pairs > r.nonzero_pairs) {
      out.push_back("visited " + std::to_string(r.visited_pairs) + " > nonzero " + std::to_string(r.nonzero_pairs));
    }
    if (r.fastest_displacement > r.delta * (1.0 + 1e-12)) {
      out.push_back(describe("fastest displacement", r.fastest_displacement, r.delta));
    }
    last_t = r.t;
  }
  return out;
}

AffinityCheck affinity_properties(const borgia::Graph& g) {
  AffinityCheck check;
  auto& out = check.violations;
  const std::size_t n = g.size();
  const auto bf = borgia::best_friend(g);
  const auto bcf = borgia::best_common_friend(g);
  const auto ma = borgia::machiavelli(g);
  const auto sn = borgia::social_networking(g);
  const auto mix = borgia::combine(g, 0.37);

  for (const auto* a : {&bf, &bcf, &ma, &sn, &mix}) {
    for (double v : a->values.data()) {
      if (!(v >= 0.0 && v <= 1.0)) out.push_back(describe(std::string(borgia::affinity_kind_name(a->kind)) + " range", v, 0.5));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    double row = 0.0, weight = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
      row += bf(x, y);
      weight += g.weight(x, y);
    }
    if (weight > 0.0 && std::abs(row - 1.0) > 1e-12) out.push_back(describe("bf row sum", row, 1.0));
    for (std::size_t y = 0; y < n; ++y) {
      if (ma(x, y) != ma(y, x)) out.push_back(describe("ma symmetry", ma(x, y), ma(y, x)));
      bool shared = false;
      for (std::size_t z = 0; z < n && !shared; ++z) shared = z != x && z != y && g.weight(x, z) > 0.0 && g.weight(y, z) > 0.0;
      if (x != y && (bcf(x, y) > 0.0) != shared) out.push_back("bcf support differs from the co-neighbour pairs");
    }
  }
  if (!(borgia::combine(g, 1.0).values == bf.values)) out.push_back("combine(1) differs from best friend");
  if (!(borgia::combine(g, 0.0).values == bcf.values)) out.push_back("combine(0) differs from best common friend");
  check.adjacency_density = borgia::density(g);
  check.bcf_density = borgia::matrix_density(bcf.values);
  return check;
}

std::vector<std::string> metric_violations(const borgia::Graph& g, const borgia::Partition& part,
                                           const borgia::Partition& other, double tol) {
  std::vector<std::string> out;
  auto compare = [&](const char* name, double got, double want) {
    if (!(std::abs(got - want) <= tol)) out.push_back(describe(name, got, want));
  };
  compare("modularity", borgia::modularity(g, part), oracle::modularity(g, part));
  compare("modularity density", borgia::modularity_density(g, part), oracle::modularity_density(g, part));
  compare("nmi", borgia::nmi(part, other), oracle::nmi(part, other));
  compare("ari", borgia::ari(part, other), oracle::ari(part, other));
  const double one = borgia::modularity(g, borgia::Partition::single_community(g.size()));
  if (one != 0.0) out.push_back(describe("one-community modularity", one, 0.0));
  return out;
}

}  // namespace oracle
