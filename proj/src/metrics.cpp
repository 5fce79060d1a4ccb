#include "borgia/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "borgia/error.hpp"
#include "borgia/graph_io.hpp"

namespace borgia {
namespace {

void check_covers(const Graph& g, const Partition& part) {
  if (part.size() != g.size()) {
    throw Error(ErrorCode::dimension_mismatch, "partition covers " + std::to_string(part.size()) +
                                                   " actors but the graph has " + std::to_string(g.size()));
  }
}

void check_same_actors(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::dimension_mismatch, "partitions cover " + std::to_string(a.size()) + " and " +
                                                   std::to_string(b.size()) + " actors");
  }
}

double symmetric_weight(const Graph& g, std::size_t i, std::size_t j) {
  return std::max(g.weight(i, j), g.weight(j, i));
}

struct Contingency {
  std::map<std::pair<std::size_t, std::size_t>, double> cells;
  std::vector<double> rows;
  std::vector<double> cols;
  double n = 0.0;
};

Contingency contingency(const Partition& a, const Partition& b) {
  Contingency t;
  t.rows.assign(a.community_count(), 0.0);
  t.cols.assign(b.community_count(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t ca = a.community_of(i);
    const std::size_t cb = b.community_of(i);
    t.cells[{ca, cb}] += 1.0;
    t.rows[ca] += 1.0;
    t.cols[cb] += 1.0;
  }
  t.n = static_cast<double>(a.size());
  return t;
}

double entropy(const std::vector<double>& counts, double n) {
  double h = 0.0;
  for (double c : counts) {
    if (c > 0.0) h -= (c / n) * std::log(c / n);
  }
  return h;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

double modularity(const Graph& g, const Partition& part) {
  check_covers(g, part);
  const std::size_t n = g.size();
  const std::size_t k = part.community_count();
  std::vector<double> strength(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) strength[i] += symmetric_weight(g, i, j);
  }
  double two_m = 0.0;
  for (double s : strength) two_m += s;
  if (!(two_m > 0.0)) throw Error(ErrorCode::invalid_argument, "modularity is undefined for a graph without edges");

  std::vector<double> internal(k, 0.0);
  std::vector<double> total(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ci = part.community_of(i);
    total[ci] += strength[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (part.community_of(j) == ci) internal[ci] += symmetric_weight(g, i, j);
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double share = total[c] / two_m;
    q += internal[c] / two_m - share * share;
  }
  return q;
}

double modularity_density(const Graph& g, const Partition& part) {
  check_covers(g, part);
  const std::size_t k = part.community_count();
  std::vector<double> inside(k, 0.0);  // sum over ordered internal pairs = 2 L_in
  std::vector<double> boundary(k, 0.0);
  std::vector<double> size(k, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::size_t ci = part.community_of(i);
    size[ci] += 1.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double w = symmetric_weight(g, i, j);
      if (w == 0.0) continue;
      if (part.community_of(j) == ci) {
        inside[ci] += w;
      } else {
        boundary[ci] += w;
      }
    }
  }
  double d = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    if (size[c] == 0.0) throw Error(ErrorCode::invalid_argument, "empty community");
    d += (inside[c] - boundary[c]) / size[c];
  }
  return d;
}

double nmi(const Partition& a, const Partition& b) {
  check_same_actors(a, b);
  if (a.size() == 0) throw Error(ErrorCode::invalid_argument, "nmi of empty partitions");
  const Contingency t = contingency(a, b);
  const double ha = entropy(t.rows, t.n);
  const double hb = entropy(t.cols, t.n);
  if (ha + hb == 0.0) return a == b ? 1.0 : 0.0;
  double mi = 0.0;
  for (const auto& [cell, count] : t.cells) {
    const double pij = count / t.n;
    mi += pij * std::log(count * t.n / (t.rows[cell.first] * t.cols[cell.second]));
  }
  return std::clamp(mi / ((ha + hb) / 2.0), 0.0, 1.0);
}

double ari(const Partition& a, const Partition& b) {
  check_same_actors(a, b);
  if (a.size() == 0) throw Error(ErrorCode::invalid_argument, "ari of empty partitions");
  const Contingency t = contingency(a, b);
  double index = 0.0;
  for (const auto& [cell, count] : t.cells) index += choose2(count);
  double sum_rows = 0.0, sum_cols = 0.0;
  for (double r : t.rows) sum_rows += choose2(r);
  for (double c : t.cols) sum_cols += choose2(c);
  const double total_pairs = choose2(t.n);
  const double expected = total_pairs > 0.0 ? sum_rows * sum_cols / total_pairs : 0.0;
  const double max_index = (sum_rows + sum_cols) / 2.0;
  if (max_index == expected) return a == b ? 1.0 : 0.0;
  return (index - expected) / (max_index - expected);
}

MetricReport evaluate(const Graph& g, const Partition& part, const Partition* truth) {
  MetricReport r;
  r.modularity = modularity(g, part);
  r.modularity_density = modularity_density(g, part);
  r.k = part.community_count();
  if (truth) {
    check_covers(g, *truth);
    r.nmi = nmi(part, *truth);
    r.ari = ari(part, *truth);
  }
  return r;
}

std::string report_to_text(const MetricReport& r) {
  std::ostringstream out;
  out << "k: " << r.k << "\n";
  out << "modularity: " << format_double(r.modularity) << "\n";
  out << "modularity_density: " << format_double(r.modularity_density) << "\n";
  if (r.nmi) out << "nmi: " << format_double(*r.nmi) << "\n";
  if (r.ari) out << "ari: " << format_double(*r.ari) << "\n";
  return out.str();
}

std::string report_to_csv(const MetricReport& r) {
  std::ostringstream out;
  out << "k,modularity,modularity_density,nmi,ari\n";
  out << r.k << ',' << format_double(r.modularity) << ',' << format_double(r.modularity_density) << ','
      << (r.nmi ? format_double(*r.nmi) : "") << ',' << (r.ari ? format_double(*r.ari) : "") << "\n";
  return out.str();
}

}  // namespace borgia
