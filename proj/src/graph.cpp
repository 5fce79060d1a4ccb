#include "borgia/graph.hpp"

#include <cmath>
#include <unordered_set>

#include "borgia/error.hpp"

namespace borgia {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::io: return "io_error";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::stall: return "stall";
    case ErrorCode::not_found: return "not_found";
  }
  return "unknown";
}

Graph::Graph(std::vector<std::string> labels, Matrix weights, bool directed)
    : labels_(std::move(labels)), weights_(std::move(weights)), directed_(directed) {
  const std::size_t n = labels_.size();
  if (weights_.rows() != n || weights_.cols() != n) {
    throw Error(ErrorCode::dimension_mismatch,
                "weight matrix is " + std::to_string(weights_.rows()) + "x" + std::to_string(weights_.cols()) +
                    " but there are " + std::to_string(n) + " labels");
  }
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (labels_[i].empty()) throw Error(ErrorCode::invalid_argument, "empty label for actor " + std::to_string(i));
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::invalid_argument, "duplicate label '" + labels_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = weights_(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorCode::invalid_argument,
                    "negative or non-finite weight on edge " + labels_[i] + " -> " + labels_[j]);
      }
      if (i == j && w != 0.0) throw Error(ErrorCode::invalid_argument, "self-loop on actor '" + labels_[i] + "'");
      if (!directed_ && w != weights_(j, i)) {
        throw Error(ErrorCode::invalid_argument,
                    "undirected graph has asymmetric weights between " + labels_[i] + " and " + labels_[j]);
      }
    }
  }
}

std::optional<std::size_t> Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = directed_ ? 0 : i + 1; j < size(); ++j) {
      if (weights_(i, j) > 0.0) ++count;
    }
  }
  return count;
}

TemporalGraph::TemporalGraph(std::vector<Graph> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw Error(ErrorCode::invalid_argument, "temporal graph needs at least one slice");
  const auto& labels = slices_.front().labels();
  for (std::size_t t = 1; t < slices_.size(); ++t) {
    if (slices_[t].labels() != labels) {
      throw Error(ErrorCode::dimension_mismatch,
                  "slice " + std::to_string(t) + " does not share the label ordering of slice 0");
    }
  }
}

double degree(const Graph& g, std::size_t i, DegreeMode mode, Weighting weighting) {
  const std::size_t n = g.size();
  if (i >= n) {
    throw Error(ErrorCode::out_of_range, "actor index " + std::to_string(i) + " out of range for " +
                                             std::to_string(n) + " actors");
  }
  auto value = [weighting](double w) {
    if (weighting == Weighting::weighted) return w;
    return w > 0.0 ? 1.0 : 0.0;
  };
  double out = 0.0;
  double in = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    out += value(g.weight(i, j));
    in += value(g.weight(j, i));
  }
  if (!g.directed()) return out;
  switch (mode) {
    case DegreeMode::in: return in;
    case DegreeMode::out: return out;
    case DegreeMode::total: return in + out;
  }
  return out;
}

std::vector<double> degrees(const Graph& g, DegreeMode mode, Weighting weighting) {
  std::vector<double> result(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) result[i] = degree(g, i, mode, weighting);
  return result;
}

double density(const Graph& g) {
  const double n = static_cast<double>(g.size());
  if (g.size() < 2) throw Error(ErrorCode::invalid_argument, "density needs at least two actors");
  const double possible = g.directed() ? n * (n - 1.0) : n * (n - 1.0) / 2.0;
  return static_cast<double>(g.edge_count()) / possible;
}

double matrix_density(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n < 2 || !m.is_square()) throw Error(ErrorCode::invalid_argument, "density needs a square matrix of side >= 2");
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m(i, j) != 0.0) ++nonzero;
    }
  }
  return static_cast<double>(nonzero) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::size_t GraphBuilder::add_node(std::string_view label) {
  std::string key(label);
  auto [it, inserted] = index_.emplace(key, labels_.size());
  if (inserted) labels_.push_back(std::move(key));
  return it->second;
}

void GraphBuilder::add_edge(std::string_view src, std::string_view dst, double weight, std::size_t line) {
  if (src.empty() || dst.empty()) throw ParseError(line, "empty actor label");
  if (!std::isfinite(weight)) throw ParseError(line, "non-finite weight");
  if (weight < 0.0) throw ParseError(line, "negative weight");
  if (src == dst) throw ParseError(line, "self-loop on '" + std::string(src) + "'");
  const std::size_t a = add_node(src);
  const std::size_t b = add_node(dst);
  entries_.push_back({a, b, weight});
  ++edge_records_;
}

void GraphBuilder::set_edge(std::size_t src, std::size_t dst, double weight) {
  if (src >= labels_.size() || dst >= labels_.size()) throw Error(ErrorCode::out_of_range, "edge endpoint out of range");
  if (src == dst) throw Error(ErrorCode::invalid_argument, "self-loop on '" + labels_[src] + "'");
  if (weight < 0.0) throw Error(ErrorCode::invalid_argument, "negative weight");
  entries_.push_back({src, dst, weight});
  ++edge_records_;
}

Graph GraphBuilder::build() const {
  const std::size_t n = labels_.size();
  Matrix w = Matrix::square(n);
  for (const auto& e : entries_) {
    w(e.src, e.dst) += e.weight;
    if (!directed_) w(e.dst, e.src) += e.weight;
  }
  return Graph(labels_, std::move(w), directed_);
}

}  // namespace borgia
