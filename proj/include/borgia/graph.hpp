#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "borgia/matrix.hpp"

namespace borgia {

enum class DegreeMode { in, out, total };

// Weighted sums edge weights; unweighted counts nonzero entries.
enum class Weighting { weighted, unweighted };

/// Weighted adjacency structure over labelled actors.
///
/// Entry (i, j) of weights() is the weight of the edge i -> j. Undirected graphs
/// keep both (i, j) and (j, i) populated. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Validates the invariants: square non-negative weights, zero diagonal,
  /// symmetry when undirected, unique non-empty labels.
  Graph(std::vector<std::string> labels, Matrix weights, bool directed);

  std::size_t size() const noexcept { return labels_.size(); }
  bool directed() const noexcept { return directed_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const Matrix& weights() const noexcept { return weights_; }
  double weight(std::size_t i, std::size_t j) const { return weights_(i, j); }

  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Number of edges: nonzero ordered entries when directed, unordered pairs otherwise.
  std::size_t edge_count() const;

  bool operator==(const Graph& other) const {
    return directed_ == other.directed_ && labels_ == other.labels_ && weights_ == other.weights_;
  }

 private:
  std::vector<std::string> labels_;
  Matrix weights_;
  bool directed_ = false;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A sequence of graph slices over one shared label ordering.
class TemporalGraph {
 public:
  explicit TemporalGraph(std::vector<Graph> slices);

  std::size_t slice_count() const noexcept { return slices_.size(); }
  std::size_t size() const noexcept { return slices_.front().size(); }
  const std::vector<Graph>& slices() const noexcept { return slices_; }
  const Graph& slice(std::size_t t) const { return slices_.at(t); }

 private:
  std::vector<Graph> slices_;
};

/// Degree of actor i. For undirected graphs every mode returns the row sum.
double degree(const Graph& g, std::size_t i, DegreeMode mode = DegreeMode::total,
              Weighting weighting = Weighting::weighted);

std::vector<double> degrees(const Graph& g, DegreeMode mode = DegreeMode::total,
                            Weighting weighting = Weighting::weighted);

/// Fraction of possible edges present.
double density(const Graph& g);

/// Fraction of nonzero off-diagonal entries of an arbitrary square matrix,
/// read as a directed graph.
double matrix_density(const Matrix& m);

/// Accumulates labelled edges; labels are assigned indices in first-appearance order.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool directed) : directed_(directed) {}

  std::size_t add_node(std::string_view label);
  /// Adds weight to src -> dst (and dst -> src when undirected).
  void add_edge(std::string_view src, std::string_view dst, double weight, std::size_t line = 0);
  void set_edge(std::size_t src, std::size_t dst, double weight);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_records() const noexcept { return edge_records_; }

  Graph build() const;

 private:
  struct Entry {
    std::size_t src;
    std::size_t dst;
    double weight;
  };

  bool directed_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Entry> entries_;
  std::size_t edge_records_ = 0;
};

}  // namespace borgia
