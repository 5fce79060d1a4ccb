#include "borgia/dendrogram.hpp"

#include <cmath>
#include <numeric>

#include <json.hpp>

#include "borgia/error.hpp"

namespace borgia {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

void validate_dendrogram(const Dendrogram& d) {
  if (d.n == 0) throw Error(ErrorCode::invalid_argument, "dendrogram over zero actors");
  if (d.fusions.size() != d.n - 1) {
    throw Error(ErrorCode::invalid_argument, "dendrogram over " + std::to_string(d.n) + " actors has " +
                                                 std::to_string(d.fusions.size()) + " fusions");
  }
  std::vector<bool> used(2 * d.n - 1, false);
  double previous = -INFINITY;
  for (std::size_t f = 0; f < d.fusions.size(); ++f) {
    const Fusion& fu = d.fusions[f];
    if (fu.id != d.n + f) throw Error(ErrorCode::invalid_argument, "fusion " + std::to_string(f) + " has unexpected id");
    if (fu.t < previous) throw Error(ErrorCode::invalid_argument, "fusion timestamps decrease at fusion " + std::to_string(f));
    previous = fu.t;
    for (std::size_t child : {fu.left, fu.right}) {
      if (child >= fu.id) throw Error(ErrorCode::invalid_argument, "fusion " + std::to_string(f) + " uses a future id");
      if (used[child]) throw Error(ErrorCode::invalid_argument, "id " + std::to_string(child) + " fused twice");
      used[child] = true;
    }
    if (fu.left == fu.right) throw Error(ErrorCode::invalid_argument, "fusion of an id with itself");
  }
}

std::vector<Configuration> enumerate_configurations(const Dendrogram& d) {
  std::vector<Configuration> out;
  if (d.n < 3) return out;
  for (std::size_t applied = 1; applied + 1 < d.n; ++applied) {
    Configuration c;
    c.fusions_applied = applied;
    c.k = d.n - applied;
    c.lifespan = d.fusions[applied].t - d.fusions[applied - 1].t;
    c.score = c.lifespan * std::log(static_cast<double>(c.k));
    out.push_back(c);
  }
  return out;
}

Partition cut_after(const Dendrogram& d, std::size_t fusions_applied) {
  if (fusions_applied > d.fusions.size()) throw Error(ErrorCode::out_of_range, "cut beyond the last fusion");
  UnionFind uf(2 * d.n);
  for (std::size_t f = 0; f < fusions_applied; ++f) {
    uf.unite(d.fusions[f].left, d.fusions[f].id);
    uf.unite(d.fusions[f].right, d.fusions[f].id);
  }
  std::vector<long long> labels(d.n);
  for (std::size_t i = 0; i < d.n; ++i) labels[i] = static_cast<long long>(uf.find(i));
  return Partition(labels);
}

Partition select_by_score(const Dendrogram& d) {
  const auto configs = enumerate_configurations(d);
  if (configs.empty()) return cut_after(d, d.fusions.size());
  const Configuration* best = &configs.front();
  for (const auto& c : configs) {
    if (c.score > best->score) best = &c;
  }
  return cut_after(d, best->fusions_applied);
}

Partition select_by_lifespan(const Dendrogram& d) {
  const auto configs = enumerate_configurations(d);
  if (configs.empty()) return cut_after(d, d.fusions.size());
  const Configuration* best = &configs.front();
  for (const auto& c : configs) {
    if (c.lifespan > best->lifespan) best = &c;
  }
  return cut_after(d, best->fusions_applied);
}

Partition select_fixed_k(const Dendrogram& d, std::size_t k) {
  if (k < 1 || k > d.n) {
    throw Error(ErrorCode::out_of_range, "requested " + std::to_string(k) + " communities but k must lie in [1, " +
                                             std::to_string(d.n) + "]");
  }
  return cut_after(d, d.n - k);
}

std::string dendrogram_to_json(const Dendrogram& d) {
  nlohmann::json doc;
  doc["n"] = d.n;
  doc["total_time"] = d.total_time;
  auto& fusions = doc["fusions"] = nlohmann::json::array();
  for (const auto& f : d.fusions) {
    fusions.push_back({{"t", f.t}, {"left", f.left}, {"right", f.right}, {"new", f.id}, {"mass", f.mass},
                       {"forced", f.forced}});
  }
  return doc.dump(1) + "\n";
}

Dendrogram dendrogram_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    Dendrogram d;
    d.n = doc.at("n").get<std::size_t>();
    d.total_time = doc.at("total_time").get<double>();
    for (const auto& f : doc.at("fusions")) {
      d.fusions.push_back({f.at("t").get<double>(), f.at("left").get<std::size_t>(), f.at("right").get<std::size_t>(),
                           f.at("new").get<std::size_t>(), f.at("mass").get<double>(), f.value("forced", false)});
    }
    validate_dendrogram(d);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed dendrogram json: ") + e.what());
  }
}

}  // namespace borgia
