#pragma once

// Straightforward re-derivations used to cross-check the library. They favour
// obviousness over speed and share no code with src/.

#include <vector>

#include "borgia/graph.hpp"
#include "borgia/matrix.hpp"
#include "borgia/partition.hpp"

namespace oracle {

double modularity(const borgia::Graph& g, const borgia::Partition& p);
double modularity_density(const borgia::Graph& g, const borgia::Partition& p);
// Pair-counting form over all actor pairs.
double ari(const borgia::Partition& a, const borgia::Partition& b);
// Per-actor form: every quantity is recounted for each actor.
double nmi(const borgia::Partition& a, const borgia::Partition& b);

borgia::Matrix best_friend(const borgia::Matrix& c);
borgia::Matrix best_common_friend(const borgia::Matrix& m);
borgia::Matrix social_networking(const borgia::Matrix& base);
borgia::Matrix machiavelli(const borgia::Graph& g);

}  // namespace oracle

#include <string>

#include "borgia/engine.hpp"

namespace oracle {

/// Runs the engine twice and lists every broken structural invariant.
std::vector<std::string> engine_violations(const borgia::Graph& g, const borgia::EngineConfig& cfg);

struct AffinityCheck {
  std::vector<std::string> violations;
  double adjacency_density = 0.0;
  double bcf_density = 0.0;
};

/// Range, row sums, symmetry, co-neighbour support and endpoint identities.
AffinityCheck affinity_properties(const borgia::Graph& g);

/// Library metrics against the brute-force forms above.
std::vector<std::string> metric_violations(const borgia::Graph& g, const borgia::Partition& part,
                                           const borgia::Partition& other, double tol);

}  // namespace oracle
