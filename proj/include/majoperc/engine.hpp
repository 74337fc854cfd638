#pragma once

#include <cstdint>
#include <vector>

#include "majoperc/graph.hpp"

namespace majoperc {

// Outcome of one majority bootstrap run. trajectory[t] = |I_t| for t = 0..T,
// where T (= rounds) is the first step with I_{T+1} = I_T.
struct PercolationResult {
  VertexSet final_infected;
  int rounds = 0;
  std::vector<std::int64_t> trajectory;
  bool percolated = false;

  bool operator==(const PercolationResult&) const = default;
};

// Synchronous rule: I_{t+1} = I_t ∪ { v : 2·|I_t ∩ Γ(v)| >= |Γ(v)| }.
// The comparison is integer-exact, so degree-0 vertices are infected at
// round 1 (0 >= 0). Frontier/counter implementation, O(n + Σ_{v∈I} deg(v)).
PercolationResult run_bootstrap(const Graph& g, const VertexSet& initial);

// Same contract, recomputing every |I_t ∩ Γ(v)| from scratch each round.
// Oracle for run_bootstrap; intended for small n.
PercolationResult run_bootstrap_reference(const Graph& g, const VertexSet& initial);

}  // namespace majoperc
