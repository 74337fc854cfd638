#pragma once

#include <cstdint>
#include <vector>

#include "majoperc/graph.hpp"

namespace majoperc {

// A proper subset S of [n] is closed when every outside vertex v has strictly
// fewer than half its neighbours in S: 2·|Γ(v) ∩ S| < |Γ(v)|. Fixpoints of
// non-percolating bootstrap runs are exactly such sets. Note the strictness:
// a degree-0 vertex outside S makes S non-closed (0 < 0 fails), and S = [n]
// is never closed (not proper).
bool is_closed(const Graph& g, const VertexSet& s);

// All closed sets of g as bitmasks, ascending. Requires g.n <= 22.
std::vector<std::uint32_t> enumerate_closed_masks(const Graph& g);

// Same enumeration materialized as VertexSets.
std::vector<VertexSet> enumerate_closed_sets(const Graph& g);

VertexSet set_from_mask(int n, std::uint32_t mask);

}  // namespace majoperc
