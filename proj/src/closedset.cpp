#include "majoperc/closedset.hpp"

#include <bit>
#include <stdexcept>

namespace majoperc {

bool is_closed(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw std::invalid_argument("is_closed: set universe does not match graph");
  if (s.size() == g.vertex_count()) return false;  // [n] is not a proper subset
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    int cnt = 0;
    for (int w : g.neighbors(v)) cnt += s.contains(w);
    if (2 * cnt >= g.degree(v)) return false;
  }
  return true;
}

std::vector<std::uint32_t> enumerate_closed_masks(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 22) throw std::invalid_argument("enumerate_closed_masks: n > 22 (2^n scan guard)");

  std::vector<std::uint32_t> adj_mask(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) adj_mask[static_cast<std::size_t>(v)] |= 1u << w;

  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> closed;
  for (std::uint32_t mask = 0; mask < full; ++mask) {  // full itself excluded: not proper
    bool ok = true;
    std::uint32_t outside = full & ~mask;
    while (outside) {
      const int v = std::countr_zero(outside);
      outside &= outside - 1;
      const int cnt = std::popcount(adj_mask[static_cast<std::size_t>(v)] & mask);
      if (2 * cnt >= g.degree(v)) {
        ok = false;
        break;
      }
    }
    if (ok) closed.push_back(mask);
  }
  return closed;
}

std::vector<VertexSet> enumerate_closed_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (std::uint32_t mask : enumerate_closed_masks(g)) out.push_back(set_from_mask(g.vertex_count(), mask));
  return out;
}

VertexSet set_from_mask(int n, std::uint32_t mask) {
  VertexSet s(n);
  while (mask) {
    s.add(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

}  // namespace majoperc
