#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "majoperc/closedset.hpp"
#include "majoperc/engine.hpp"
#include "majoperc/graph.hpp"
#include "majoperc/rng.hpp"
#include "test_support.hpp"

using namespace majoperc;

namespace {

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

// Definition transcribed verbatim, fractional comparison and all; kept as a
// mutation check against the integer-arithmetic implementation.
bool is_closed_transcribed(const Graph& g, const VertexSet& s) {
  if (s.size() >= g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v)) continue;
    double in_s = 0;
    for (int w : g.neighbors(v)) in_s += s.contains(w) ? 1.0 : 0.0;
    if (!(in_s < static_cast<double>(g.degree(v)) / 2.0)) return false;
  }
  return true;
}

std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t mask = 0;
  for (int v : s.elements()) mask |= 1u << v;
  return mask;
}

}  // namespace

TEST_CASE("hand-checked closedness calls") {
  // K5 with |s| = 2: an outside vertex sees 2 of its 4 neighbours, 4 < 4 fails.
  CHECK_FALSE(is_closed(complete_graph(5), VertexSet::from_elements(5, {0, 1})));

  // Edge {0,1} plus isolated 2: s = {2} leaves 0 and 1 outside with 0 < 1/2·2.
  const Graph g = Graph::from_edges(3, {{0, 1}});
  CHECK(is_closed(g, VertexSet::from_elements(3, {2})));

  // Empty graph: a degree-0 vertex outside s fails 0 < 0.
  const Graph empty = sample_gnp(3, 0.0, 1);
  CHECK_FALSE(is_closed(empty, VertexSet::from_elements(3, {0})));

  // [n] is never closed (not a proper subset).
  CHECK_FALSE(is_closed(g, VertexSet::prefix(3, 3)));
}

TEST_CASE("triangle has exactly one closed set, the empty one") {
  const Graph k3 = complete_graph(3);
  const std::vector<std::uint32_t> masks = enumerate_closed_masks(k3);
  CHECK(masks == std::vector<std::uint32_t>{0});
}

TEST_CASE("empty graph has no closed sets") {
  CHECK(enumerate_closed_masks(sample_gnp(3, 0.0, 1)).empty());
}

TEST_CASE("enumeration guard rejects n > 22") {
  CHECK_THROWS_AS(enumerate_closed_masks(sample_gnp(23, 0.0, 1)), std::invalid_argument);
}

TEST_CASE("enumeration agrees with is_closed on every subset") {
  SplitMix64 rng(7001);
  for (int rep = 0; rep < 15; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(9));  // n <= 10: full 2^n cross-check
    const Graph g = sample_gnp(n, rng.next_unit(), rng.next());
    const std::vector<std::uint32_t> masks = enumerate_closed_masks(g);
    CHECK(std::is_sorted(masks.begin(), masks.end()));
    std::size_t idx = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const VertexSet s = set_from_mask(n, mask);
      const bool closed = is_closed(g, s);
      CHECK(closed == is_closed_transcribed(g, s));
      if (closed) {
        REQUIRE(idx < masks.size());
        CHECK(masks[idx] == mask);
        ++idx;
      }
    }
    CHECK(idx == masks.size());
  }
}

TEST_CASE("non-percolating fixpoints appear among the closed sets") {
  SplitMix64 rng(88);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(13));
    const Graph g = sample_gnp(n, rng.next_unit() * 0.6, rng.next());
    const std::vector<std::uint32_t> closed = enumerate_closed_masks(g);
    const VertexSet initial = testutil::random_subset(n, rng.next_unit() * 0.6, rng);
    const PercolationResult r = run_bootstrap(g, initial);
    if (r.percolated) continue;
    const std::uint32_t final_mask = to_mask(r.final_infected);
    CHECK(std::binary_search(closed.begin(), closed.end(), final_mask));
    CHECK((to_mask(initial) & ~final_mask) == 0);
  }
}

TEST_CASE("percolation happens exactly when no closed set contains the start") {
  SplitMix64 rng(4096);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3 + static_cast<int>(rng.next_below(8));  // n <= 10 here; acceptance pushes to 12
    const Graph g = sample_gnp(n, rng.next_unit() * 0.7, rng.next());
    const std::vector<std::uint32_t> closed = enumerate_closed_masks(g);
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
      const bool contained = std::any_of(closed.begin(), closed.end(),
                                         [a](std::uint32_t c) { return (a & ~c) == 0; });
      const bool percolated = run_bootstrap(g, set_from_mask(n, a)).percolated;
      REQUIRE(percolated == !contained);
    }
  }
}
