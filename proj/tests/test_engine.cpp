#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "majoperc/closedset.hpp"
#include "majoperc/engine.hpp"
#include "majoperc/graph.hpp"
#include "majoperc/parallel.hpp"
#include "majoperc/rng.hpp"
#include "test_support.hpp"

using namespace majoperc;

TEST_CASE("star infects everything in one round") {
  // K_{1,4}: each leaf has its single neighbour infected, 1 >= 1/2.
  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const PercolationResult r = run_bootstrap(star, VertexSet::from_elements(5, {0}));
  CHECK(r.percolated);
  CHECK(r.rounds == 1);
  CHECK(r.trajectory == std::vector<std::int64_t>{1, 5});
  CHECK(r.final_infected.size() == 5);
}

TEST_CASE("isolated edge blocks, isolated vertex does not") {
  // Edge {0,1} plus isolated 2, empty start: only the degree-0 vertex fires.
  const Graph g = Graph::from_edges(3, {{0, 1}});
  const PercolationResult r = run_bootstrap(g, VertexSet(3));
  CHECK_FALSE(r.percolated);
  CHECK(r.final_infected == VertexSet::from_elements(3, {2}));
  CHECK(r.rounds == 1);
  CHECK(r.trajectory == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("path propagates through the 1-of-2 tie") {
  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  const PercolationResult r = run_bootstrap(path, VertexSet::from_elements(3, {0}));
  CHECK(r.percolated);
  CHECK(r.rounds == 2);
  CHECK(r.trajectory == std::vector<std::int64_t>{1, 2, 3});
}

TEST_CASE("empty graph fully infects at round 1") {
  const Graph g = sample_gnp(4, 0.0, 1);
  for (auto* run : {&run_bootstrap, &run_bootstrap_reference}) {
    const PercolationResult r = run(g, VertexSet(4));
    CHECK(r.percolated);
    CHECK(r.rounds == 1);
    CHECK(r.trajectory == std::vector<std::int64_t>{0, 4});
  }
}

TEST_CASE("full initial set is already a fixpoint") {
  const Graph g = sample_gnp(10, 0.4, 3);
  const PercolationResult r = run_bootstrap(g, VertexSet::prefix(10, 10));
  CHECK(r.percolated);
  CHECK(r.rounds == 0);
  CHECK(r.trajectory == std::vector<std::int64_t>{10});
}

TEST_CASE("reference implementation matches the trivial cases") {
  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(run_bootstrap_reference(star, VertexSet::from_elements(5, {0})) ==
        run_bootstrap(star, VertexSet::from_elements(5, {0})));
  const Graph g = Graph::from_edges(3, {{0, 1}});
  CHECK(run_bootstrap_reference(g, VertexSet(3)) == run_bootstrap(g, VertexSet(3)));
  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(run_bootstrap_reference(path, VertexSet::from_elements(3, {0})) ==
        run_bootstrap(path, VertexSet::from_elements(3, {0})));
}

TEST_CASE("frontier and reference engines agree on random instances") {
  SplitMix64 rng(2024);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng.next_below(200));
    const double p = std::vector<double>{0.0, 0.05, 0.3, 1.0}[rng.next_below(4)];
    const Graph g = sample_gnp(n, p, rng.next());
    const VertexSet initial = testutil::random_subset(n, rng.next_unit(), rng);
    const PercolationResult fast = run_bootstrap(g, initial);
    const PercolationResult ref = run_bootstrap_reference(g, initial);
    REQUIRE(fast == ref);
  }
}

TEST_CASE("trajectory is strictly increasing and bounded") {
  SplitMix64 rng(555);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 1 + static_cast<int>(rng.next_below(150));
    const Graph g = sample_gnp(n, 0.4 * rng.next_unit(), rng.next());
    const VertexSet initial = testutil::random_subset(n, 0.5 * rng.next_unit(), rng);
    const PercolationResult r = run_bootstrap(g, initial);
    REQUIRE(r.rounds <= n);
    REQUIRE(r.trajectory.size() == static_cast<std::size_t>(r.rounds) + 1);
    CHECK(r.trajectory.front() == initial.size());
    CHECK(r.trajectory.back() == r.final_infected.size());
    for (std::size_t t = 1; t < r.trajectory.size(); ++t)
      CHECK(r.trajectory[t - 1] < r.trajectory[t]);
    CHECK(r.percolated == (r.final_infected.size() == n));
    // Monotone dynamics: the initial set stays infected.
    for (int v : initial.elements()) CHECK(r.final_infected.contains(v));
  }
}

TEST_CASE("larger initial sets infect supersets") {
  SplitMix64 rng(808);
  for (int rep = 0; rep < 120; ++rep) {
    const int n = 2 + static_cast<int>(rng.next_below(199));
    const Graph g = sample_gnp(n, rng.next_unit() * 0.3, rng.next());
    const VertexSet a = testutil::random_subset(n, 0.3 * rng.next_unit(), rng);
    VertexSet b = a;
    for (int v = 0; v < n; ++v)
      if (!b.contains(v) && rng.next_unit() < 0.2) b.add(v);
    const VertexSet fa = run_bootstrap(g, a).final_infected;
    const VertexSet fb = run_bootstrap(g, b).final_infected;
    for (int v : fa.elements()) CHECK(fb.contains(v));
  }
}

TEST_CASE("asynchronous update order reaches the same fixpoint") {
  SplitMix64 rng(31337);
  for (int rep = 0; rep < 120; ++rep) {
    const int n = 1 + static_cast<int>(rng.next_below(100));
    const Graph g = sample_gnp(n, rng.next_unit() * 0.4, rng.next());
    const VertexSet initial = testutil::random_subset(n, 0.4 * rng.next_unit(), rng);
    const VertexSet sync_final = run_bootstrap(g, initial).final_infected;
    const VertexSet async_final = testutil::async_bootstrap_final(g, initial, rng);
    CHECK(sync_final == async_final);
  }
}

TEST_CASE("non-percolating fixpoints are closed sets") {
  SplitMix64 rng(99181);
  int non_percolating = 0;
  while (non_percolating < 150) {
    const int n = 2 + static_cast<int>(rng.next_below(299));
    const Graph g = sample_gnp(n, rng.next_unit() * 0.1, rng.next());
    const PercolationResult r = run_bootstrap(g, testutil::random_subset(n, 0.3 * rng.next_unit(), rng));
    if (r.percolated) continue;
    ++non_percolating;
    CHECK(is_closed(g, r.final_infected));
  }
}

TEST_CASE("initial set must live in the graph's universe") {
  const Graph g = sample_gnp(5, 0.5, 1);
  CHECK_THROWS_AS(run_bootstrap(g, VertexSet(4)), std::invalid_argument);
  CHECK_THROWS_AS(run_bootstrap_reference(g, VertexSet(6)), std::invalid_argument);
}

TEST_CASE("concurrent runs over one shared graph match serial runs") {
  const Graph g = sample_gnp(300, 0.04, 17);
  std::vector<VertexSet> initials;
  SplitMix64 rng(90);
  for (int i = 0; i < 16; ++i) initials.push_back(testutil::random_subset(300, 0.3 * rng.next_unit(), rng));

  std::vector<PercolationResult> serial;
  for (const VertexSet& s : initials) serial.push_back(run_bootstrap(g, s));

  std::vector<PercolationResult> parallel(initials.size());
  parallel_for(static_cast<std::int64_t>(initials.size()), 4, [&](std::int64_t i) {
    parallel[static_cast<std::size_t>(i)] = run_bootstrap(g, initials[static_cast<std::size_t>(i)]);
  });
  for (std::size_t i = 0; i < initials.size(); ++i) CHECK(serial[i] == parallel[i]);
}
