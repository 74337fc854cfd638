#include "majoperc/engine.hpp"

#include <stdexcept>

namespace majoperc {

namespace {

PercolationResult finish(const Graph& g, const std::vector<std::uint8_t>& infected,
                         std::int64_t infected_count, int rounds,
                         std::vector<std::int64_t> trajectory) {
  PercolationResult r;
  VertexSet final_set(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (infected[static_cast<std::size_t>(v)]) final_set.add(v);
  r.final_infected = std::move(final_set);
  r.rounds = rounds;
  r.trajectory = std::move(trajectory);
  r.percolated = infected_count == g.vertex_count();
  return r;
}

void check_initial(const Graph& g, const VertexSet& initial) {
  if (initial.universe() != g.vertex_count())
    throw std::invalid_argument("run_bootstrap: initial set universe does not match graph");
}

}  // namespace

PercolationResult run_bootstrap(const Graph& g, const VertexSet& initial) {
  check_initial(g, initial);
  const int n = g.vertex_count();

  std::vector<std::uint8_t> infected(static_cast<std::size_t>(n), 0);
  std::vector<int> infected_nbrs(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> queued(static_cast<std::size_t>(n), 0);
  std::vector<int> frontier, next, candidates;

  std::int64_t infected_count = initial.size();
  for (int v : initial.elements()) infected[static_cast<std::size_t>(v)] = 1;
  frontier = initial.elements();

  std::vector<std::int64_t> trajectory{infected_count};
  int rounds = 0;
  bool first_round = true;

  for (;;) {
    // Drain the newly infected queue, updating |I_t ∩ Γ(v)| counters. Only
    // then are thresholds checked, which keeps the update synchronous.
    candidates.clear();
    for (int u : frontier) {
      for (int w : g.neighbors(u)) {
        ++infected_nbrs[static_cast<std::size_t>(w)];
        if (!queued[static_cast<std::size_t>(w)] && !infected[static_cast<std::size_t>(w)]) {
          queued[static_cast<std::size_t>(w)] = 1;
          candidates.push_back(w);
        }
      }
    }
    if (first_round) {
      // Degree-0 vertices satisfy 0 >= 0 but no counter ever touches them.
      for (int v = 0; v < n; ++v) {
        if (!infected[static_cast<std::size_t>(v)] && g.degree(v) == 0) {
          queued[static_cast<std::size_t>(v)] = 1;
          candidates.push_back(v);
        }
      }
      first_round = false;
    }

    next.clear();
    for (int v : candidates) {
      queued[static_cast<std::size_t>(v)] = 0;
      if (2 * infected_nbrs[static_cast<std::size_t>(v)] >= g.degree(v)) next.push_back(v);
    }
    if (next.empty()) break;

    for (int v : next) infected[static_cast<std::size_t>(v)] = 1;
    infected_count += static_cast<std::int64_t>(next.size());
    trajectory.push_back(infected_count);
    ++rounds;
    frontier.swap(next);
  }

  return finish(g, infected, infected_count, rounds, std::move(trajectory));
}

PercolationResult run_bootstrap_reference(const Graph& g, const VertexSet& initial) {
  check_initial(g, initial);
  const int n = g.vertex_count();

  std::vector<std::uint8_t> infected(static_cast<std::size_t>(n), 0);
  std::int64_t infected_count = initial.size();
  for (int v : initial.elements()) infected[static_cast<std::size_t>(v)] = 1;

  std::vector<std::int64_t> trajectory{infected_count};
  int rounds = 0;

  for (;;) {
    std::vector<int> newly;
    for (int v = 0; v < n; ++v) {
      if (infected[static_cast<std::size_t>(v)]) continue;
      int cnt = 0;
      for (int w : g.neighbors(v)) cnt += infected[static_cast<std::size_t>(w)];
      if (2 * cnt >= g.degree(v)) newly.push_back(v);
    }
    if (newly.empty()) break;
    for (int v : newly) infected[static_cast<std::size_t>(v)] = 1;
    infected_count += static_cast<std::int64_t>(newly.size());
    trajectory.push_back(infected_count);
    ++rounds;
  }

  return finish(g, infected, infected_count, rounds, std::move(trajectory));
}

}  // namespace majoperc
