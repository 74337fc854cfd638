#include "majoperc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "majoperc/rng.hpp"

namespace majoperc {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  member_.assign(static_cast<std::size_t>(universe), 0);
}

VertexSet VertexSet::from_elements(int universe, std::vector<int> elems) {
  VertexSet s(universe);
  for (int v : elems) {
    if (v < 0 || v >= universe) throw std::invalid_argument("VertexSet: element out of range");
    if (s.member_[static_cast<std::size_t>(v)]) throw std::invalid_argument("VertexSet: duplicate element");
    s.member_[static_cast<std::size_t>(v)] = 1;
  }
  s.elems_ = std::move(elems);
  return s;
}

VertexSet VertexSet::prefix(int universe, std::int64_t m) {
  if (m < 0 || m > universe) throw std::invalid_argument("VertexSet: prefix size out of range");
  VertexSet s(universe);
  s.elems_.reserve(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) {
    s.member_[static_cast<std::size_t>(v)] = 1;
    s.elems_.push_back(v);
  }
  return s;
}

void VertexSet::add(int v) {
  if (v < 0 || v >= universe_) throw std::invalid_argument("VertexSet: element out of range");
  if (member_[static_cast<std::size_t>(v)]) return;
  member_[static_cast<std::size_t>(v)] = 1;
  elems_.push_back(v);
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges, double gen_p) {
  if (n < 1) throw std::invalid_argument("Graph: n must be >= 1");
  Graph g;
  g.n_ = n;
  g.gen_p_ = gen_p;
  g.edge_count_ = static_cast<std::int64_t>(edges.size());
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u > v) std::swap(u, v);
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[static_cast<std::size_t>(v) + 1] = g.offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
  g.adj_.resize(static_cast<std::size_t>(g.offsets_[static_cast<std::size_t>(n)]));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = v;
    g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto b = g.adj_.begin() + g.offsets_[static_cast<std::size_t>(v)];
    auto e = g.adj_.begin() + g.offsets_[static_cast<std::size_t>(v) + 1];
    if (!std::is_sorted(b, e)) std::sort(b, e);  // sampled edge streams arrive sorted
    if (std::adjacent_find(b, e) != e) throw std::invalid_argument("Graph: duplicate edge");
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

// Pairs (u,v), u<v, linearized lexicographically; row u holds n-1-u pairs.
struct PairWalker {
  int n;
  int u = 0;
  std::int64_t row_end;  // one past the last index of row u

  explicit PairWalker(int n_) : n(n_), row_end(n_ - 1) {}

  // Advances to the row containing linear index `pos` and returns (u, v).
  std::pair<int, int> locate(std::int64_t pos) {
    while (pos >= row_end) {
      ++u;
      row_end += n - 1 - u;
    }
    const std::int64_t row_start = row_end - (n - 1 - u);
    return {u, static_cast<int>(u + 1 + (pos - row_start))};
  }
};

}  // namespace

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p must be in [0,1]");

  const std::int64_t total_pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;

  if (p == 1.0) {
    edges.reserve(static_cast<std::size_t>(total_pairs));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  } else if (p > 0.0) {
    SplitMix64 rng(seed);
    edges.reserve(static_cast<std::size_t>(static_cast<double>(total_pairs) * p * 1.05) + 16);
    const double inv_log_q = 1.0 / std::log1p(-p);
    PairWalker walker(n);
    std::int64_t pos = -1;
    for (;;) {
      // Geometric skip: floor(log(U)/log(1-p)) misses, then a hit.
      const double u01 = 1.0 - rng.next_unit();  // (0, 1]
      const double gap = std::floor(std::log(u01) * inv_log_q);
      if (gap >= static_cast<double>(total_pairs - pos)) break;  // off the end; avoids int64 overflow
      pos += 1 + static_cast<std::int64_t>(gap);
      if (pos >= total_pairs) break;
      edges.push_back(walker.locate(pos));
    }
  }

  Graph g = Graph::from_edges(n, std::move(edges), p);
  return g;
}

Graph sample_gnp_naive(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_gnp_naive: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp_naive: p must be in [0,1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges), p);
}

SetEdgeCounts set_edge_counts(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw std::invalid_argument("set_edge_counts: set universe does not match graph");
  SetEdgeCounts c;
  std::int64_t within_twice = 0;
  for (int v : s.elements()) {
    for (int w : g.neighbors(v)) {
      if (s.contains(w))
        ++within_twice;
      else
        ++c.boundary;
    }
  }
  c.within = within_twice / 2;
  return c;
}

int min_degree(const Graph& g) {
  int md = g.vertex_count() > 0 ? g.degree(0) : 0;
  for (int v = 1; v < g.vertex_count(); ++v) md = std::min(md, g.degree(v));
  return md;
}

void save_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  save_edge_list(g, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Graph load_edge_list(std::istream& in) {
  int n = 0;
  std::int64_t m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: bad header, expected 'n m'");
  if (n < 1 || m < 0) throw std::runtime_error("edge list: invalid header values");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated at edge " + std::to_string(i));
    if (u >= v) throw std::runtime_error("edge list: edges must satisfy u < v");
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return load_edge_list(in);
}

}  // namespace majoperc
