#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace majoperc {

// Vertex subset of [0, n) with O(1) membership plus an element list.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  // Validates range and distinctness; keeps the given element order.
  static VertexSet from_elements(int universe, std::vector<int> elems);

  // First m vertices {0, ..., m-1}.
  static VertexSet prefix(int universe, std::int64_t m);

  void add(int v);  // no-op if already present
  bool contains(int v) const { return v >= 0 && v < universe_ && member_[static_cast<std::size_t>(v)] != 0; }
  int size() const { return static_cast<int>(elems_.size()); }
  int universe() const { return universe_; }
  const std::vector<int>& elements() const { return elems_; }

  // Equality is membership over the same universe; element order is irrelevant.
  bool operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && member_ == other.member_;
  }

private:
  int universe_ = 0;
  std::vector<std::uint8_t> member_;
  std::vector<int> elems_;
};

// Immutable simple undirected graph in CSR layout, neighbours sorted per vertex.
// Safe to share across threads once built.
class Graph {
public:
  Graph() = default;

  // Builds from an edge list; edges may arrive in any order, u != v required,
  // duplicates rejected. gen_p < 0 means "not a G(n,p) sample".
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges, double gen_p = -1.0);

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }
  int degree(int v) const {
    return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)]);
  }
  std::span<const int> neighbors(int v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {adj_.data() + b, static_cast<std::size_t>(e - b)};
  }
  double gen_p() const { return gen_p_; }
  bool has_edge(int u, int v) const;

private:
  friend Graph sample_gnp(int n, double p, std::uint64_t seed);

  int n_ = 0;
  std::int64_t edge_count_ = 0;
  double gen_p_ = -1.0;
  std::vector<std::int64_t> offsets_;
  std::vector<int> adj_;
};

// G(n,p) sample: every one of the C(n,2) pairs present independently with
// probability p. Deterministic in (n, p, seed). Expected O(n + edges) time via
// geometric gap-skipping over the linearized pair index.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// Naive per-pair Bernoulli sampler, O(n^2); kept as the distributional
// reference for the gap-skipping sampler.
Graph sample_gnp_naive(int n, double p, std::uint64_t seed);

// Edges inside s and edges crossing between s and its complement.
struct SetEdgeCounts {
  std::int64_t within = 0;
  std::int64_t boundary = 0;
};
SetEdgeCounts set_edge_counts(const Graph& g, const VertexSet& s);

int min_degree(const Graph& g);

// Plain text edge list: first line "n m", then one "u v" per line with u < v,
// sorted lexicographically. Round-trips bit-exactly.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::string& path);
Graph load_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

}  // namespace majoperc
