#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace indpath {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Membership set over a fixed vertex universe 0..n-1, with cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  std::size_t universe_size() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return words_[v >> 6] >> (v & 63) & 1u;
  }
  /// Returns true if v was not already a member.
  bool insert(Vertex v);
  /// Returns true if v was a member.
  bool erase(Vertex v);
  void clear();

  /// Smallest member >= from, or universe_size() if none.
  Vertex next(Vertex from = 0) const;

  std::vector<Vertex> to_vector() const;
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> vs);

  bool operator==(const VertexSet& other) const = default;

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph in CSR form; immutable after construction and
/// safe to share across threads. Vertices are dense integers 0..n-1,
/// neighbour lists sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Deduplicates edges; rejects self-loops and out-of-range endpoints.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges) {
    return from_edge_list(n, std::span<const Edge>(edges));
  }
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return off_[v + 1] - off_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Canonical id of edge {u,v} (u<v pairs in lexicographic order), in 0..m-1.
  /// Precondition: the edge exists.
  std::uint64_t edge_index(Vertex u, Vertex v) const;
  /// All edges as canonical (u<v) pairs, ordered by edge_index.
  std::vector<Edge> edges() const;

  /// True iff every edge of this graph is an edge of `host` (same vertex count).
  bool is_subgraph_of(const Graph& host) const;

 private:
  std::size_t n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> off_;
  std::vector<Vertex> adj_;
  std::vector<std::uint64_t> canon_off_;  // canonical edge ids owned by u

  void build_canon_offsets();
  friend Graph graph_from_sorted_adjacency(std::size_t, std::vector<std::uint64_t>, std::vector<Vertex>);
};

/// Internal constructor for callers that already hold valid CSR arrays.
Graph graph_from_sorted_adjacency(std::size_t n, std::vector<std::uint64_t> off,
                                  std::vector<Vertex> adj);

/// Sum over connected components of |E|-|V|+1; isolated vertices contribute 0.
std::uint64_t excess(const Graph& g);

struct PruneResult {
  Graph graph;                  // relabelled to 0..kept.size()-1
  std::vector<Vertex> kept;     // new id -> old id, ascending
  VertexSet removed;            // over the original universe
};

/// Maximal subgraph of minimum degree > d, obtained by repeatedly deleting
/// vertices of degree <= d. The fixed point is order-independent.
PruneResult prune_min_degree(const Graph& g, double d);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertices;  // new id -> old id, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> sorted_vertices);

/// Vertices outside s with a neighbour in s.
VertexSet external_neighbourhood(const Graph& g, const VertexSet& s);

/// True iff seq is a path whose edges all lie in `sub` and whose vertex set
/// induces exactly that path in `host`: consecutive pairs are sub-edges,
/// non-consecutive pairs are host-non-edges. Empty and single-vertex
/// sequences are length-0 paths. A repeated vertex makes the result false.
/// Throws if sub is not a subgraph of host.
bool is_induced_path(const Graph& sub, const Graph& host, std::span<const Vertex> seq);
/// One-graph form: path in g, induced in g.
bool is_induced_path(const Graph& g, std::span<const Vertex> seq);

/// Number of edges of g with both endpoints in s.
std::uint64_t edges_within(const Graph& g, const VertexSet& s);

}  // namespace indpath
