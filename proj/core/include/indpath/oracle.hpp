#pragma once

#include <cstdint>
#include <vector>

#include "indpath/graph.hpp"

namespace indpath {

// Exact brute-force ground truth for desk-scale instances. All searches are
// branch-and-bound over path extensions / subset inclusion with hard vertex
// caps; instances above the cap are rejected, never approximated.

inline constexpr std::size_t kExactPathMaxVertices = 30;
inline constexpr std::size_t kExactTwoGraphMaxVertices = 25;
inline constexpr std::size_t kExactDenseSetMaxVertices = 25;

struct ExactPath {
  std::uint64_t length = 0;  // edges
  std::vector<Vertex> path;  // witness (single vertex for length 0)
};

/// Longest induced path of g. |V| <= 30.
ExactPath exact_longest_induced_path(const Graph& g);

/// Longest path in `sub` whose vertex sequence is an induced path in `host`.
/// |V| <= 25; sub must be a subgraph of host.
ExactPath exact_longest_induced_path(const Graph& sub, const Graph& host);

struct ExactDenseSet {
  std::uint64_t edges = 0;
  VertexSet vertices;
};

/// Maximum of e(G[S]) over |S| <= size_cap. |V| <= 25.
ExactDenseSet exact_max_edges_bounded_set(const Graph& g, std::size_t size_cap);

}  // namespace indpath
