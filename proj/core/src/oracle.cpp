#include "indpath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace indpath {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adj[v] |= Mask{1} << w;
  return adj;
}

struct PathSearch {
  const std::vector<Mask>& sub;
  const std::vector<Mask>& host;
  Mask all;
  std::vector<Vertex> current;
  std::vector<Vertex> best;

  // blocked: vertices host-adjacent to an interior path vertex. A new vertex
  // must be sub-adjacent to the last one and host-adjacent to nothing else.
  void extend(Vertex last, Mask path, Mask blocked) {
    if (current.size() > best.size()) best = current;
    const Mask avail = all & ~(path | blocked);
    if (current.size() + static_cast<std::size_t>(std::popcount(avail)) <= best.size())
      return;  // even taking everything available cannot beat the best
    Mask cands = sub[last] & avail;
    while (cands) {
      const Vertex w = static_cast<Vertex>(std::countr_zero(cands));
      cands &= cands - 1;
      current.push_back(w);
      extend(w, path | (Mask{1} << w), blocked | host[last]);
      current.pop_back();
    }
  }
};

}  // namespace

ExactPath exact_longest_induced_path(const Graph& sub, const Graph& host) {
  const std::size_t n = host.vertex_count();
  if (n > kExactTwoGraphMaxVertices)
    throw std::invalid_argument("exact two-graph path search capped at 25 vertices");
  if (!sub.is_subgraph_of(host))
    throw std::invalid_argument("sub must be a subgraph of host");
  const auto sub_adj = adjacency_masks(sub);
  const auto host_adj = adjacency_masks(host);

  PathSearch search{sub_adj, host_adj,
                    n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, {}, {}};
  for (std::size_t v = 0; v < n; ++v) {
    search.current.assign(1, static_cast<Vertex>(v));
    search.extend(static_cast<Vertex>(v), Mask{1} << v, 0);
  }
  ExactPath out;
  out.path = search.best;
  out.length = out.path.empty() ? 0 : out.path.size() - 1;
  return out;
}

ExactPath exact_longest_induced_path(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kExactPathMaxVertices)
    throw std::invalid_argument("exact induced path search capped at 30 vertices");
  const auto adj = adjacency_masks(g);
  PathSearch search{adj, adj, n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, {}, {}};
  for (std::size_t v = 0; v < n; ++v) {
    search.current.assign(1, static_cast<Vertex>(v));
    search.extend(static_cast<Vertex>(v), Mask{1} << v, 0);
  }
  ExactPath out;
  out.path = search.best;
  out.length = out.path.empty() ? 0 : out.path.size() - 1;
  return out;
}

ExactDenseSet exact_max_edges_bounded_set(const Graph& g, std::size_t size_cap) {
  const std::size_t n = g.vertex_count();
  if (n > kExactDenseSetMaxVertices)
    throw std::invalid_argument("exact dense-set search capped at 25 vertices");
  const auto adj = adjacency_masks(g);

  std::vector<std::uint32_t> suffix_max_deg(n + 1, 0);
  for (std::size_t v = n; v-- > 0;)
    suffix_max_deg[v] = std::max<std::uint32_t>(
        suffix_max_deg[v + 1], static_cast<std::uint32_t>(g.degree(static_cast<Vertex>(v))));

  Mask best_mask = 0;
  std::uint64_t best_edges = 0;

  // Include/exclude over vertices in index order; optimistic bound of
  // C(r,2) new internal edges plus r times the best remaining degree.
  auto recurse = [&](auto&& self, std::size_t idx, Mask chosen, std::size_t count,
                     std::uint64_t edges) -> void {
    if (edges > best_edges) {
      best_edges = edges;
      best_mask = chosen;
    }
    if (idx == n || count == size_cap) return;
    const std::uint64_t slots = std::min(size_cap - count, n - idx);
    const std::uint64_t optimistic =
        edges + slots * (slots - 1) / 2 + slots * suffix_max_deg[idx];
    if (optimistic <= best_edges) return;
    self(self, idx + 1, chosen | (Mask{1} << idx), count + 1,
         edges + static_cast<std::uint64_t>(std::popcount(adj[idx] & chosen)));
    self(self, idx + 1, chosen, count, edges);
  };
  if (size_cap > 0) recurse(recurse, 0, 0, 0, 0);

  ExactDenseSet out;
  out.edges = best_edges;
  out.vertices = VertexSet(n);
  for (std::size_t v = 0; v < n; ++v)
    if (best_mask >> v & 1) out.vertices.insert(static_cast<Vertex>(v));
  return out;
}

}  // namespace indpath
