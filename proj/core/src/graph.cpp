#include "indpath/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace indpath {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

bool VertexSet::insert(Vertex v) {
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (w & bit) return false;
  w |= bit;
  ++count_;
  return true;
}

bool VertexSet::erase(Vertex v) {
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) return false;
  w &= ~bit;
  --count_;
  return true;
}

void VertexSet::clear() {
  std::fill(words_.begin(), words_.end(), 0);
  count_ = 0;
}

Vertex VertexSet::next(Vertex from) const {
  if (from >= universe_) return static_cast<Vertex>(universe_);
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) {
      const Vertex v = static_cast<Vertex>((wi << 6) + std::countr_zero(w));
      return v < universe_ ? v : static_cast<Vertex>(universe_);
    }
    if (++wi >= words_.size()) return static_cast<Vertex>(universe_);
    w = words_[wi];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (Vertex v = next(0); v < universe_; v = next(v + 1)) out.push_back(v);
  return out;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> vs) {
  VertexSet s(universe);
  for (Vertex v : vs) s.insert(v);
  return s;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  std::vector<std::uint64_t> off(n + 1, 0);
  for (const auto& [u, v] : canon) {
    ++off[u + 1];
    ++off[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) off[i + 1] += off[i];
  std::vector<Vertex> adj(canon.size() * 2);
  std::vector<std::uint64_t> cursor(off.begin(), off.end() - 1);
  for (const auto& [u, v] : canon) {
    adj[cursor[u]++] = v;
    adj[cursor[v]++] = u;
  }
  return graph_from_sorted_adjacency(n, std::move(off), std::move(adj));
}

Graph graph_from_sorted_adjacency(std::size_t n, std::vector<std::uint64_t> off,
                                  std::vector<Vertex> adj) {
  Graph g;
  g.n_ = n;
  g.m_ = adj.size() / 2;
  g.off_ = std::move(off);
  g.adj_ = std::move(adj);
  g.build_canon_offsets();
  return g;
}

void Graph::build_canon_offsets() {
  canon_off_.assign(n_ + 1, 0);
  for (std::size_t u = 0; u < n_; ++u) {
    const auto nb = neighbors(static_cast<Vertex>(u));
    const auto it = std::upper_bound(nb.begin(), nb.end(), static_cast<Vertex>(u));
    canon_off_[u + 1] = canon_off_[u] + static_cast<std::uint64_t>(nb.end() - it);
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const auto nb = neighbors(u);
  const auto base = std::upper_bound(nb.begin(), nb.end(), u);
  const auto it = std::lower_bound(base, nb.end(), v);
  return canon_off_[u] + static_cast<std::uint64_t>(it - base);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u)
    for (Vertex v : neighbors(static_cast<Vertex>(u)))
      if (v > u) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

bool Graph::is_subgraph_of(const Graph& host) const {
  if (n_ != host.vertex_count()) return false;
  for (std::size_t u = 0; u < n_; ++u)
    for (Vertex v : neighbors(static_cast<Vertex>(u)))
      if (v > u && !host.has_edge(static_cast<Vertex>(u), v)) return false;
  return true;
}

std::uint64_t excess(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n);
  for (std::size_t v = 0; v < n; ++v) parent[v] = static_cast<Vertex>(v);
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::uint64_t exc = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
      if (v <= u) continue;
      const Vertex a = find(static_cast<Vertex>(u)), b = find(v);
      if (a == b)
        ++exc;  // edge closes a cycle inside its component
      else
        parent[a] = b;
    }
  return exc;
}

PruneResult prune_min_degree(const Graph& g, double d) {
  if (d < 0) throw std::invalid_argument("prune threshold must be >= 0");
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> deg(n);
  std::vector<Vertex> queue;
  VertexSet removed(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    if (static_cast<double>(deg[v]) <= d) {
      queue.push_back(static_cast<Vertex>(v));
      removed.insert(static_cast<Vertex>(v));
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (removed.contains(w)) continue;
      if (static_cast<double>(--deg[w]) <= d) {
        removed.insert(w);
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> kept;
  kept.reserve(n - removed.size());
  for (std::size_t v = 0; v < n; ++v)
    if (!removed.contains(static_cast<Vertex>(v))) kept.push_back(static_cast<Vertex>(v));
  auto sub = induced_subgraph(g, kept);
  return PruneResult{std::move(sub.graph), std::move(sub.vertices), std::move(removed)};
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> sorted_vertices) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = sorted_vertices.size();
  std::vector<Vertex> new_id(n, static_cast<Vertex>(n));
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = sorted_vertices[i];
    if (v >= n) throw std::invalid_argument("subgraph vertex out of range");
    new_id[v] = static_cast<Vertex>(i);
  }
  std::vector<std::uint64_t> off(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex w : g.neighbors(sorted_vertices[i]))
      if (new_id[w] != static_cast<Vertex>(n)) ++off[i + 1];
  }
  for (std::size_t i = 0; i < k; ++i) off[i + 1] += off[i];
  std::vector<Vertex> adj(off[k]);
  std::uint64_t pos = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex w : g.neighbors(sorted_vertices[i]))
      if (new_id[w] != static_cast<Vertex>(n)) adj[pos++] = new_id[w];
    std::sort(adj.begin() + static_cast<std::ptrdiff_t>(off[i]),
              adj.begin() + static_cast<std::ptrdiff_t>(off[i + 1]));
  }
  InducedSubgraph out;
  out.graph = graph_from_sorted_adjacency(k, std::move(off), std::move(adj));
  out.vertices.assign(sorted_vertices.begin(), sorted_vertices.end());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe_size() != g.vertex_count())
    throw std::invalid_argument("vertex set universe does not match graph");
  const auto vs = s.to_vector();
  return induced_subgraph(g, vs);
}

VertexSet external_neighbourhood(const Graph& g, const VertexSet& s) {
  if (s.universe_size() != g.vertex_count())
    throw std::invalid_argument("vertex set universe does not match graph");
  VertexSet out(g.vertex_count());
  for (Vertex v = s.next(0); v < s.universe_size(); v = s.next(v + 1))
    for (Vertex w : g.neighbors(v))
      if (!s.contains(w)) out.insert(w);
  return out;
}

bool is_induced_path(const Graph& sub, const Graph& host, std::span<const Vertex> seq) {
  if (sub.vertex_count() != host.vertex_count() || !sub.is_subgraph_of(host))
    throw std::invalid_argument("sub must be a subgraph of host on the same vertex set");
  const std::size_t k = seq.size();
  VertexSet seen(host.vertex_count());
  for (Vertex v : seq) {
    if (v >= host.vertex_count()) throw std::invalid_argument("path vertex out of range");
    if (!seen.insert(v)) return false;
  }
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (!sub.has_edge(seq[i], seq[i + 1])) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j)
      if (host.has_edge(seq[i], seq[j])) return false;
  return true;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
  return is_induced_path(g, g, seq);
}

std::uint64_t edges_within(const Graph& g, const VertexSet& s) {
  std::uint64_t count = 0;
  for (Vertex v = s.next(0); v < s.universe_size(); v = s.next(v + 1))
    for (Vertex w : g.neighbors(v))
      if (w > v && s.contains(w)) ++count;
  return count;
}

}  // namespace indpath
