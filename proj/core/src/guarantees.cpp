#include "indpath/guarantees.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace indpath {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::undecided: return "undecided";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adj[v] |= Mask{1} << w;
  return adj;
}

VertexSet mask_to_set(std::size_t n, Mask mask) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v)
    if (mask >> v & 1) s.insert(static_cast<Vertex>(v));
  return s;
}

}  // namespace

CheckResult check_local_density(const Graph& g, std::uint64_t size_cap,
                                std::uint64_t edge_cap) {
  const std::size_t n = g.vertex_count();
  if (n > kExactCheckMaxVertices)
    return {CheckStatus::undecided, std::nullopt,
            "exact mode capped at 25 vertices; instance not decided"};
  if (edge_cap == 0)
    return {CheckStatus::fail, VertexSet(n), "edge_cap 0 is violated by the empty set"};
  const auto adj = adjacency_masks(g);
  const std::size_t max_size = size_cap > 0 ? static_cast<std::size_t>(size_cap - 1) : 0;

  Mask witness = 0;
  bool found = false;
  // Depth-first inclusion over vertices; first violating set in
  // lexicographic order wins, which keeps the witness deterministic.
  auto recurse = [&](auto&& self, std::size_t idx, Mask chosen, std::size_t count,
                     std::uint64_t edges) -> void {
    if (found) return;
    if (edges >= edge_cap) {
      witness = chosen;
      found = true;
      return;
    }
    if (idx == n || count == max_size) return;
    const std::uint64_t slots = std::min(max_size - count, n - idx);
    if (edges + slots * (n - 1) < edge_cap) return;  // each vertex adds < n edges
    self(self, idx + 1, chosen | (Mask{1} << idx), count + 1,
         edges + static_cast<std::uint64_t>(std::popcount(adj[idx] & chosen)));
    if (found) return;
    self(self, idx + 1, chosen, count, edges);
  };
  recurse(recurse, 0, 0, 0, 0);

  if (found) return {CheckStatus::fail, mask_to_set(n, witness), ""};
  return {CheckStatus::pass, std::nullopt, ""};
}

CheckResult check_expansion(const Graph& gprime, std::uint64_t s1, std::uint64_t need) {
  const std::size_t n = gprime.vertex_count();
  if (n > kExactCheckMaxVertices)
    return {CheckStatus::undecided, std::nullopt,
            "exact mode capped at 25 vertices; instance not decided"};
  if (s1 > n)
    return {CheckStatus::pass, std::nullopt, "no set of the required size exists"};
  const auto adj = adjacency_masks(gprime);

  Mask witness = 0;
  bool found = false;
  auto recurse = [&](auto&& self, std::size_t idx, Mask chosen, Mask nbhd,
                     std::size_t count) -> void {
    if (found) return;
    if (count == s1) {
      if (static_cast<std::uint64_t>(std::popcount(nbhd & ~chosen)) < need) {
        witness = chosen;
        found = true;
      }
      return;
    }
    if (n - idx < s1 - count) return;  // not enough vertices left
    self(self, idx + 1, chosen | (Mask{1} << idx), nbhd | adj[idx], count + 1);
    if (found) return;
    self(self, idx + 1, chosen, nbhd, count);
  };
  recurse(recurse, 0, 0, 0, 0);

  if (found) return {CheckStatus::fail, mask_to_set(n, witness), ""};
  return {CheckStatus::pass, std::nullopt, ""};
}

GuaranteeOutcome find_induced_path_guaranteed(const Graph& gprime, const Graph& host,
                                              const GuaranteeParams& params,
                                              const VertexOrdering& pi) {
  if (params.s1 < 1 || params.s2 < 1 || params.ell < 1)
    throw std::invalid_argument("guarantee parameters must all be >= 1");
  GuaranteeOutcome out;
  if (host.vertex_count() < params.ell + params.s1 + params.s2) {
    out.found = false;
    out.note = "hypotheses violated: vertex count below ell+s1+s2";
    return out;
  }
  QuerySource src = QuerySource::fixed(gprime, host);
  InducedDfs dfs(src, pi);
  StopRule stop;
  stop.s1_cap = params.s1;
  stop.s2_cap = params.s2;
  stop.path_vertices = params.ell + 1;
  out.record = dfs.run(stop);
  if (out.record.final_u.size() >= params.ell + 1) {
    out.path = out.record.final_u;
    if (!is_induced_path(gprime, host, out.path))
      throw std::runtime_error("internal error: stack failed path certification");
    out.found = true;
    return out;
  }
  out.found = false;
  out.note = "hypotheses violated: stopped (" +
             std::string(to_string(out.record.stop_reason)) + ") with |U| = " +
             std::to_string(out.record.final_u.size()) + ", |S1| = " +
             std::to_string(out.record.s1_final) + ", |S2| = " +
             std::to_string(out.record.s2_final);
  return out;
}

PipelineResult ramsey_pipeline(const Graph& host, const EdgeColouring& colouring,
                               const PipelineParams& pp) {
  if (colouring.colour.size() != host.edge_count())
    throw std::invalid_argument("colouring does not cover the host edge set");
  PipelineResult res;
  res.host_n = host.vertex_count();
  res.host_m = host.edge_count();
  res.prune_threshold = pp.prune_threshold;
  res.params = pp.params;

  const auto sizes = colour_class_sizes(colouring);
  res.colour = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  res.class_m = sizes[res.colour];

  const auto host_edges = host.edges();
  std::vector<Edge> class_edges;
  class_edges.reserve(res.class_m);
  for (std::size_t e = 0; e < host_edges.size(); ++e)
    if (colouring.colour[e] == res.colour) class_edges.push_back(host_edges[e]);
  const Graph g1 = Graph::from_edge_list(host.vertex_count(), class_edges);
  for (std::size_t v = 0; v < g1.vertex_count(); ++v)
    if (g1.degree(static_cast<Vertex>(v)) > 0) ++res.g1_n;

  auto pruned = prune_min_degree(g1, pp.prune_threshold);
  res.gprime_n = pruned.graph.vertex_count();
  res.gprime_m = pruned.graph.edge_count();

  const std::uint64_t needed = pp.params.ell + pp.params.s1 + pp.params.s2;
  if (res.gprime_n < needed) {
    res.diagnostic = "pruned colour class has " + std::to_string(res.gprime_n) +
                     " vertices, fewer than ell+s1+s2 = " + std::to_string(needed);
    return res;
  }

  const auto host_ind = induced_subgraph(host, pruned.kept);
  const auto pi = pp.shuffle_seed
                      ? VertexOrdering::shuffled(res.gprime_n, *pp.shuffle_seed)
                      : VertexOrdering::identity(res.gprime_n);
  auto outcome = find_induced_path_guaranteed(pruned.graph, host_ind.graph,
                                              pp.params, pi);
  res.stop_reason = outcome.record.stop_reason;
  if (!outcome.found) {
    res.diagnostic = outcome.note;
    return res;
  }

  res.found = true;
  res.path.reserve(outcome.path.size());
  for (Vertex v : outcome.path) res.path.push_back(pruned.kept[v]);
  res.path_length = res.path.size() - 1;

  // Certificates, rechecked in host labels and against the full host.
  res.cert_monochromatic = true;
  for (std::size_t i = 0; i + 1 < res.path.size(); ++i) {
    if (!g1.has_edge(res.path[i], res.path[i + 1]) ||
        colouring.colour[host.edge_index(res.path[i], res.path[i + 1])] != res.colour) {
      res.cert_monochromatic = false;
      break;
    }
  }
  res.cert_path_in_gprime = true;
  for (std::size_t i = 0; i + 1 < outcome.path.size(); ++i)
    if (!pruned.graph.has_edge(outcome.path[i], outcome.path[i + 1])) {
      res.cert_path_in_gprime = false;
      break;
    }
  res.cert_induced_in_host = true;
  for (std::size_t i = 0; i < res.path.size() && res.cert_induced_in_host; ++i)
    for (std::size_t j = i + 2; j < res.path.size(); ++j)
      if (host.has_edge(res.path[i], res.path[j])) {
        res.cert_induced_in_host = false;
        break;
      }
  return res;
}

std::string pipeline_diagnostics_json(const PipelineResult& r) {
  nlohmann::json j;
  j["found"] = r.found;
  j["colour"] = r.colour;
  j["stages"] = {{"host_n", r.host_n},     {"host_m", r.host_m},
                 {"class_m", r.class_m},   {"g1_n", r.g1_n},
                 {"gprime_n", r.gprime_n}, {"gprime_m", r.gprime_m}};
  j["prune_threshold"] = r.prune_threshold;
  j["params"] = {{"s1", r.params.s1}, {"s2", r.params.s2}, {"ell", r.params.ell}};
  j["stop_reason"] = std::string(to_string(r.stop_reason));
  if (r.found) {
    j["path_length"] = r.path_length;
    j["path"] = r.path;
    j["certificates"] = {{"monochromatic", r.cert_monochromatic},
                         {"path_in_gprime", r.cert_path_in_gprime},
                         {"induced_in_host", r.cert_induced_in_host}};
  }
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j.dump();
}

}  // namespace indpath
