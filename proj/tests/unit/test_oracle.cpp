#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <vector>

#include "indpath/dfs.hpp"
#include "indpath/oracle.hpp"
#include "indpath/query_source.hpp"
#include "indpath/random.hpp"

using namespace indpath;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph::from_edge_list(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}

// Independent cross-oracle: enumerate every vertex sequence recursively.
std::uint64_t longest_by_enumeration(const Graph& sub, const Graph& host) {
  const std::size_t n = host.vertex_count();
  std::uint64_t best = 0;
  std::vector<Vertex> seq;
  auto extend = [&](auto&& self) -> void {
    if (!seq.empty()) best = std::max<std::uint64_t>(best, seq.size() - 1);
    for (Vertex w = 0; w < n; ++w) {
      if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
      if (!seq.empty()) {
        if (!sub.has_edge(seq.back(), w)) continue;
        bool chord = false;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
          if (host.has_edge(seq[i], w)) chord = true;
        if (chord) continue;
      }
      seq.push_back(w);
      self(self);
      seq.pop_back();
    }
  };
  extend(extend);
  return best;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("known longest induced paths") {
  CHECK(exact_longest_induced_path(complete(4)).length == 1);
  CHECK(exact_longest_induced_path(cycle(5)).length == 3);
  CHECK(exact_longest_induced_path(cycle(6)).length == 4);
  CHECK(exact_longest_induced_path(Graph::from_edge_list(3, {})).length == 0);
}

TEST_CASE("witness is itself an induced path of the stated length") {
  SplitMix64 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.next_below(14);
    const Graph g = sample_gnp(n, 0.3, rng.next());
    const auto r = exact_longest_induced_path(g);
    REQUIRE(is_induced_path(g, r.path));
    CHECK((r.path.empty() ? 0 : r.path.size() - 1) == r.length);
  }
}

TEST_CASE("matches full enumeration on small graphs") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.next_below(8);
    const Graph g = sample_gnp(n, 0.35, rng.next());
    CHECK(exact_longest_induced_path(g).length == longest_by_enumeration(g, g));
  }
}

TEST_CASE("two-graph search with sub = host coincides with the one-graph search") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.next_below(12);
    const Graph g = sample_gnp(n, 0.3, rng.next());
    CHECK(exact_longest_induced_path(g, g).length == exact_longest_induced_path(g).length);
  }
}

TEST_CASE("two-graph examples") {
  // perfect matching inside K4: no two matching edges share a vertex
  const Graph matching = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK(exact_longest_induced_path(matching, complete(4)).length == 1);

  // P4 inside C4: the 3-edge path has a host chord
  const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(exact_longest_induced_path(p4, cycle(4)).length == 2);
}

TEST_CASE("two-graph search matches enumeration") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.next_below(7);
    const Graph host = sample_gnp(n, 0.5, rng.next());
    // random sub-subset of the host's edges
    std::vector<Edge> sub_edges;
    for (const auto& e : host.edges())
      if (rng.next_below(2)) sub_edges.push_back(e);
    const Graph sub = Graph::from_edge_list(n, sub_edges);
    CHECK(exact_longest_induced_path(sub, host).length ==
          longest_by_enumeration(sub, host));
  }
}

TEST_CASE("max edges in bounded sets") {
  CHECK(exact_max_edges_bounded_set(complete(5), 3).edges == 3);
  CHECK(exact_max_edges_bounded_set(cycle(4), 4).edges == 4);
  const Graph star = Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(exact_max_edges_bounded_set(star, 4).edges == 3);  // forests: |S|-1
  CHECK(exact_max_edges_bounded_set(star, 6).edges == 5);
  CHECK(exact_max_edges_bounded_set(star, 0).edges == 0);

  // the witness attains the count within the size cap
  const auto r = exact_max_edges_bounded_set(complete(5), 3);
  CHECK(r.vertices.size() <= 3);
  CHECK(edges_within(complete(5), r.vertices) == r.edges);
}

TEST_CASE("oracle results are invariant under relabelling") {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.next_below(11);
    const Graph g = sample_gnp(n, 0.3, rng.next());
    const auto perm = random_permutation(n, rng.next());
    std::vector<Edge> relabelled;
    for (const auto& [u, v] : g.edges()) relabelled.push_back({perm[u], perm[v]});
    const Graph h = Graph::from_edge_list(n, relabelled);
    CHECK(exact_longest_induced_path(g).length == exact_longest_induced_path(h).length);
    CHECK(exact_max_edges_bounded_set(g, 4).edges ==
          exact_max_edges_bounded_set(h, 4).edges);
  }
}

TEST_CASE("size caps are enforced") {
  CHECK_THROWS_AS(exact_longest_induced_path(sample_gnp(31, 0.1, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_longest_induced_path(sample_gnp(26, 0.1, 1), sample_gnp(26, 0.1, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(exact_max_edges_bounded_set(sample_gnp(26, 0.1, 1), 3),
                  std::invalid_argument);
}

TEST_CASE("search stack length never beats the oracle") {
  SplitMix64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.next_below(14);
    const Graph host = sample_gnp(n, 0.1 + 0.3 * rng.next_unit(), rng.next());
    std::vector<Edge> sub_edges;
    for (const auto& e : host.edges())
      if (rng.next_below(4)) sub_edges.push_back(e);
    const Graph sub = Graph::from_edge_list(n, sub_edges);
    auto src = QuerySource::fixed(sub, host);
    const auto rec = dfs_run(src, VertexOrdering::shuffled(n, rng.next()));
    CHECK(rec.path_length() <= exact_longest_induced_path(sub, host).length);
  }
}

}  // TEST_SUITE
