#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "indpath/guarantees.hpp"
#include "indpath/oracle.hpp"
#include "indpath/random.hpp"

using namespace indpath;

namespace {

Graph triangle() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}}); }
Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}
Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edge_list(n, e);
}

}  // namespace

TEST_SUITE("guarantees") {

TEST_CASE("local density examples") {
  CHECK(check_local_density(triangle(), 3, 2).status == CheckStatus::pass);

  const auto k4 = check_local_density(complete(4), 4, 2);
  REQUIRE(k4.status == CheckStatus::fail);
  REQUIRE(k4.witness.has_value());
  CHECK(k4.witness->size() < 4);
  CHECK(edges_within(complete(4), *k4.witness) >= 2);

  CHECK(check_local_density(Graph::from_edge_list(6, {}), 5, 1).status ==
        CheckStatus::pass);
}

TEST_CASE("local density cross-checks the dense-set oracle") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng.next_below(14);
    const Graph g = sample_gnp(n, 0.4, rng.next());
    const std::uint64_t cap = 2 + rng.next_below(n);
    const std::uint64_t bound = 1 + rng.next_below(8);
    const bool checker_pass = check_local_density(g, cap, bound).status == CheckStatus::pass;
    const bool oracle_pass =
        exact_max_edges_bounded_set(g, cap - 1).edges < bound;
    CHECK(checker_pass == oracle_pass);
  }
}

TEST_CASE("expansion examples") {
  CHECK(check_expansion(triangle(), 1, 2).status == CheckStatus::pass);

  const auto p4 = check_expansion(path(4), 1, 2);
  REQUIRE(p4.status == CheckStatus::fail);
  REQUIRE(p4.witness.has_value());
  const auto w = p4.witness->to_vector();
  REQUIRE(w.size() == 1);
  CHECK((w[0] == 0 || w[0] == 3));  // an endpoint

  const Graph lonely = Graph::from_edge_list(3, {{0, 1}});
  const auto iso = check_expansion(lonely, 1, 1);
  REQUIRE(iso.status == CheckStatus::fail);
  CHECK(iso.witness->contains(2));
}

TEST_CASE("checks go undecided above the exact cap") {
  const Graph big = sample_gnp(26, 0.1, 3);
  CHECK(check_local_density(big, 5, 3).status == CheckStatus::undecided);
  CHECK(check_expansion(big, 2, 2).status == CheckStatus::undecided);
}

TEST_CASE("guaranteed search on K3") {
  const auto out = find_induced_path_guaranteed(triangle(), triangle(), {1, 1, 1},
                                                VertexOrdering::identity(3));
  REQUIRE(out.found);
  CHECK(out.path == std::vector<Vertex>{0, 1});
  CHECK(out.record.stop_reason == StopReason::path_hit);
}

TEST_CASE("vertex-count precondition routes to the failure branch") {
  const auto out = find_induced_path_guaranteed(triangle(), triangle(), {1, 1, 2},
                                                VertexOrdering::identity(3));
  CHECK_FALSE(out.found);
  CHECK(out.note.find("vertex count") != std::string::npos);
}

TEST_CASE("parameters must be positive") {
  CHECK_THROWS_AS(find_induced_path_guaranteed(triangle(), triangle(), {0, 1, 1},
                                               VertexOrdering::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("screened instances always produce certified paths") {
  // the exhaustive checkers act as the screen; when they pass and the vertex
  // count suffices, the search must return a certified path of length >= ell
  SplitMix64 rng(22);
  int screened_hits = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 5 + rng.next_below(16);
    const Graph host = sample_gnp(n, 0.15 + 0.35 * rng.next_unit(), rng.next());
    std::vector<Edge> sub_edges;
    for (const auto& e : host.edges())
      if (rng.next_below(5)) sub_edges.push_back(e);
    const Graph sub = Graph::from_edge_list(n, sub_edges);
    for (const std::uint64_t ell : {1, 2, 3}) {
      for (const std::uint64_t s1 : {1, 2}) {
        for (const std::uint64_t s2 : {1, 2}) {
          if (n < ell + s1 + s2) continue;
          if (check_local_density(host, s1 + s2 + ell, 2 * s2).status !=
              CheckStatus::pass)
            continue;
          if (check_expansion(sub, s1, s2 + ell).status != CheckStatus::pass) continue;
          const auto out = find_induced_path_guaranteed(
              sub, host, {s1, s2, ell}, VertexOrdering::shuffled(n, rng.next()));
          REQUIRE(out.found);
          CHECK(out.path.size() >= ell + 1);
          CHECK(is_induced_path(sub, host, out.path));
          ++screened_hits;
        }
      }
    }
  }
  CHECK(screened_hits > 30);
}

TEST_CASE("pipeline on an all-one-colour K3 returns a monochromatic edge") {
  EdgeColouring colouring{2, {0, 0, 0}};
  PipelineParams pp;
  pp.params = {1, 1, 1};
  pp.prune_threshold = 0.0;
  const auto res = ramsey_pipeline(triangle(), colouring, pp);
  REQUIRE(res.found);
  CHECK(res.certified());
  CHECK(res.path_length == 1);
  CHECK(res.colour == 0);
}

TEST_CASE("pipeline with one colour equals the direct search") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 30 + rng.next_below(80);
    const Graph host = sample_gnp(n, 0.15, rng.next());
    ColouringStrategy strat;
    strat.kind = ColouringKind::round_robin;
    strat.k = 1;
    const auto colouring = colour_edges(host, strat);
    PipelineParams pp;
    pp.params = {2, 2, 2};
    pp.prune_threshold = 1.0;
    const auto res = ramsey_pipeline(host, colouring, pp);

    const auto pruned = prune_min_degree(host, 1.0);
    if (pruned.graph.vertex_count() < 6) {
      CHECK_FALSE(res.found);
      continue;
    }
    const auto host_ind = induced_subgraph(host, pruned.kept);
    const auto direct =
        find_induced_path_guaranteed(pruned.graph, host_ind.graph, pp.params,
                                     VertexOrdering::identity(pruned.graph.vertex_count()));
    REQUIRE(res.found == direct.found);
    if (res.found) {
      std::vector<Vertex> direct_host;
      for (Vertex v : direct.path) direct_host.push_back(pruned.kept[v]);
      CHECK(res.path == direct_host);
    }
  }
}

TEST_CASE("pipeline stage sizes are monotone and certificates hold") {
  SplitMix64 rng(24);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 60 + rng.next_below(120);
    const Graph host = sample_gnp(n, 0.2, rng.next());
    ColouringStrategy strat;
    strat.kind = trial % 2 ? ColouringKind::uniform_random : ColouringKind::greedy_balance;
    strat.k = 2 + trial % 3;
    strat.seed = rng.next();
    const auto colouring = colour_edges(host, strat);
    PipelineParams pp;
    pp.params = {2, 2, 2};
    pp.prune_threshold = 2.0;
    const auto res = ramsey_pipeline(host, colouring, pp);

    CHECK(res.class_m * strat.k >= host.edge_count());  // densest class pigeonhole
    CHECK(res.gprime_n <= res.g1_n);
    CHECK(res.g1_n <= res.host_n);
    // the pruned class keeps minimum degree above the threshold
    std::vector<Edge> class_edges;
    const auto host_edges = host.edges();
    for (std::size_t e = 0; e < host_edges.size(); ++e)
      if (colouring.colour[e] == res.colour) class_edges.push_back(host_edges[e]);
    const auto pruned =
        prune_min_degree(Graph::from_edge_list(n, class_edges), pp.prune_threshold);
    REQUIRE(pruned.graph.vertex_count() == res.gprime_n);
    for (std::size_t v = 0; v < pruned.graph.vertex_count(); ++v)
      CHECK(static_cast<double>(pruned.graph.degree(static_cast<Vertex>(v))) >
            pp.prune_threshold);
    if (res.found) {
      CHECK(res.certified());
      CHECK(res.path_length >= pp.params.ell);
    }
    // min degree of the pruned class exceeds the threshold
    const auto sizes = colour_class_sizes(colouring);
    CHECK(res.class_m == *std::max_element(sizes.begin(), sizes.end()));
  }
}

TEST_CASE("pipeline reports undersized pruned classes as a diagnostic") {
  const Graph host = triangle();
  EdgeColouring colouring{2, {0, 0, 0}};
  PipelineParams pp;
  pp.params = {5, 5, 5};
  pp.prune_threshold = 0.0;
  const auto res = ramsey_pipeline(host, colouring, pp);
  CHECK_FALSE(res.found);
  CHECK(res.diagnostic.find("fewer than") != std::string::npos);
}

TEST_CASE("pipeline rejects an incomplete colouring") {
  EdgeColouring colouring{2, {0, 0}};  // triangle has three edges
  PipelineParams pp;
  CHECK_THROWS_AS(ramsey_pipeline(triangle(), colouring, pp), std::invalid_argument);
}

}  // TEST_SUITE
