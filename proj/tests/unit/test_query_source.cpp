#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "indpath/query_source.hpp"
#include "indpath/random.hpp"

using namespace indpath;

namespace {

Graph triangle() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_SUITE("query_source") {

TEST_CASE("fixed mode answers from the graphs") {
  auto src = QuerySource::fixed(triangle(), triangle());
  CHECK(src.query_eprime(0, 1, QueryContext::step2));
  CHECK(src.query_e(0, 1));
  CHECK_THROWS_AS(src.query_eprime(1, 1, QueryContext::step2), std::invalid_argument);
}

TEST_CASE("fixed mode distinguishes E' and E") {
  const Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  auto src = QuerySource::fixed(p3, triangle());
  CHECK(src.query_e(0, 2));
  CHECK_FALSE(src.query_eprime(0, 2));
  CHECK_THROWS_AS(QuerySource::fixed(triangle(), p3), std::invalid_argument);
}

TEST_CASE("generative p=0 and p=1") {
  auto zero = QuerySource::generative(4, 0.0, 1);
  CHECK_FALSE(zero.query_eprime(0, 1, QueryContext::step2));
  CHECK(zero.finalize().edge_count() == 0);

  auto one = QuerySource::generative(3, 1.0, 1);
  CHECK(one.query_eprime(0, 2, QueryContext::step2));
  CHECK(one.finalize().edge_count() == 3);  // K3
}

TEST_CASE("ledger replays without recounting") {
  auto src = QuerySource::generative(10, 0.5, 99);
  const bool first = src.query_eprime(3, 7, QueryContext::step2);
  CHECK(src.new_queries() == 1);
  CHECK(src.ut_queries() == 1);
  const bool second = src.query_eprime(7, 3, QueryContext::step3);
  CHECK(first == second);
  CHECK(src.new_queries() == 1);  // replay
  CHECK(src.ut_queries() == 1);
  CHECK(src.query_e(3, 7) == first);  // E' = E generatively

  // a fresh non-step2 pair does not bump ut_queries
  src.query_e(1, 2);
  CHECK(src.new_queries() == 2);
  CHECK(src.ut_queries() == 1);
}

TEST_CASE("finalize answers all pairs and returns the exposed graph") {
  auto src = QuerySource::generative(30, 0.3, 5);
  src.query_eprime(0, 1, QueryContext::step2);
  src.query_eprime(5, 9, QueryContext::step2);
  const Graph& g = src.finalize();
  CHECK(src.new_queries() == 30 * 29 / 2);
  CHECK(src.finalized());
  // ledger lookups now cover everything and match the graph
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v) {
      const auto entry = src.ledger_lookup(u, v);
      REQUIRE(entry.has_value());
      CHECK(entry->in_eprime == g.has_edge(u, v));
      CHECK(entry->in_e == g.has_edge(u, v));
    }
  CHECK(src.ledger_size() == 30 * 29 / 2);
}

TEST_CASE("generative determinism") {
  auto a = QuerySource::generative(100, 0.5, 123);
  auto b = QuerySource::generative(100, 0.5, 123);
  CHECK(a.finalize().edges() == b.finalize().edges());
}

TEST_CASE("finalize and sample_gnp give different graphs per seed") {
  auto src = QuerySource::generative(50, 0.4, 7);
  CHECK(src.finalize().edges() != sample_gnp(50, 0.4, 7).edges());
}

TEST_CASE("queries answered before finalize agree with the finalized graph") {
  auto src = QuerySource::generative(20, 0.35, 11);
  std::vector<std::pair<Vertex, Vertex>> pairs = {{0, 1}, {3, 9}, {12, 19}, {4, 5}};
  std::vector<bool> answers;
  for (auto [u, v] : pairs)
    answers.push_back(src.query_eprime(u, v, QueryContext::step2));
  const Graph& g = src.finalize();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    CHECK(answers[i] == g.has_edge(pairs[i].first, pairs[i].second));
}

TEST_CASE("pair queries demand the ledger") {
  auto src = QuerySource::generative(10, 0.5, 1, LedgerMode::off);
  CHECK_THROWS_AS(src.query_eprime(0, 1, QueryContext::step2), std::logic_error);
  CHECK(src.finalize().vertex_count() == 10);
}

TEST_CASE("finalized generative graphs are distributed as G(n,p)") {
  // 20000 finalized sources at n=6, p=1/2: each of the 15 pair indicators has
  // frequency 0.5 +- 0.02 and the indicators are pairwise uncorrelated
  // within +-0.03.
  const std::size_t n = 6;
  const int trials = 20000;
  std::vector<std::vector<bool>> indicator(15, std::vector<bool>(trials));
  for (int t = 0; t < trials; ++t) {
    auto src = QuerySource::generative(n, 0.5, 500000 + t);
    const Graph& g = src.finalize();
    std::size_t pair = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v, ++pair) indicator[pair][t] = g.has_edge(u, v);
  }
  std::vector<double> mean(15);
  for (int i = 0; i < 15; ++i) {
    long sum = 0;
    for (bool b : indicator[i]) sum += b;
    mean[i] = static_cast<double>(sum) / trials;
    CHECK(std::abs(mean[i] - 0.5) <= 0.02);
  }
  for (int i = 0; i < 15; ++i)
    for (int j = i + 1; j < 15; ++j) {
      double cov = 0;
      for (int t = 0; t < trials; ++t)
        cov += (indicator[i][t] - mean[i]) * (indicator[j][t] - mean[j]);
      cov /= trials;
      const double corr =
          cov / std::sqrt(mean[i] * (1 - mean[i]) * mean[j] * (1 - mean[j]));
      CHECK(std::abs(corr) <= 0.03);
    }
}

}  // TEST_SUITE
