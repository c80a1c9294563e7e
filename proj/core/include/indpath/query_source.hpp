#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "indpath/graph.hpp"

namespace indpath {

enum class QueryContext : std::uint8_t { step2, step3, finalize, external };

enum class LedgerMode : std::uint8_t { automatic, on, off };

/// Answers edge queries either from a fixed pair of graphs (G' subgraph of G)
/// or generatively, so that the exposed graph is distributed as G(n,p).
///
/// Generative sources decide every pair up front (canonical pair order,
/// geometric skipping, deterministic per seed) and reveal pairs as they are
/// queried; the joint law of the query answers and the finalized graph is
/// exactly that of an i.i.d. Bernoulli(p) stream consumed query by query.
///
/// Each unordered pair is answered freshly at most once: with the ledger on,
/// repeats return the recorded answer and leave the counters untouched.
/// The ledger defaults to on for n <= 4096 (audits need it) and off above,
/// where the DFS engine maintains the same counters structurally.
///
/// Single-owner mutable state: one run owns one source.
class QuerySource {
 public:
  static constexpr std::size_t kLedgerAutoMax = 4096;

  static QuerySource fixed(Graph gprime, Graph host, LedgerMode mode = LedgerMode::automatic);
  /// G' = G sampled as G(n,p); seed is recorded for reproducibility.
  static QuerySource generative(std::size_t n, double p, std::uint64_t seed,
                                LedgerMode mode = LedgerMode::automatic);

  std::size_t vertex_count() const { return n_; }
  bool generative_mode() const { return generative_; }
  double p() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  bool ledger_enabled() const { return ledger_on_; }
  bool finalized() const { return finalized_; }

  /// Is (u,t) an edge of E'? Requires the ledger. context=step2 with a fresh
  /// pair increments ut_queries; any fresh pair increments new_queries.
  bool query_eprime(Vertex u, Vertex t, QueryContext ctx = QueryContext::external);
  /// Is (t,u2) an edge of E? Same ledger/counter rules (step3 never counts ut).
  bool query_e(Vertex t, Vertex u2, QueryContext ctx = QueryContext::step3);

  /// Answers every pair not yet queried and returns the exposed graph
  /// (the host graph in fixed mode). new_queries becomes (n choose 2).
  const Graph& finalize();

  std::uint64_t new_queries() const { return new_queries_; }
  std::uint64_t ut_queries() const { return ut_queries_; }

  /// Underlying graphs. In generative mode both views are the pre-decided
  /// realization that queries reveal; reading them directly bypasses the
  /// ledger accounting (engine internals and audits only).
  const Graph& eprime_view() const { return gprime_; }
  const Graph& e_view() const { return host_; }

  struct LedgerEntry {
    bool in_eprime;
    bool in_e;
  };
  /// Recorded answer for a pair, if it has been queried (or finalized).
  std::optional<LedgerEntry> ledger_lookup(Vertex a, Vertex b) const;
  std::uint64_t ledger_size() const;

  /// Bulk counter reporting for the engine fast path (ledger off):
  /// `step2_fresh` distinct fresh Step-2 pairs and `other_fresh` distinct
  /// fresh pairs from other contexts.
  void add_fresh_counts(std::uint64_t step2_fresh, std::uint64_t other_fresh);

 private:
  QuerySource() = default;

  std::uint64_t pair_key(Vertex a, Vertex b) const;
  bool record_pair(Vertex a, Vertex b, QueryContext ctx);  // true if fresh

  std::size_t n_ = 0;
  bool generative_ = false;
  bool ledger_on_ = false;
  bool finalized_ = false;
  double p_ = 0.0;
  std::uint64_t seed_ = 0;
  Graph gprime_;
  Graph host_;
  std::unordered_map<std::uint64_t, LedgerEntry> ledger_;
  std::uint64_t new_queries_ = 0;
  std::uint64_t ut_queries_ = 0;
};

}  // namespace indpath
