#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indpath/graph.hpp"
#include "indpath/query_source.hpp"

namespace indpath {

struct VertexOrdering {
  std::vector<Vertex> order;  // position -> vertex
  std::vector<Vertex> pos;    // vertex -> position

  static VertexOrdering identity(std::size_t n);
  static VertexOrdering shuffled(std::size_t n, std::uint64_t seed);
  /// Validates that `order` is a permutation.
  static VertexOrdering from_order(std::vector<Vertex> order);

  std::size_t size() const { return order.size(); }
};

enum class StepTag : std::uint8_t {
  seed_push,  // Step 1: pi-first vertex of T starts a new branch
  advance,    // Step 3a: candidate joins the stack
  divert,     // Step 3b: candidate has another stack neighbour in E, goes to S2
  retire,     // Step 4: stack top exhausted T, goes to S1
};

enum class StopReason : std::uint8_t {
  exhausted,     // U = T = empty
  s1_hit,
  s2_hit,
  path_hit,      // |U| reached the requested vertex count
  query_budget,
};

std::string_view to_string(StepTag tag);
std::string_view to_string(StopReason reason);

/// Pure thresholds over the state; checked after every round (sizes move by
/// at most one per round, so >= caps fire exactly at equality).
struct StopRule {
  std::optional<std::uint64_t> s1_cap;
  std::optional<std::uint64_t> s2_cap;
  std::optional<std::uint64_t> path_vertices;
  std::optional<std::uint64_t> query_budget;

  static StopRule never() { return {}; }
};

struct RunRecord {
  std::uint64_t max_u = 0;
  std::vector<Vertex> best_path;          // stack snapshot at the peak
  std::vector<Vertex> final_u;            // stack when the run stopped
  std::uint64_t s1_final = 0;
  std::uint64_t s2_final = 0;
  std::uint64_t ut_queries = 0;
  std::uint64_t new_queries = 0;
  std::uint64_t ut_queries_at_peak = 0;
  std::uint64_t rounds = 0;
  StopReason stop_reason = StopReason::exhausted;
  bool s2_excess_ok = true;               // |S2| <= excess(exposed) held every round

  /// Edge count of the best path; 0 for empty runs.
  std::uint64_t path_length() const { return max_u > 0 ? max_u - 1 : 0; }
};

struct AuditReport {
  bool ok = true;
  std::uint64_t rounds_checked = 0;
  std::uint64_t checks_a = 0, checks_b = 0, checks_c = 0, checks_d = 0;
  std::vector<std::string> failures;  // first few only

  void fail(std::string msg);
};

struct TraceEvent {
  std::uint64_t round;
  StepTag tag;
  Vertex vertex;  // the vertex that moved
  std::uint64_t u_size, t_size, s1_size, s2_size;
  std::uint64_t ut_queries, new_queries;
};

/// The modified depth-first search: maintains the partition {U,T,S1,S2} so
/// that the stack U always carries a path in E' induced in E. Scanning of T
/// and of U\{u} follows the ordering pi; each vertex keeps a resumable scan
/// position into T, which answers query for query like a restart-from-scratch
/// scan against a ledger-replaying source.
///
/// With the source ledger on, every scanned pair goes through the per-pair
/// query interface; with it off, negative runs are counted in bulk and the
/// engine reports the same counter values structurally.
class InducedDfs {
 public:
  enum class Where : std::uint8_t { in_t, in_u, in_s1, in_s2 };

  InducedDfs(QuerySource& src, VertexOrdering pi);

  bool terminal() const { return stack_.empty() && t_size_ == 0; }

  /// Executes one round; returns which step was taken. Throws on a terminal
  /// state.
  StepTag round();

  /// Rounds until the rule fires or the state is terminal; finalizes
  /// generative sources on natural termination.
  RunRecord run(const StopRule& stop = {});

  std::size_t vertex_count() const { return n_; }
  std::span<const Vertex> stack() const { return stack_; }
  Where where(Vertex v) const { return state_[v]; }
  std::uint64_t u_size() const { return stack_.size(); }
  std::uint64_t t_size() const { return t_size_; }
  std::uint64_t s1_size() const { return s1_size_; }
  std::uint64_t s2_size() const { return s2_size_; }
  std::uint64_t round_count() const { return round_; }
  std::uint64_t max_u() const { return max_u_; }
  const std::vector<Vertex>& best_path() const { return best_path_; }
  const VertexOrdering& ordering() const { return pi_; }
  const QuerySource& source() const { return src_; }

  /// Excess of the graph exposed by positive answers so far.
  std::uint64_t exposed_excess() const { return exposed_excess_; }
  /// Edges of E within U (union) S1 (union) S2, maintained incrementally.
  std::uint64_t explored_edges() const { return explored_edges_; }
  /// Whether |S2| <= excess(exposed) held after every round so far.
  bool s2_excess_ok() const { return s2_excess_ok_; }

  /// Per-round invariant auditing (requires the source ledger). The report
  /// must outlive the run.
  void enable_audit(AuditReport* report);

  /// Emit a trace event every `every` rounds (0 disables).
  void set_trace(std::uint64_t every, std::function<void(const TraceEvent&)> sink);

 private:
  struct Fenwick;

  std::optional<Vertex> find_candidate(Vertex u);
  bool step3_scan(Vertex u, Vertex t);  // true => divert
  void depart_t(Vertex v);
  void push_stack(Vertex v);
  void expose_edge(Vertex a, Vertex b);
  Vertex dsu_find(Vertex v);
  std::optional<StopReason> stop_fired(const StopRule& stop) const;
  void audit_after_round(StepTag tag, Vertex moved, Vertex scanner);
  void emit_trace(StepTag tag, Vertex moved);

  QuerySource& src_;
  VertexOrdering pi_;
  std::size_t n_ = 0;
  bool fast_ = false;

  std::vector<Where> state_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> scan_pos_;  // per-vertex resumable position into pi
  std::uint64_t t_size_ = 0, s1_size_ = 0, s2_size_ = 0;
  std::uint64_t round_ = 0;

  // fast path: position-sorted E' adjacency and position Fenwicks
  std::vector<std::uint64_t> posadj_off_;
  std::vector<Vertex> posadj_;             // neighbour positions, sorted
  std::vector<std::uint32_t> t_fenwick_;   // T membership counts by position
  std::vector<std::int32_t> cover_fenwick_;  // scan coverage deltas by position

  std::uint64_t max_u_ = 0;
  std::vector<Vertex> best_path_;
  std::uint64_t ut_at_peak_ = 0;

  std::vector<Vertex> dsu_parent_;
  std::uint64_t exposed_excess_ = 0;
  std::uint64_t explored_edges_ = 0;
  bool s2_excess_ok_ = true;

  AuditReport* audit_ = nullptr;
  std::uint64_t prev_explored_ = 0;
  std::uint64_t trace_every_ = 0;
  std::function<void(const TraceEvent&)> trace_sink_;
};

/// Convenience wrapper: fresh engine, run to the rule, record returned.
RunRecord dfs_run(QuerySource& src, VertexOrdering pi, const StopRule& stop = {},
                  AuditReport* audit = nullptr);

/// Point-in-time invariant check of the current state: (A) every S1 x T pair
/// has a recorded negative E' answer, (C) explored edge count at least
/// 2|S2|, (D) the stack is a path in E' induced in E. (B) is incremental by
/// nature and is reported from the engine's own monotone accounting.
AuditReport audit_state(const InducedDfs& dfs);

}  // namespace indpath
