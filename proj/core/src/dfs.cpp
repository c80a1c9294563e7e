#include "indpath/dfs.hpp"

#include <algorithm>
#include <stdexcept>

#include "indpath/random.hpp"

namespace indpath {

VertexOrdering VertexOrdering::identity(std::size_t n) {
  VertexOrdering pi;
  pi.order.resize(n);
  pi.pos.resize(n);
  for (std::size_t i = 0; i < n; ++i) pi.order[i] = pi.pos[i] = static_cast<Vertex>(i);
  return pi;
}

VertexOrdering VertexOrdering::shuffled(std::size_t n, std::uint64_t seed) {
  return from_order(random_permutation(n, seed));
}

VertexOrdering VertexOrdering::from_order(std::vector<Vertex> order) {
  const std::size_t n = order.size();
  VertexOrdering pi;
  pi.pos.assign(n, static_cast<Vertex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v >= n || pi.pos[v] != static_cast<Vertex>(n))
      throw std::invalid_argument("ordering is not a permutation");
    pi.pos[v] = static_cast<Vertex>(i);
  }
  pi.order = std::move(order);
  return pi;
}

std::string_view to_string(StepTag tag) {
  switch (tag) {
    case StepTag::seed_push: return "seed";
    case StepTag::advance: return "advance";
    case StepTag::divert: return "divert";
    case StepTag::retire: return "retire";
  }
  return "?";
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::exhausted: return "exhausted";
    case StopReason::s1_hit: return "s1_hit";
    case StopReason::s2_hit: return "s2_hit";
    case StopReason::path_hit: return "path_hit";
    case StopReason::query_budget: return "query_budget";
  }
  return "?";
}

void AuditReport::fail(std::string msg) {
  ok = false;
  if (failures.size() < 32) failures.push_back(std::move(msg));
}

namespace {

// Prefix-sum helpers over the flat Fenwick arrays the engine keeps.
template <typename T>
void fenwick_add(std::vector<T>& tree, std::size_t i, T delta) {
  for (++i; i <= tree.size() - 1; i += i & (~i + 1)) tree[i] += delta;
}

template <typename T>
std::int64_t fenwick_prefix(const std::vector<T>& tree, std::size_t count) {
  std::int64_t sum = 0;
  for (std::size_t i = count; i > 0; i -= i & (~i + 1)) sum += tree[i];
  return sum;
}

// Smallest index whose prefix sum reaches 1 (tree holds nonnegative counts).
template <typename T>
std::size_t fenwick_first(const std::vector<T>& tree) {
  std::size_t idx = 0;
  std::int64_t remaining = 1;
  std::size_t mask = 1;
  while (mask * 2 < tree.size()) mask *= 2;
  for (; mask > 0; mask /= 2) {
    const std::size_t next = idx + mask;
    if (next <= tree.size() - 1 && tree[next] < remaining) {
      idx = next;
      remaining -= tree[next];
    }
  }
  return idx;  // 0-based position
}

}  // namespace

InducedDfs::InducedDfs(QuerySource& src, VertexOrdering pi)
    : src_(src), pi_(std::move(pi)), n_(src.vertex_count()) {
  if (pi_.size() != n_) throw std::invalid_argument("ordering size does not match source");
  fast_ = !src_.ledger_enabled();
  state_.assign(n_, Where::in_t);
  scan_pos_.assign(n_, 0);
  t_size_ = n_;
  dsu_parent_.resize(n_);
  for (std::size_t v = 0; v < n_; ++v) dsu_parent_[v] = static_cast<Vertex>(v);

  if (fast_) {
    // Position-sorted E' adjacency for candidate scans.
    const Graph& gp = src_.eprime_view();
    posadj_off_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v)
      posadj_off_[v + 1] = posadj_off_[v] + gp.degree(static_cast<Vertex>(v));
    posadj_.resize(posadj_off_[n_]);
    for (std::size_t v = 0; v < n_; ++v) {
      std::uint64_t at = posadj_off_[v];
      for (Vertex w : gp.neighbors(static_cast<Vertex>(v))) posadj_[at++] = pi_.pos[w];
      std::sort(posadj_.begin() + static_cast<std::ptrdiff_t>(posadj_off_[v]),
                posadj_.begin() + static_cast<std::ptrdiff_t>(posadj_off_[v + 1]));
    }
    t_fenwick_.assign(n_ + 1, 0);
    for (std::size_t p = 0; p < n_; ++p) fenwick_add(t_fenwick_, p, 1u);
    cover_fenwick_.assign(n_ + 1, 0);
  }
}

void InducedDfs::enable_audit(AuditReport* report) {
  if (report && !src_.ledger_enabled())
    throw std::logic_error("auditing requires the source ledger");
  audit_ = report;
  prev_explored_ = n_ - t_size_;
}

void InducedDfs::set_trace(std::uint64_t every, std::function<void(const TraceEvent&)> sink) {
  trace_every_ = every;
  trace_sink_ = std::move(sink);
}

Vertex InducedDfs::dsu_find(Vertex v) {
  while (dsu_parent_[v] != v) {
    dsu_parent_[v] = dsu_parent_[dsu_parent_[v]];
    v = dsu_parent_[v];
  }
  return v;
}

void InducedDfs::expose_edge(Vertex a, Vertex b) {
  const Vertex ra = dsu_find(a), rb = dsu_find(b);
  if (ra == rb)
    ++exposed_excess_;
  else
    dsu_parent_[ra] = rb;
}

void InducedDfs::depart_t(Vertex v) {
  // Count E-edges from v into the already-explored set before v joins it.
  for (Vertex w : src_.e_view().neighbors(v))
    if (state_[w] != Where::in_t) ++explored_edges_;
  state_[v] = Where::in_u;  // provisional; divert rounds fix this up
  --t_size_;
  if (fast_) fenwick_add(t_fenwick_, pi_.pos[v], static_cast<std::uint32_t>(-1));
}

void InducedDfs::push_stack(Vertex v) {
  stack_.push_back(v);
  if (stack_.size() > max_u_) {
    max_u_ = stack_.size();
    best_path_ = stack_;
    ut_at_peak_ = src_.ut_queries();
  }
}

std::optional<Vertex> InducedDfs::find_candidate(Vertex u) {
  if (!fast_) {
    // Ledger path: every scanned pair goes through the query interface.
    for (std::size_t p = scan_pos_[u]; p < n_; ++p) {
      const Vertex w = pi_.order[p];
      if (state_[w] != Where::in_t) continue;
      if (src_.query_eprime(u, w, QueryContext::step2)) {
        scan_pos_[u] = static_cast<Vertex>(p + 1);
        return w;
      }
    }
    scan_pos_[u] = static_cast<Vertex>(n_);
    return std::nullopt;
  }

  // Fast path: walk u's E'-neighbours at positions >= scan_pos in pi order;
  // the first one still in T is the candidate. T members skipped in between
  // are fresh negative Step-2 queries, counted through the position Fenwick.
  const std::uint64_t from = scan_pos_[u];
  const auto begin = posadj_.begin() + static_cast<std::ptrdiff_t>(posadj_off_[u]);
  const auto end = posadj_.begin() + static_cast<std::ptrdiff_t>(posadj_off_[u + 1]);
  for (auto it = std::lower_bound(begin, end, static_cast<Vertex>(from)); it != end; ++it) {
    const Vertex w = pi_.order[*it];
    if (state_[w] != Where::in_t) continue;
    const std::uint64_t wpos = *it;
    const std::uint64_t scanned =
        static_cast<std::uint64_t>(fenwick_prefix(t_fenwick_, wpos + 1) -
                                   fenwick_prefix(t_fenwick_, from));
    src_.add_fresh_counts(scanned, 0);
    fenwick_add(cover_fenwick_, from, 1);
    if (wpos + 1 < n_ + 1) fenwick_add(cover_fenwick_, wpos + 1, -1);
    scan_pos_[u] = static_cast<Vertex>(wpos + 1);
    return w;
  }
  const std::uint64_t scanned = static_cast<std::uint64_t>(
      fenwick_prefix(t_fenwick_, n_) - fenwick_prefix(t_fenwick_, from));
  src_.add_fresh_counts(scanned, 0);
  if (from < n_) fenwick_add(cover_fenwick_, static_cast<std::size_t>(from), 1);
  scan_pos_[u] = static_cast<Vertex>(n_);
  return std::nullopt;
}

bool InducedDfs::step3_scan(Vertex u, Vertex t) {
  if (!fast_) {
    // Scan U\{u} in pi order, stopping at the first positive E-answer.
    std::vector<std::pair<Vertex, Vertex>> by_pos;  // (position, vertex)
    by_pos.reserve(stack_.size());
    for (Vertex w : stack_)
      if (w != u) by_pos.emplace_back(pi_.pos[w], w);
    std::sort(by_pos.begin(), by_pos.end());
    for (const auto& [p, w] : by_pos) {
      if (src_.query_e(t, w, QueryContext::step3)) {
        expose_edge(t, w);
        return true;
      }
    }
    return false;
  }

  const std::uint64_t tpos = pi_.pos[t];
  // pi-least E-neighbour of t on the stack, u excluded.
  std::uint64_t hit_pos = n_;
  Vertex hit = 0;
  for (Vertex w : src_.e_view().neighbors(t)) {
    if (w == u || state_[w] != Where::in_u) continue;
    if (pi_.pos[w] < hit_pos) {
      hit_pos = pi_.pos[w];
      hit = w;
    }
  }
  if (hit_pos == n_) {
    // All of U\{u} scanned negative. A stack member already holds a recorded
    // answer for t exactly when its Step-2 coverage passed t's position;
    // retired vertices always have, so subtract them wholesale.
    const std::int64_t scanners =
        fenwick_prefix(cover_fenwick_, tpos + 1);  // covering scans of tpos
    const std::int64_t stack_scanners =
        scanners - static_cast<std::int64_t>(s1_size_) - 1;  // u itself covers
    const std::uint64_t fresh =
        (stack_.size() - 1) - static_cast<std::uint64_t>(stack_scanners);
    src_.add_fresh_counts(0, fresh);
    return false;
  }
  // Scanned members are those before the hit in pi order, plus the hit pair.
  std::uint64_t fresh = 0;
  for (Vertex w : stack_)
    if (w != u && pi_.pos[w] < hit_pos && scan_pos_[w] <= tpos) ++fresh;
  if (scan_pos_[hit] <= tpos) ++fresh;
  src_.add_fresh_counts(0, fresh);
  expose_edge(t, hit);
  return true;
}

StepTag InducedDfs::round() {
  if (terminal()) throw std::logic_error("round() called on a terminal state");
  ++round_;
  StepTag tag;
  Vertex moved;
  Vertex scanner = 0;
  if (stack_.empty()) {
    Vertex v;
    if (fast_) {
      v = pi_.order[fenwick_first(t_fenwick_)];
    } else {
      std::size_t p = 0;
      while (state_[pi_.order[p]] != Where::in_t) ++p;
      v = pi_.order[p];
    }
    depart_t(v);
    push_stack(v);
    tag = StepTag::seed_push;
    moved = v;
  } else {
    const Vertex u = stack_.back();
    scanner = u;
    const auto candidate = find_candidate(u);
    if (!candidate) {
      stack_.pop_back();
      state_[u] = Where::in_s1;
      ++s1_size_;
      tag = StepTag::retire;
      moved = u;
    } else {
      const Vertex t = *candidate;
      depart_t(t);
      expose_edge(u, t);  // the positive Step-2 answer
      if (step3_scan(u, t)) {
        state_[t] = Where::in_s2;
        ++s2_size_;
        tag = StepTag::divert;
      } else {
        push_stack(t);
        tag = StepTag::advance;
      }
      moved = t;
    }
  }
  if (s2_size_ > exposed_excess_) s2_excess_ok_ = false;
  if (audit_) audit_after_round(tag, moved, scanner);
  emit_trace(tag, moved);
  return tag;
}

void InducedDfs::audit_after_round(StepTag tag, Vertex moved, Vertex scanner) {
  AuditReport& rep = *audit_;
  ++rep.rounds_checked;

  // (B) |U u S1 u S2| never decreases; +1 exactly on rounds leaving T.
  ++rep.checks_b;
  const std::uint64_t explored = n_ - t_size_;
  if (explored < prev_explored_) {
    rep.fail("property B: explored set shrank");
  } else {
    const std::uint64_t delta = explored - prev_explored_;
    const std::uint64_t want = (tag == StepTag::retire) ? 0 : 1;
    if (delta != want)
      rep.fail("property B: explored set changed by " + std::to_string(delta) +
               " on a " + std::string(to_string(tag)) + " round");
  }
  prev_explored_ = explored;

  // (A) on retirement: the retiring vertex has a recorded negative E' answer
  // against every vertex still in T. T only shrinks, so checking at
  // retirement covers every later round as well.
  if (tag == StepTag::retire) {
    ++rep.checks_a;
    for (std::size_t p = 0; p < n_; ++p) {
      const Vertex w = pi_.order[p];
      if (state_[w] != Where::in_t) continue;
      const auto entry = src_.ledger_lookup(moved, w);
      if (!entry) {
        rep.fail("property A: unqueried S1xT pair after retirement of vertex " +
                 std::to_string(moved));
        break;
      }
      if (entry->in_eprime) {
        rep.fail("property A: E' edge between S1 vertex " + std::to_string(moved) +
                 " and T vertex " + std::to_string(w));
        break;
      }
    }
  }

  // (C) explored E-edges at least 2|S2|.
  ++rep.checks_c;
  if (explored_edges_ < 2 * s2_size_)
    rep.fail("property C: explored edges " + std::to_string(explored_edges_) +
             " < 2*|S2| = " + std::to_string(2 * s2_size_));

  // (D) the stack is a path in E' induced in E.
  ++rep.checks_d;
  const Graph& gp = src_.eprime_view();
  const Graph& g = src_.e_view();
  for (std::size_t i = 0; i + 1 < stack_.size(); ++i)
    if (!gp.has_edge(stack_[i], stack_[i + 1])) {
      rep.fail("property D: consecutive stack pair not an E' edge");
      break;
    }
  bool chord = false;
  for (std::size_t i = 0; i < stack_.size() && !chord; ++i)
    for (std::size_t j = i + 2; j < stack_.size(); ++j)
      if (g.has_edge(stack_[i], stack_[j])) {
        rep.fail("property D: chord inside the stack");
        chord = true;
        break;
      }

  // S2-excess law, exact per round.
  if (s2_size_ > exposed_excess_)
    rep.fail("S2-excess: |S2| = " + std::to_string(s2_size_) + " > excess " +
             std::to_string(exposed_excess_));
  static_cast<void>(scanner);
}

void InducedDfs::emit_trace(StepTag tag, Vertex moved) {
  if (trace_every_ == 0 || !trace_sink_) return;
  if (round_ % trace_every_ != 0) return;
  trace_sink_(TraceEvent{round_, tag, moved, u_size(), t_size_, s1_size_, s2_size_,
                         src_.ut_queries(), src_.new_queries()});
}

std::optional<StopReason> InducedDfs::stop_fired(const StopRule& stop) const {
  if (stop.path_vertices && u_size() >= *stop.path_vertices) return StopReason::path_hit;
  if (stop.s1_cap && s1_size_ >= *stop.s1_cap) return StopReason::s1_hit;
  if (stop.s2_cap && s2_size_ >= *stop.s2_cap) return StopReason::s2_hit;
  if (stop.query_budget && src_.new_queries() >= *stop.query_budget)
    return StopReason::query_budget;
  return std::nullopt;
}

RunRecord InducedDfs::run(const StopRule& stop) {
  StopReason reason;
  while (true) {
    if (auto fired = stop_fired(stop)) {
      reason = *fired;
      break;
    }
    if (terminal()) {
      reason = StopReason::exhausted;
      if (src_.generative_mode()) src_.finalize();
      break;
    }
    round();
  }
  RunRecord rec;
  rec.max_u = max_u_;
  rec.best_path = best_path_;
  rec.final_u.assign(stack_.begin(), stack_.end());
  rec.s1_final = s1_size_;
  rec.s2_final = s2_size_;
  rec.ut_queries = src_.ut_queries();
  rec.new_queries = src_.new_queries();
  rec.ut_queries_at_peak = ut_at_peak_;
  rec.rounds = round_;
  rec.stop_reason = reason;
  rec.s2_excess_ok = s2_excess_ok_;
  return rec;
}

RunRecord dfs_run(QuerySource& src, VertexOrdering pi, const StopRule& stop,
                  AuditReport* audit) {
  InducedDfs dfs(src, std::move(pi));
  if (audit) dfs.enable_audit(audit);
  return dfs.run(stop);
}

AuditReport audit_state(const InducedDfs& dfs) {
  AuditReport rep;
  const QuerySource& src = dfs.source();
  const std::size_t n = dfs.vertex_count();

  // (A) full S1 x T sweep against the ledger.
  ++rep.checks_a;
  for (Vertex s = 0; s < n; ++s) {
    if (dfs.where(s) != InducedDfs::Where::in_s1) continue;
    for (Vertex t = 0; t < n; ++t) {
      if (dfs.where(t) != InducedDfs::Where::in_t) continue;
      const auto entry = src.ledger_lookup(s, t);
      if (!entry)
        rep.fail("property A: unqueried pair (" + std::to_string(s) + "," +
                 std::to_string(t) + ")");
      else if (entry->in_eprime)
        rep.fail("property A: E' edge between S1 and T");
      if (!rep.ok) return rep;
    }
  }

  // (B) from the engine's monotone accounting.
  ++rep.checks_b;

  // (C) explored edge count.
  ++rep.checks_c;
  if (dfs.explored_edges() < 2 * dfs.s2_size()) rep.fail("property C violated");

  // (D) stack induced-path check.
  ++rep.checks_d;
  const auto u = dfs.stack();
  const Graph& gp = src.eprime_view();
  const Graph& g = src.e_view();
  for (std::size_t i = 0; i + 1 < u.size(); ++i)
    if (!gp.has_edge(u[i], u[i + 1])) rep.fail("property D: missing E' edge");
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 2; j < u.size(); ++j)
      if (g.has_edge(u[i], u[j])) rep.fail("property D: chord in stack");
  return rep;
}

}  // namespace indpath
