#include "indpath/query_source.hpp"

#include <stdexcept>

#include "indpath/random.hpp"

namespace indpath {

QuerySource QuerySource::fixed(Graph gprime, Graph host, LedgerMode mode) {
  if (gprime.vertex_count() != host.vertex_count() || !gprime.is_subgraph_of(host))
    throw std::invalid_argument("fixed source requires G' subgraph of G on the same vertices");
  QuerySource src;
  src.n_ = host.vertex_count();
  src.generative_ = false;
  src.gprime_ = std::move(gprime);
  src.host_ = std::move(host);
  src.ledger_on_ = (mode == LedgerMode::on) ||
                   (mode == LedgerMode::automatic && src.n_ <= kLedgerAutoMax);
  return src;
}

QuerySource QuerySource::generative(std::size_t n, double p, std::uint64_t seed,
                                    LedgerMode mode) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability out of [0,1]");
  QuerySource src;
  src.n_ = n;
  src.generative_ = true;
  src.p_ = p;
  src.seed_ = seed;
  // The realization is decided now, in canonical pair order; queries reveal it.
  src.host_ = sample_gnp(n, p, derive_seed(seed, "defer"));
  src.gprime_ = src.host_;
  src.ledger_on_ = (mode == LedgerMode::on) ||
                   (mode == LedgerMode::automatic && n <= kLedgerAutoMax);
  return src;
}

std::uint64_t QuerySource::pair_key(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return static_cast<std::uint64_t>(a) * n_ + b;
}

bool QuerySource::record_pair(Vertex a, Vertex b, QueryContext ctx) {
  const auto [it, fresh] = ledger_.try_emplace(
      pair_key(a, b), LedgerEntry{gprime_.has_edge(a, b), host_.has_edge(a, b)});
  if (fresh) {
    ++new_queries_;
    if (ctx == QueryContext::step2) ++ut_queries_;
  }
  return fresh;
}

bool QuerySource::query_eprime(Vertex u, Vertex t, QueryContext ctx) {
  if (u == t) throw std::invalid_argument("query on a pair (v,v)");
  if (u >= n_ || t >= n_) throw std::invalid_argument("query vertex out of range");
  if (!ledger_on_)
    throw std::logic_error("pair queries need the ledger; use the bulk interfaces");
  if (finalized_) return gprime_.has_edge(u, t);
  record_pair(u, t, ctx);
  return ledger_.at(pair_key(u, t)).in_eprime;
}

bool QuerySource::query_e(Vertex t, Vertex u2, QueryContext ctx) {
  if (t == u2) throw std::invalid_argument("query on a pair (v,v)");
  if (t >= n_ || u2 >= n_) throw std::invalid_argument("query vertex out of range");
  if (!ledger_on_)
    throw std::logic_error("pair queries need the ledger; use the bulk interfaces");
  if (finalized_) return host_.has_edge(t, u2);
  record_pair(t, u2, ctx);
  return ledger_.at(pair_key(t, u2)).in_e;
}

const Graph& QuerySource::finalize() {
  if (!finalized_) {
    const std::uint64_t total =
        n_ < 2 ? 0 : static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
    new_queries_ = total;  // every remaining pair is answered exactly once
    finalized_ = true;
  }
  return host_;
}

std::optional<QuerySource::LedgerEntry> QuerySource::ledger_lookup(Vertex a, Vertex b) const {
  if (finalized_)
    return LedgerEntry{gprime_.has_edge(a, b), host_.has_edge(a, b)};
  const auto it = ledger_.find(pair_key(a, b));
  if (it == ledger_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t QuerySource::ledger_size() const {
  if (finalized_) return n_ < 2 ? 0 : static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
  return ledger_.size();
}

void QuerySource::add_fresh_counts(std::uint64_t step2_fresh, std::uint64_t other_fresh) {
  new_queries_ += step2_fresh + other_fresh;
  ut_queries_ += step2_fresh;
}

}  // namespace indpath
