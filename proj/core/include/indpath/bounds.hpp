#pragma once

#include <cstdint>
#include <vector>

#include "indpath/graph.hpp"

namespace indpath {

/// Parameters of the union-bound evaluations. The host graph has k*n
/// vertices and edge probability p; t and s are set-size caps, alpha the
/// edge-density multiplier, c the density constant of the multicolour
/// setting.
struct BoundParams {
  std::uint64_t n = 0;
  double k = 1.0;
  double p = 0.0;
  double alpha = 2.0;
  std::uint64_t t = 0;
  std::uint64_t s = 0;
  double c = 0.0;
};

/// Union bound on the existence of a set S, |S| <= t, spanning at least
/// alpha*|S| edges: sum over i of C(kn,i) * C(C(i,2), ceil(alpha*i)) *
/// p^ceil(alpha*i). Everything in log space (natural logs); the simplified
/// route is the closed form [coefficient * (i/n)^(alpha-1)]^i with
/// coefficient = e^(1+alpha) * k * (p*n/(2*alpha))^alpha.
struct SparseSetsBound {
  double log_total_exact = 0;       // -inf when every summand vanishes
  double log_total_simplified = 0;
  double coefficient = 0;           // n-free bracket constant
  double tail_base = 0;             // per-summand base at i = t
  double small_regime_base = 0;     // per-summand base at i = sqrt(n)

  struct Row {
    std::uint64_t i;
    double log_exact;
    double log_simplified;
    double base;
  };
  std::vector<Row> rows;  // all i when t <= 512, log-spaced otherwise
};

SparseSetsBound sparse_sets_bound(const BoundParams& params);

/// Union bound on a dense cut: C(kn,s) * C(kn,t) * C(t*s, B) * p^B for
/// B = edge_threshold. per_n_base is the n-th root of the simplified form,
/// the shape the regime verdicts compare against 1.
struct CutBound {
  double log_exact = 0;
  double log_simplified = 0;
  double per_n_base = 0;
  bool vacuous = false;  // threshold 0 or bound >= 1
};

CutBound cut_bound(const BoundParams& params, double edge_threshold);

/// Exact-rational evaluation of the sparse-sets sum (p = p_num/p_den) for
/// cross-checking the log-space route; n <= 40.
struct RationalCrossCheck {
  double log_exact_rational = 0;
  double log_fast = 0;
  double abs_log_error = 0;
};

RationalCrossCheck sparse_sets_rational_check(const BoundParams& params,
                                              std::uint64_t p_num, std::uint64_t p_den);

namespace lemmas {

struct SparseConstants {
  double alpha = 0;
  double coefficient = 0;  // n-free bracket constant
  double tail_base = 0;    // at the set-size cap
};

/// Two-colour host G(n, 64/n): sets of size at most 196n/1e7 spanning
/// at least (12/7)|S| edges.
SparseConstants two_colour_sparse_constants();
/// Two-colour cut: |S| = 21n/1e7, |T| = 175n/1e7, threshold (95/7)|S|;
/// returns the n-th-root base of the displayed product.
double two_colour_cut_base();

/// Multicolour host G(kn, c*log(k)/n): sets of size at most
/// 2n/(c^3 k log^2 k) spanning at least (2 log k/(log k + 2))|S| edges.
SparseConstants multicolour_sparse_constants(double c, double k);
/// Multicolour cut, reduced displayed base: e^3 / (2^5 c log^2 k).
double multicolour_cut_base(double c, double k);
/// Smallest c for which the multicolour sparse tail base drops to 1/2.
double multicolour_feasible_c(double k);

/// Concrete parameter sets for tables at a given scale n.
BoundParams two_colour_sparse_params(std::uint64_t n);
BoundParams two_colour_cut_params(std::uint64_t n);
BoundParams multicolour_sparse_params(std::uint64_t n, double c, double k);
BoundParams multicolour_cut_params(std::uint64_t n, double c, double k);
double cut_threshold(const BoundParams& params);  // 95s/7 resp. 8s*log(k)

}  // namespace lemmas

}  // namespace indpath
