#include "indpath/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace indpath {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double ln_choose(double a, double b) {
  if (b < 0 || b > a) return kNegInf;
  if (b == 0 || b == a) return 0.0;
  return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1);
}

// log(sum exp(l)) with max shift and compensated accumulation.
double log_sum_exp(const std::vector<double>& logs) {
  double m = kNegInf;
  for (double l : logs) m = std::max(m, l);
  if (m == kNegInf) return kNegInf;
  double sum = 0.0, comp = 0.0;
  for (double l : logs) {
    const double term = std::exp(l - m);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return m + std::log(sum);
}

void validate(const BoundParams& params) {
  if (params.n == 0) throw std::invalid_argument("bound params: n must be positive");
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw std::invalid_argument("bound params: p out of [0,1]");
  if (!(params.alpha > 1.0)) throw std::invalid_argument("bound params: alpha must exceed 1");
  if (!(params.k >= 1.0)) throw std::invalid_argument("bound params: k must be at least 1");
  const double host = params.k * static_cast<double>(params.n);
  if (static_cast<double>(params.t) > host || static_cast<double>(params.s) > host)
    throw std::invalid_argument("bound params: set sizes exceed the host");
}

std::uint64_t required_edges(double alpha, std::uint64_t i) {
  return static_cast<std::uint64_t>(std::ceil(alpha * static_cast<double>(i) - 1e-9));
}

}  // namespace

SparseSetsBound sparse_sets_bound(const BoundParams& params) {
  validate(params);
  const double n = static_cast<double>(params.n);
  const double host = params.k * n;
  const double alpha = params.alpha;

  SparseSetsBound out;
  out.coefficient =
      std::exp(1 + alpha) * params.k * std::pow(params.p * n / (2 * alpha), alpha);
  auto base_at = [&](double i) {
    return out.coefficient * std::pow(i / n, alpha - 1);
  };
  out.tail_base = params.t > 0 ? base_at(static_cast<double>(params.t)) : 0.0;
  out.small_regime_base = base_at(std::sqrt(n));

  std::vector<double> exact_logs, simpl_logs;
  std::vector<std::uint64_t> row_is;
  if (params.t <= 512) {
    for (std::uint64_t i = 1; i <= params.t; ++i) row_is.push_back(i);
  } else {
    // log-spaced sample plus both endpoints; rows are a report, the
    // totals below still run over every i.
    double x = 1;
    while (x < static_cast<double>(params.t)) {
      row_is.push_back(static_cast<std::uint64_t>(x));
      x *= 1.05;
    }
    row_is.push_back(params.t);
    row_is.erase(std::unique(row_is.begin(), row_is.end()), row_is.end());
  }

  exact_logs.reserve(params.t);
  simpl_logs.reserve(params.t);
  const double ln_p = params.p > 0 ? std::log(params.p) : kNegInf;
  auto exact_log_at = [&](std::uint64_t i) {
    const std::uint64_t m_i = required_edges(alpha, i);
    const double pairs = static_cast<double>(i) * (static_cast<double>(i) - 1) / 2;
    if (static_cast<double>(m_i) > pairs) return kNegInf;  // zero-summand convention
    const double lp = m_i == 0 ? 0.0 : static_cast<double>(m_i) * ln_p;
    return ln_choose(host, static_cast<double>(i)) +
           ln_choose(pairs, static_cast<double>(m_i)) + lp;
  };
  auto simpl_log_at = [&](std::uint64_t i) {
    const double b = base_at(static_cast<double>(i));
    return b > 0 ? static_cast<double>(i) * std::log(b) : kNegInf;
  };
  for (std::uint64_t i = 1; i <= params.t; ++i) {
    exact_logs.push_back(exact_log_at(i));
    simpl_logs.push_back(simpl_log_at(i));
  }
  out.log_total_exact = log_sum_exp(exact_logs);
  out.log_total_simplified = log_sum_exp(simpl_logs);
  out.rows.reserve(row_is.size());
  for (std::uint64_t i : row_is)
    out.rows.push_back({i, exact_log_at(i), simpl_log_at(i),
                        base_at(static_cast<double>(i))});
  return out;
}

CutBound cut_bound(const BoundParams& params, double edge_threshold) {
  validate(params);
  const double ts = static_cast<double>(params.t) * static_cast<double>(params.s);
  if (edge_threshold < 0 || edge_threshold > ts)
    throw std::invalid_argument("cut bound: edge threshold outside [0, t*s]");
  const double n = static_cast<double>(params.n);
  const double host = params.k * n;
  const double s = static_cast<double>(params.s);
  const double t = static_cast<double>(params.t);
  const double b = edge_threshold;

  CutBound out;
  const double lp = params.p > 0 ? std::log(params.p) : kNegInf;
  out.log_exact = ln_choose(host, s) + ln_choose(host, t) +
                  ln_choose(ts, std::ceil(b - 1e-9)) +
                  (b > 0 ? std::ceil(b - 1e-9) * lp : 0.0);
  auto entropy_term = [](double total, double size) {
    return size > 0 ? size * std::log(std::exp(1.0) * total / size) : 0.0;
  };
  double simplified = entropy_term(host, s) + entropy_term(host, t);
  if (b > 0)
    simplified += b * (std::log(std::exp(1.0) * ts / b) +
                       (params.p > 0 ? std::log(params.p) : kNegInf));
  out.log_simplified = simplified;
  out.per_n_base = std::exp(simplified / n);
  out.vacuous = (b == 0) || out.log_simplified >= 0;
  return out;
}

RationalCrossCheck sparse_sets_rational_check(const BoundParams& params,
                                              std::uint64_t p_num, std::uint64_t p_den) {
  if (params.n > 40)
    throw std::invalid_argument("rational cross-check restricted to n <= 40");
  if (p_den == 0 || p_num > p_den)
    throw std::invalid_argument("rational probability out of range");
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  using Float = boost::multiprecision::cpp_bin_float_100;

  auto choose = [](std::uint64_t a, std::uint64_t b) {
    if (b > a) return cpp_int(0);
    cpp_int r = 1;
    for (std::uint64_t j = 0; j < b; ++j) {
      r *= a - j;
      r /= j + 1;
    }
    return r;
  };

  const std::uint64_t host =
      static_cast<std::uint64_t>(std::llround(params.k * static_cast<double>(params.n)));
  cpp_rational total = 0;
  const cpp_rational p(p_num, p_den);
  for (std::uint64_t i = 1; i <= params.t; ++i) {
    const std::uint64_t m_i = required_edges(params.alpha, i);
    const std::uint64_t pairs = i * (i - 1) / 2;
    if (m_i > pairs) continue;
    cpp_rational term = cpp_rational(choose(host, i) * choose(pairs, m_i));
    cpp_rational pm = 1;
    for (std::uint64_t j = 0; j < m_i; ++j) pm *= p;
    total += term * pm;
  }

  BoundParams fast = params;
  fast.p = static_cast<double>(p_num) / static_cast<double>(p_den);
  const auto fast_bound = sparse_sets_bound(fast);

  RationalCrossCheck out;
  out.log_fast = fast_bound.log_total_exact;
  if (total == 0) {
    out.log_exact_rational = kNegInf;
    out.abs_log_error = (out.log_fast == kNegInf) ? 0.0 : std::abs(out.log_fast);
  } else {
    const Float tf(total);
    out.log_exact_rational = static_cast<double>(log(tf));
    out.abs_log_error = std::abs(out.log_exact_rational - out.log_fast);
  }
  return out;
}

namespace lemmas {

namespace {

SparseConstants sparse_constants(double k, double pn, double alpha, double t_over_n) {
  SparseConstants sc;
  sc.alpha = alpha;
  sc.coefficient = std::exp(1 + alpha) * k * std::pow(pn / (2 * alpha), alpha);
  sc.tail_base = sc.coefficient * std::pow(t_over_n, alpha - 1);
  return sc;
}

}  // namespace

SparseConstants two_colour_sparse_constants() {
  return sparse_constants(1.0, 64.0, 12.0 / 7.0, 196e-7);
}

double two_colour_cut_base() {
  const double sf = 21e-7, tf = 175e-7, bf = 95.0 * sf / 7.0, pn = 64.0;
  const double e = std::exp(1.0);
  const double log_base = sf * std::log(e / sf) + tf * std::log(e / tf) +
                          bf * std::log(e * tf * sf * pn / bf);
  return std::exp(log_base);
}

SparseConstants multicolour_sparse_constants(double c, double k) {
  const double lk = std::log(k);
  const double alpha = 2 * lk / (lk + 2);
  const double t_over_n = 2.0 / (c * c * c * k * lk * lk);
  return sparse_constants(k, c * lk, alpha, t_over_n);
}

double multicolour_cut_base(double c, double k) {
  const double lk = std::log(k);
  return std::exp(3.0) / (32.0 * c * lk * lk);
}

double multicolour_feasible_c(double k) {
  double lo = 100.0, hi = 1e12;
  if (multicolour_sparse_constants(hi, k).tail_base > 0.5)
    return std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = std::sqrt(lo * hi);
    if (multicolour_sparse_constants(mid, k).tail_base <= 0.5)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

BoundParams two_colour_sparse_params(std::uint64_t n) {
  BoundParams bp;
  bp.n = n;
  bp.k = 1.0;
  bp.p = 64.0 / static_cast<double>(n);
  bp.alpha = 12.0 / 7.0;
  bp.t = static_cast<std::uint64_t>(196e-7 * static_cast<double>(n));
  return bp;
}

BoundParams two_colour_cut_params(std::uint64_t n) {
  BoundParams bp = two_colour_sparse_params(n);
  bp.s = static_cast<std::uint64_t>(21e-7 * static_cast<double>(n));
  bp.t = static_cast<std::uint64_t>(175e-7 * static_cast<double>(n));
  return bp;
}

BoundParams multicolour_sparse_params(std::uint64_t n, double c, double k) {
  const double lk = std::log(k);
  BoundParams bp;
  bp.n = n;
  bp.k = k;
  bp.c = c;
  bp.p = c * lk / static_cast<double>(n);
  bp.alpha = 2 * lk / (lk + 2);
  bp.t = static_cast<std::uint64_t>(2.0 * static_cast<double>(n) /
                                    (c * c * c * k * lk * lk));
  return bp;
}

BoundParams multicolour_cut_params(std::uint64_t n, double c, double k) {
  const double lk = std::log(k);
  BoundParams bp = multicolour_sparse_params(n, c, k);
  bp.s = static_cast<std::uint64_t>(static_cast<double>(n) / (c * c * c * k * lk * lk * lk));
  bp.t = static_cast<std::uint64_t>(2.0 * static_cast<double>(n) / (c * c * c * k * lk * lk));
  return bp;
}

double cut_threshold(const BoundParams& params) {
  if (params.c > 0)
    return 8.0 * static_cast<double>(params.s) * std::log(params.k);
  return 95.0 * static_cast<double>(params.s) / 7.0;
}

}  // namespace lemmas

}  // namespace indpath
