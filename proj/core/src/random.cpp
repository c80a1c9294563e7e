#include "indpath/random.hpp"

#include <cmath>
#include <stdexcept>

namespace indpath {

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the tag
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  SplitMix64 mix(seed ^ h);
  return mix.next();
}

BernoulliStream::BernoulliStream(std::uint64_t seed, double p)
    : seed_(seed), p_(p), rng_(seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability out of [0,1]");
  if (p_ > 0.0) next_success_ = gap();
}

std::uint64_t BernoulliStream::gap() {
  // Failures before the next success: Geometric(p) by inversion.
  if (p_ >= 1.0) return 0;
  const double u = rng_.next_unit();
  const double g = std::floor(std::log1p(-u) / std::log1p(-p_));
  if (!(g < 1e18)) return kNever;  // beyond any feasible run
  return static_cast<std::uint64_t>(g);
}

void BernoulliStream::schedule_next() {
  const std::uint64_t g = gap();
  next_success_ = (g == kNever) ? kNever : index_ + g;
}

bool BernoulliStream::draw() {
  const bool hit = (index_ == next_success_);
  ++index_;
  if (hit) schedule_next();
  return hit;
}

std::optional<std::uint64_t> BernoulliStream::next_success_within(std::uint64_t count) {
  if (next_success_ != kNever && next_success_ < index_ + count) {
    const std::uint64_t offset = next_success_ - index_;
    index_ = next_success_ + 1;
    schedule_next();
    return offset;
  }
  index_ += count;
  return std::nullopt;
}

std::vector<Edge> sample_gnp_edges(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability out of [0,1]");
  std::vector<Edge> edges;
  if (n < 2 || p == 0.0) return edges;
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (p > 0.01) edges.reserve(static_cast<std::size_t>(static_cast<double>(total) * p * 1.05) + 16);

  BernoulliStream stream(derive_seed(seed, "gnp"), p);
  // Walk successes over linear pair indices; rows advance monotonically.
  // Linear index of (u,v), u<v: row_start(u) + (v-u-1), with
  // row_start(u) = u*(2n-u-1)/2.
  std::uint64_t idx = 0;
  std::uint64_t row = 0;
  std::uint64_t row_start = 0;
  std::uint64_t row_len = n - 1;
  while (idx < total) {
    const auto hit = stream.next_success_within(total - idx);
    if (!hit) break;
    idx += *hit;
    while (idx >= row_start + row_len) {
      row_start += row_len;
      --row_len;
      ++row;
    }
    const Vertex u = static_cast<Vertex>(row);
    const Vertex v = static_cast<Vertex>(row + 1 + (idx - row_start));
    edges.emplace_back(u, v);
    ++idx;
  }
  return edges;
}

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  return Graph::from_edge_list(n, sample_gnp_edges(n, p, seed));
}

std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  SplitMix64 rng(derive_seed(seed, "perm"));
  for (std::size_t i = n; i > 1; --i) {
    const std::uint64_t j = rng.next_below(i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace indpath
