#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "indpath/graph.hpp"

namespace indpath {

// Pinned generator identity, echoed into every emitted record.
inline constexpr std::string_view kGeneratorName = "splitmix64";
inline constexpr std::string_view kGeneratorVersion = "1";

/// SplitMix64: 64-bit state advanced by the golden gamma, output finalized
/// with the mix function. Deterministic, O(1) per draw.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1), 53-bit mantissa.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Deterministic domain separation: distinct tags give independent streams
/// from the same base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);

/// A sequence of i.i.d. Bernoulli(p) variables, consumed monotonically.
/// Successes are generated through geometric gaps, so runs of negative
/// draws are skipped in O(1) regardless of length.
class BernoulliStream {
 public:
  BernoulliStream(std::uint64_t seed, double p);

  std::uint64_t seed() const { return seed_; }
  double p() const { return p_; }
  /// Number of variables consumed so far.
  std::uint64_t consumed() const { return index_; }

  /// Consumes one variable.
  bool draw();

  /// Consumes up to `count` variables, stopping after the first success.
  /// Returns the 0-based offset of the success within the run, or nullopt
  /// if all `count` draws were negative (all of them consumed).
  std::optional<std::uint64_t> next_success_within(std::uint64_t count);

 private:
  static constexpr std::uint64_t kNever = std::numeric_limits<std::uint64_t>::max();

  std::uint64_t gap();
  void schedule_next();

  std::uint64_t seed_;
  double p_;
  SplitMix64 rng_;
  std::uint64_t index_ = 0;
  std::uint64_t next_success_ = kNever;
};

/// G(n,p): each pair present independently with probability p, deterministic
/// per seed. Pairs are decided in canonical (u<v lexicographic) order with
/// geometric skipping, so the cost is O(n + |E|).
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

/// Edges of a G(n,p) sample without building the Graph.
std::vector<Edge> sample_gnp_edges(std::size_t n, double p, std::uint64_t seed);

/// Fisher-Yates permutation of 0..n-1.
std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace indpath
