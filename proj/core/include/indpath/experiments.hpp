#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "indpath/colouring.hpp"
#include "indpath/dfs.hpp"
#include "indpath/guarantees.hpp"
#include "indpath/graph.hpp"

namespace indpath {

enum class PiMode : std::uint8_t { identity, shuffled };
std::string_view to_string(PiMode mode);
PiMode parse_pi_mode(std::string_view name);

// ---------------------------------------------------------------------------
// Supercritical runs: G(n, (1+eps)/n) explored generatively to exhaustion.

struct SupercriticalConfig {
  std::size_t n = 0;
  double epsilon = 0.1;
  PiMode pi_mode = PiMode::identity;
  bool audit = false;  // per-round invariant audit; forces the ledger on
  LedgerMode ledger = LedgerMode::automatic;
  std::uint64_t trace_every = 0;
};

struct SupercriticalTrial {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double epsilon = 0.0;
  std::uint64_t max_u = 0;
  std::uint64_t path_length = 0;  // max_u - 1 for nonempty runs
  std::uint64_t s1_final = 0, s2_final = 0;
  std::uint64_t excess_final = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t ut_queries_at_peak = 0, ut_queries = 0, new_queries = 0;
  std::uint64_t rounds = 0;
  bool s2_le_excess_every_round = true;  // exact, checked after every round
  bool verdict_length = false;           // path_length >= eps^2 n / 5
  bool verdict_s2_excess = false;        // s2_final <= excess_final
  bool verdict_excess = false;           // excess_final <= eps^3 n
  bool audit_ok = true;
};

SupercriticalTrial supercritical_trial(const SupercriticalConfig& cfg, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Ramsey runs: colour a random host, extract the densest class, prune, search.

struct Ramsey2Config {
  std::size_t n = 0;  // host vertices; host ~ G(n, 64/n)
  ColouringKind strategy = ColouringKind::uniform_random;
  double scale = 1.0;  // multiplies the default ell = 7n/1e7
  std::optional<std::uint64_t> ell, s1, s2;  // explicit overrides
  PiMode pi_mode = PiMode::identity;
};

struct RamseyKConfig {
  std::size_t n = 0;  // per-colour scale; host has k*n vertices, p = c*log(k)/n
  std::uint32_t k = 2;
  double c = 200.0;
  ColouringKind strategy = ColouringKind::uniform_random;
  double scale = 1.0;  // multiplies the default ell = n/(c^3 k log^3 k)
  std::optional<std::uint64_t> ell, s1, s2;
  PiMode pi_mode = PiMode::identity;
};

struct RamseyTrial {
  std::uint64_t seed = 0;
  std::size_t host_n = 0;
  std::uint32_t k = 0;
  double c = 0.0;  // 0 marks the two-colour host
  std::string strategy;
  double scale = 1.0;
  PipelineResult pipeline;
  double host_edge_mean = 0.0, host_edge_sigma = 0.0, host_edges_zscore = 0.0;
  bool host_edges_within_5sigma = false;
  bool densest_ge_mean_fraction = false;  // class_m * k >= host_m
};

RamseyTrial ramsey2_trial(const Ramsey2Config& cfg, std::uint64_t seed);
RamseyTrial ramseyk_trial(const RamseyKConfig& cfg, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Emission. One CSV row per trial; every record carries its seed and the
// pinned generator identity. Values are formatted deterministically.

std::string format_double(double x);
std::string csv_escape(const std::string& field);

std::string supercritical_csv_header();
std::string to_csv_row(const SupercriticalTrial& t);
std::string ramsey_csv_header();
std::string to_csv_row(const RamseyTrial& t);

// ---------------------------------------------------------------------------
// Sweeps: a (parameter x seed) grid, deterministically ordered by
// (cell, seed), aggregated into per-cell medians and verdict fractions.
//
// Config JSON: {"experiment": "supercritical"|"ramsey2"|"ramseyk",
//               "grid": {param: [values...]},
//               "seeds": count | [seed...], "base_seed": first seed,
//               "scale": ..., "pi": "identity"|"shuffled", "audit": bool}

struct SweepOutput {
  std::string csv;           // one row per trial
  std::string summary_json;  // per-cell aggregates plus run metadata
};

SweepOutput run_sweep(const std::string& config_json_text);

}  // namespace indpath
