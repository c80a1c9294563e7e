#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "indpath/colouring.hpp"
#include "indpath/dfs.hpp"
#include "indpath/graph.hpp"

namespace indpath {

/// Stop thresholds of the guaranteed search: the run halts at the first
/// point where |S1| = s1, |S2| = s2, or the stack holds ell+1 vertices.
struct GuaranteeParams {
  std::uint64_t s1 = 1;
  std::uint64_t s2 = 1;
  std::uint64_t ell = 1;
};

enum class CheckStatus : std::uint8_t { pass, fail, undecided };
std::string_view to_string(CheckStatus status);

struct CheckResult {
  CheckStatus status = CheckStatus::undecided;
  std::optional<VertexSet> witness;  // violating set on fail
  std::string note;
};

inline constexpr std::size_t kExactCheckMaxVertices = 25;

/// Exact: does every vertex set S with |S| < size_cap span fewer than
/// edge_cap edges? Exhaustive for |V| <= 25, "undecided" beyond.
CheckResult check_local_density(const Graph& g, std::uint64_t size_cap,
                                std::uint64_t edge_cap);

/// Exact: does every vertex set S with |S| = s1 have external neighbourhood
/// of size at least `need` in gprime? Exhaustive for |V| <= 25.
CheckResult check_expansion(const Graph& gprime, std::uint64_t s1, std::uint64_t need);

struct GuaranteeOutcome {
  bool found = false;
  std::vector<Vertex> path;  // the stack at stop; certified when found
  RunRecord record;
  std::string note;          // populated on the failure branch
};

/// Runs the search on (gprime, host) with stop rule
/// (|S1|=s1 or |S2|=s2 or |U|=ell+1) and returns the stack. When the local
/// density and expansion hypotheses hold and |V| >= ell+s1+s2, the returned
/// sequence has at least ell edges; it is certified as a gprime-path induced
/// in host before returning. Otherwise the failure branch reports the sizes
/// at stop.
GuaranteeOutcome find_induced_path_guaranteed(const Graph& gprime, const Graph& host,
                                              const GuaranteeParams& params,
                                              const VertexOrdering& pi);

struct PipelineParams {
  GuaranteeParams params;
  double prune_threshold = 16.0;  // remove vertices of degree <= threshold
  std::optional<std::uint64_t> shuffle_seed;  // pi on the pruned graph; identity if unset
};

struct PipelineResult {
  bool found = false;
  std::vector<Vertex> path;  // host labels
  std::uint32_t colour = 0;  // selected (majority / densest) colour

  std::uint64_t host_n = 0, host_m = 0;
  std::uint64_t class_m = 0;   // edges of the selected colour
  std::uint64_t g1_n = 0;      // non-isolated vertices of the colour class
  std::uint64_t gprime_n = 0, gprime_m = 0;
  double prune_threshold = 0.0;
  GuaranteeParams params;

  bool cert_monochromatic = false;
  bool cert_path_in_gprime = false;
  bool cert_induced_in_host = false;
  StopReason stop_reason = StopReason::exhausted;
  std::uint64_t path_length = 0;  // edges, when found
  std::string diagnostic;         // non-fatal notes

  bool certified() const {
    return found && cert_monochromatic && cert_path_in_gprime && cert_induced_in_host;
  }
};

/// Extract the majority (two colours) / densest colour class, prune it to
/// minimum degree > threshold, and run the guaranteed search on the pruned
/// class against the host restricted to its vertices. Ties between colour
/// classes break to the lowest colour index. The returned path is certified
/// monochromatic, a path in the pruned class, and induced in the full host.
PipelineResult ramsey_pipeline(const Graph& host, const EdgeColouring& colouring,
                               const PipelineParams& params);

/// JSON rendering of the stage diagnostics.
std::string pipeline_diagnostics_json(const PipelineResult& result);

}  // namespace indpath
