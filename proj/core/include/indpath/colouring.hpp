#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "indpath/graph.hpp"

namespace indpath {

// Adversary instantiations for edge colourings. "Every colouring" is not
// enumerable, so these are lower-bound probes and are labelled as such in
// all outputs.
enum class ColouringKind : std::uint8_t {
  uniform_random,     // i.i.d. colour per edge
  label_alternating,  // (u+v) mod k
  greedy_balance,     // least-loaded colour in canonical edge order
  round_robin,        // edge index mod k
};

std::string_view to_string(ColouringKind kind);
ColouringKind parse_colouring_kind(std::string_view name);

struct ColouringStrategy {
  ColouringKind kind = ColouringKind::uniform_random;
  std::uint32_t k = 2;
  std::uint64_t seed = 0;  // used by uniform_random only
};

/// Colour per canonical edge id (Graph::edge_index order).
struct EdgeColouring {
  std::uint32_t k = 0;
  std::vector<std::uint32_t> colour;
};

EdgeColouring colour_edges(const Graph& g, const ColouringStrategy& strategy);

/// Edge count per colour class.
std::vector<std::uint64_t> colour_class_sizes(const EdgeColouring& colouring);

}  // namespace indpath
