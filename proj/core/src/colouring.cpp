#include "indpath/colouring.hpp"

#include <algorithm>
#include <stdexcept>

#include "indpath/random.hpp"

namespace indpath {

std::string_view to_string(ColouringKind kind) {
  switch (kind) {
    case ColouringKind::uniform_random: return "uniform";
    case ColouringKind::label_alternating: return "alternating";
    case ColouringKind::greedy_balance: return "greedy";
    case ColouringKind::round_robin: return "roundrobin";
  }
  return "?";
}

ColouringKind parse_colouring_kind(std::string_view name) {
  if (name == "uniform") return ColouringKind::uniform_random;
  if (name == "alternating") return ColouringKind::label_alternating;
  if (name == "greedy") return ColouringKind::greedy_balance;
  if (name == "roundrobin") return ColouringKind::round_robin;
  throw std::invalid_argument("unknown colouring strategy: " + std::string(name));
}

EdgeColouring colour_edges(const Graph& g, const ColouringStrategy& strategy) {
  if (strategy.k == 0) throw std::invalid_argument("colour count must be positive");
  EdgeColouring out;
  out.k = strategy.k;
  out.colour.resize(g.edge_count());
  const auto edges = g.edges();
  switch (strategy.kind) {
    case ColouringKind::uniform_random: {
      SplitMix64 rng(derive_seed(strategy.seed, "colour"));
      for (std::size_t e = 0; e < edges.size(); ++e)
        out.colour[e] = static_cast<std::uint32_t>(rng.next_below(strategy.k));
      break;
    }
    case ColouringKind::label_alternating:
      for (std::size_t e = 0; e < edges.size(); ++e)
        out.colour[e] = (edges[e].first + edges[e].second) % strategy.k;
      break;
    case ColouringKind::greedy_balance: {
      std::vector<std::uint64_t> load(strategy.k, 0);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto it = std::min_element(load.begin(), load.end());
        const auto c = static_cast<std::uint32_t>(it - load.begin());
        out.colour[e] = c;
        ++load[c];
      }
      break;
    }
    case ColouringKind::round_robin:
      for (std::size_t e = 0; e < edges.size(); ++e)
        out.colour[e] = static_cast<std::uint32_t>(e % strategy.k);
      break;
  }
  return out;
}

std::vector<std::uint64_t> colour_class_sizes(const EdgeColouring& colouring) {
  std::vector<std::uint64_t> sizes(colouring.k, 0);
  for (std::uint32_t c : colouring.colour) ++sizes.at(c);
  return sizes;
}

}  // namespace indpath
