#ifndef KEC_GENERATE_HPP
#define KEC_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "kec/graph.hpp"

namespace kec {

enum class GenMode { kExhaustive, kRandom };

struct GenConfig {
  int n = 2;
  GenMode mode = GenMode::kExhaustive;
  int count = 1;            // random only
  std::uint64_t seed = 0;   // random only
  bool connected_only = true;
};

inline constexpr int kExhaustiveMaxN = 12;

// Throws std::invalid_argument for odd n, n < 2, or exhaustive n > 12.
void validate_config(const GenConfig& cfg);

// Every loopless cubic multigraph on cfg.n vertices exactly once up to
// isomorphism, edges in canonical order. Deterministic. Graphs of order n are
// produced from those of order n - 2 by subdividing two edges (or one edge
// twice) and joining the two new vertices; every connected loopless cubic
// multigraph arises this way from a possibly disconnected smaller one.
std::vector<MultiGraph> enumerate_cubic(const GenConfig& cfg);

// All connected graphs for every even order 2..max_n, ordered by n.
std::vector<MultiGraph> enumerate_cubic_up_to(int max_n);

// Configuration-model samples: 3n stubs paired uniformly, resampled on loops
// (and on disconnection when connected_only). Sample i depends only on
// (seed, i).
std::vector<MultiGraph> random_cubic(const GenConfig& cfg);
MultiGraph random_cubic_sample(int n, std::uint64_t seed, std::uint64_t index, bool connected_only);

}  // namespace kec

#endif  // KEC_GENERATE_HPP
