#ifndef KEC_MATCHING_HPP
#define KEC_MATCHING_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "kec/graph.hpp"

namespace kec {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Perfect matching of a fixed graph.
class OneFactor {
 public:
  // Throws PreconditionError unless `edges` is a perfect matching of g.
  static OneFactor from(const MultiGraph& g, EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }

  friend bool operator==(const OneFactor&, const OneFactor&) = default;

 private:
  explicit OneFactor(EdgeSet edges) : edges_(std::move(edges)) {}
  EdgeSet edges_;
};

// Spanning 2-regular edge set.
class TwoFactor {
 public:
  static TwoFactor from(const MultiGraph& g, EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }

 private:
  explicit TwoFactor(EdgeSet edges) : edges_(std::move(edges)) {}
  EdgeSet edges_;
};

struct MatchingCaps {
  int perfect_max_n = 16;
  int maximal_max_n = 12;
};

// Maximum cardinality matching (Edmonds' blossom algorithm). Among parallel
// edges the lowest id is used.
EdgeSet maximum_matching(const MultiGraph& g);

bool is_perfect_matching(const MultiGraph& g, const EdgeSet& s);

// Requires a cubic graph. std::nullopt certifies that no perfect matching
// exists, since the matching returned by maximum_matching is maximum.
std::optional<OneFactor> find_one_factor(const MultiGraph& g);

TwoFactor complement_two_factor(const MultiGraph& g, const OneFactor& f);

// All perfect matchings, ordered lexicographically by sorted edge ids.
std::vector<OneFactor> enumerate_perfect_matchings(const MultiGraph& g, const MatchingCaps& caps = {});

// All inclusion-maximal matchings in the same order. Non-cubic graphs are
// allowed.
std::vector<EdgeSet> enumerate_maximal_matchings(const MultiGraph& g, const MatchingCaps& caps = {});

// Every matching (including the empty one), in lexicographic order.
std::vector<EdgeSet> enumerate_all_matchings(const MultiGraph& g);

}  // namespace kec

#endif  // KEC_MATCHING_HPP
