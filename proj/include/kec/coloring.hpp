#ifndef KEC_COLORING_HPP
#define KEC_COLORING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kec/certificate.hpp"
#include "kec/graph.hpp"

namespace kec {

// 0 is "uncolored"; proper colors are 1..3.
using Color = std::uint8_t;
inline constexpr Color kUncolored = 0;
inline constexpr int kNumColors = 3;

// Subset of {1,2,3}.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  static constexpr ColorSet first(int k) { return ColorSet(static_cast<std::uint8_t>((1u << k) - 1u)); }
  static constexpr ColorSet of(Color c) { return ColorSet(bit(c)); }

  constexpr bool contains(Color c) const { return c != kUncolored && (mask_ & bit(c)) != 0; }
  constexpr void insert(Color c) {
    if (c != kUncolored) mask_ |= bit(c);
  }
  constexpr int size() const { return __builtin_popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  // Smallest color in the set, kUncolored when empty.
  constexpr Color lowest() const { return empty() ? kUncolored : static_cast<Color>(__builtin_ctz(mask_) + 1); }
  std::vector<Color> colors() const;

  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(mask_ | o.mask_); }
  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(mask_ & o.mask_); }
  constexpr ColorSet operator-(ColorSet o) const { return ColorSet(mask_ & ~o.mask_ & 0x7u); }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;

 private:
  constexpr explicit ColorSet(unsigned mask) : mask_(static_cast<std::uint8_t>(mask & 0x7u)) {}
  static constexpr std::uint8_t bit(Color c) { return static_cast<std::uint8_t>(1u << (c - 1)); }
  std::uint8_t mask_ = 0;
};

// Per-edge assignment over a fixed graph; the colored edges form the encoded
// subgraph H and the color classes are its matchings. The graph must outlive
// the coloring. Properness is not enforced on mutation; see validate().
class PartialColoring {
 public:
  explicit PartialColoring(const MultiGraph& g);
  PartialColoring(const MultiGraph& g, std::vector<Color> assignment);

  const MultiGraph& graph() const { return *graph_; }
  Color color(EdgeId e) const { return assignment_[static_cast<std::size_t>(e)]; }
  void set(EdgeId e, Color c);
  PartialColoring with(EdgeId e, Color c) const;

  std::span<const Color> assignment() const { return assignment_; }
  int colored_count() const;
  EdgeSet colored_edges() const;
  EdgeSet uncolored_edges() const;
  EdgeSet color_class(Color c) const;

  // The edge of color c at v, if any. With several (improper) the lowest id.
  std::optional<EdgeId> edge_with_color(VertexId v, Color c) const;

  friend bool operator==(const PartialColoring& a, const PartialColoring& b) {
    return a.graph_ == b.graph_ && a.assignment_ == b.assignment_;
  }

 private:
  const MultiGraph* graph_;
  std::vector<Color> assignment_;
};

ColorSet colors_at(const PartialColoring& c, VertexId v);

// True iff no two edges sharing a vertex carry the same color and every
// color is in 0..3.
bool validate(const PartialColoring& c);

struct NuRecord {
  int k = 0;
  int value = 0;
  PartialColoring witness;

  // The k color classes of the witness, which are pairwise disjoint matchings.
  std::vector<EdgeSet> matchings() const;
  Json to_json() const;
};

// Exact nu_k for k in {1,2,3}. k = 1 uses maximum_matching; k = 2, 3 run the
// branch-and-bound over per-edge assignments and return the lexicographically
// smallest optimal assignment as witness.
NuRecord nu(const MultiGraph& g, int k);

// Lexicographically smallest proper k-coloring of every edge outside
// `uncolored`, with those edges left uncolored; nullopt if none exists.
std::optional<PartialColoring> color_all_except(const MultiGraph& g, const EdgeSet& uncolored, int k = kNumColors);

struct MaxColorableSubgraph {
  EdgeSet complement;
  PartialColoring witness;
};

struct SolverCaps {
  int complement_max_n = 12;
};

// Every distinct E(G) \ E(H) over maximum 3-edge-colorable subgraphs H, in
// lexicographic order, each with a coloring of H.
std::vector<MaxColorableSubgraph> enumerate_max_3ec_subgraphs(const MultiGraph& g, const SolverCaps& caps = {});
std::vector<EdgeSet> enumerate_max_3ec_complements(const MultiGraph& g, const SolverCaps& caps = {});

// T1 certificate: PASS iff every complement above is a matching.
Certificate check_complement_matching(const MultiGraph& g, const SolverCaps& caps = {});

// {"n","m","assignment"}.
Json coloring_to_json(const PartialColoring& c);
// Accepts either that object or a bare assignment array.
PartialColoring coloring_from_json(const MultiGraph& g, const Json& j);
Json assignment_to_json(const PartialColoring& c);
Json ids_to_json(const EdgeSet& s);
EdgeSet ids_from_json(const MultiGraph& g, const Json& j);

}  // namespace kec

#endif  // KEC_COLORING_HPP
