#ifndef KEC_KEMPE_HPP
#define KEC_KEMPE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "kec/certificate.hpp"
#include "kec/coloring.hpp"
#include "kec/graph.hpp"
#include "kec/matching.hpp"

namespace kec {

// Walk whose edges alternate alpha, gamma, alpha, ... from `start`. When the
// two-colored component through start is an even cycle, `closed` is set,
// `edges` is the whole cycle and end == start.
struct AlternatingPath {
  VertexId start = 0;
  Color alpha = 1;
  Color gamma = 2;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // edges.size() + 1 entries (start repeated at the back if closed)
  VertexId end = 0;
  bool closed = false;

  bool empty() const { return edges.empty(); }
};

// Odd cycle through an uncolored edge e of a maximum coloring. cycle_edges
// run from u (lower endpoint of e) to v alternating beta, gamma.
struct AlternatingCycle {
  EdgeId uncolored_edge = 0;
  std::vector<EdgeId> cycle_edges;
  std::vector<VertexId> vertices;  // u, ..., v along cycle_edges
  Color alpha = 1;
  Color beta = 2;
  Color gamma = 3;
  std::vector<EdgeId> pendant_edges;  // one per cycle vertex, same order as vertices

  int length() const { return static_cast<int>(cycle_edges.size()) + 1; }
};

// Raised when an input or intermediate coloring does not have the structure
// the extension arguments rely on. Carries a JSON trace.
class ClassificationViolated : public std::runtime_error {
 public:
  ClassificationViolated(const std::string& what, Json trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const Json& trace() const { return trace_; }

 private:
  Json trace_;
};

// Internal invariant failure inside an extension loop, with a state dump.
class ExtensionFailure : public std::runtime_error {
 public:
  ExtensionFailure(const std::string& what, Json dump) : std::runtime_error(what), dump_(std::move(dump)) {}
  const Json& dump() const { return dump_; }

 private:
  Json dump_;
};

AlternatingPath alternating_path(const PartialColoring& c, VertexId start, Color alpha, Color gamma);

// True when no edge of the pair's colors extends p at either end.
bool is_maximal(const PartialColoring& c, const AlternatingPath& p);

// Swaps alpha and gamma on p's edges. Throws PreconditionError if p is not a
// maximal alternating path of c.
PartialColoring shift_path(const PartialColoring& c, const AlternatingPath& p);

// Requires e uncolored with C(u) ∩ C(v) = {alpha} and C(u) ∪ C(v) = {1,2,3};
// otherwise PreconditionError. Throws ClassificationViolated when the traced
// beta-gamma path does not close an odd cycle with alpha pendants.
AlternatingCycle find_odd_cycle(const PartialColoring& c, EdgeId e);

// Checks the AlternatingCycle invariants against c.
bool is_valid_cycle(const PartialColoring& c, const AlternatingCycle& cyc);

Json path_to_json(const AlternatingPath& p);
Json cycle_to_json(const AlternatingCycle& cyc);

struct ExtensionResult {
  PartialColoring coloring;
  int iterations = 0;
  std::vector<int> progress;  // |F ∩ H| after each iteration, starting with the initial value
};

// Maximum 3-edge-colorable subgraph containing the 1-factor f. Starts from
// the canonical witness of nu(g, 3) unless `start` is given.
ExtensionResult extend_one_factor(const MultiGraph& g, const OneFactor& f);
ExtensionResult extend_one_factor_from(const MultiGraph& g, const OneFactor& f, const PartialColoring& start);

// Maximum 3-edge-colorable subgraph whose uncolored edges all lie in f.
ExtensionResult extend_avoiding(const MultiGraph& g, const OneFactor& f);
ExtensionResult extend_avoiding_from(const MultiGraph& g, const OneFactor& f, const PartialColoring& start);

}  // namespace kec

#endif  // KEC_KEMPE_HPP
