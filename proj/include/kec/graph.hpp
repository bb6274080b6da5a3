#ifndef KEC_GRAPH_HPP
#define KEC_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kec {

using VertexId = int;
using EdgeId = int;

struct Endpoints {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A set of edge identities of one fixed graph. Ordering is lexicographic over
// the sorted id lists, which is the enumeration order used throughout.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe) : bits_(static_cast<std::size_t>(universe), false) {}

  static EdgeSet from_ids(int universe, std::span<const EdgeId> ids);

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(EdgeId e) const { return bits_[static_cast<std::size_t>(e)]; }
  void insert(EdgeId e);
  void erase(EdgeId e);
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<EdgeId> ids() const;

  bool is_subset_of(const EdgeSet& other) const;
  bool intersects(const EdgeSet& other) const;
  EdgeSet united(const EdgeSet& other) const;
  EdgeSet intersected(const EdgeSet& other) const;
  EdgeSet minus(const EdgeSet& other) const;
  EdgeSet complement() const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b);

 private:
  std::vector<bool> bits_;
};

// Loopless multigraph with dense 0-based vertex and edge ids. Parallel edges
// are distinct edges. Immutable after build().
class MultiGraph {
 public:
  MultiGraph() = default;

  // Edge ids follow input order. Throws GraphError on loops or endpoints out
  // of range.
  static MultiGraph build(int n, std::span<const Endpoints> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(endpoints_.size()); }

  Endpoints endpoints(EdgeId e) const { return endpoints_[static_cast<std::size_t>(e)]; }
  VertexId other_end(EdgeId e, VertexId v) const;
  std::span<const EdgeId> incident(VertexId v) const { return incidence_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
  int multiplicity(VertexId u, VertexId v) const;
  const std::vector<Endpoints>& edge_list() const { return endpoints_; }

  EdgeSet empty_edge_set() const { return EdgeSet(num_edges()); }
  EdgeSet all_edges() const { return EdgeSet(num_edges()).complement(); }

 private:
  int n_ = 0;
  std::vector<Endpoints> endpoints_;
  std::vector<std::vector<EdgeId>> incidence_;
};

bool is_cubic(const MultiGraph& g);
bool is_matching(const MultiGraph& g, const EdgeSet& s);

// Components are listed by smallest vertex, vertices ascending inside each.
std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

// Label-invariant hash from iterated neighbourhood refinement over
// (neighbour class, multiplicity) signatures. Equal for isomorphic graphs.
std::uint64_t invariant_hash(const MultiGraph& g);

// Multiplicity-preserving isomorphism by refined-colour backtracking.
bool are_isomorphic(const MultiGraph& a, const MultiGraph& b);

// Vertex v of g becomes vertex_map[v]; edge order is kept unless edge_order
// is non-empty, in which case new edge i is old edge edge_order[i].
MultiGraph relabeled(const MultiGraph& g, std::span<const VertexId> vertex_map,
                     std::span<const EdgeId> edge_order = {});

// Same graph with edges sorted by (min endpoint, max endpoint), parallel edges
// in their original relative order.
MultiGraph canonical_edge_order(const MultiGraph& g);

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

bool has_parallel_edges(const MultiGraph& g);

}  // namespace kec

#endif  // KEC_GRAPH_HPP
