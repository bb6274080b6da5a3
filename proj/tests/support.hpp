#ifndef KEC_TESTS_SUPPORT_HPP
#define KEC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "kec/graph.hpp"

namespace kec::test {

inline MultiGraph G(int n, std::vector<Endpoints> edges) { return MultiGraph::build(n, edges); }

// Three doubled-edge triangles hung on one central vertex (vertex 9). No
// perfect matching: deleting the centre leaves three odd components.
inline MultiGraph three_blocks() {
  return G(10, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 4}, {3, 5}, {4, 5},
                {6, 7}, {6, 7}, {6, 8}, {7, 8}, {2, 9}, {5, 9}, {8, 9}});
}

inline MultiGraph shuffled(const MultiGraph& g, std::mt19937_64& rng) {
  std::vector<VertexId> perm(static_cast<std::size_t>(g.num_vertices()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<EdgeId> order(static_cast<std::size_t>(g.num_edges()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return relabeled(g, perm, order);
}

// Reference graph6 encoder (simple graphs, n <= 62).
inline std::string graph6_encode(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::string out(1, static_cast<char>(n + 63));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.multiplicity(i, j) > 0 ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + static_cast<std::size_t>(b)];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

}  // namespace kec::test

#endif  // KEC_TESTS_SUPPORT_HPP
