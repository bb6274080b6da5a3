#include "kec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

namespace kec {

// ---------------------------------------------------------------------------
// EdgeSet

EdgeSet EdgeSet::from_ids(int universe, std::span<const EdgeId> ids) {
  EdgeSet s(universe);
  for (EdgeId e : ids) s.insert(e);
  return s;
}

void EdgeSet::insert(EdgeId e) {
  if (e < 0 || e >= universe()) throw GraphError("edge id " + std::to_string(e) + " outside edge set universe");
  bits_[static_cast<std::size_t>(e)] = true;
}

void EdgeSet::erase(EdgeId e) {
  if (e < 0 || e >= universe()) throw GraphError("edge id " + std::to_string(e) + " outside edge set universe");
  bits_[static_cast<std::size_t>(e)] = false;
}

int EdgeSet::size() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  for (int e = 0; e < universe(); ++e)
    if (bits_[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  for (int e = 0; e < universe(); ++e)
    if (contains(e) && (e >= other.universe() || !other.contains(e))) return false;
  return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  int lim = std::min(universe(), other.universe());
  for (int e = 0; e < lim; ++e)
    if (contains(e) && other.contains(e)) return true;
  return false;
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  EdgeSet out(std::max(universe(), other.universe()));
  for (int e = 0; e < out.universe(); ++e)
    if ((e < universe() && contains(e)) || (e < other.universe() && other.contains(e))) out.insert(e);
  return out;
}

EdgeSet EdgeSet::intersected(const EdgeSet& other) const {
  EdgeSet out(universe());
  for (int e = 0; e < universe(); ++e)
    if (contains(e) && e < other.universe() && other.contains(e)) out.insert(e);
  return out;
}

EdgeSet EdgeSet::minus(const EdgeSet& other) const {
  EdgeSet out(universe());
  for (int e = 0; e < universe(); ++e)
    if (contains(e) && !(e < other.universe() && other.contains(e))) out.insert(e);
  return out;
}

EdgeSet EdgeSet::complement() const {
  EdgeSet out(universe());
  for (int e = 0; e < universe(); ++e)
    if (!contains(e)) out.insert(e);
  return out;
}

std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) {
  auto ia = a.ids();
  auto ib = b.ids();
  return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
}

// ---------------------------------------------------------------------------
// MultiGraph

MultiGraph MultiGraph::build(int n, std::span<const Endpoints> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  MultiGraph g;
  g.n_ = n;
  g.incidence_.resize(static_cast<std::size_t>(n));
  g.endpoints_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) {
      throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(u) + "," + std::to_string(v) +
                       ") is a loop");
    }
    g.endpoints_.push_back({u, v});
    g.incidence_[static_cast<std::size_t>(u)].push_back(static_cast<EdgeId>(i));
    g.incidence_[static_cast<std::size_t>(v)].push_back(static_cast<EdgeId>(i));
  }
  return g;
}

VertexId MultiGraph::other_end(EdgeId e, VertexId v) const {
  const auto [a, b] = endpoints(e);
  return a == v ? b : a;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (EdgeId e : incident(u))
    if (other_end(e, u) == v) ++count;
  return count;
}

bool is_cubic(const MultiGraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

bool is_matching(const MultiGraph& g, const EdgeSet& s) {
  std::vector<bool> covered(static_cast<std::size_t>(g.num_vertices()), false);
  for (EdgeId e : s.ids()) {
    const auto [u, v] = g.endpoints(e);
    if (covered[static_cast<std::size_t>(u)] || covered[static_cast<std::size_t>(v)]) return false;
    covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<VertexId> q;
    q.push(s);
    comp[static_cast<std::size_t>(s)] = id;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      out.back().push_back(v);
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other_end(e, v);
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          q.push(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const MultiGraph& g) { return connected_components(g).size() <= 1; }

// ---------------------------------------------------------------------------
// Invariant refinement and isomorphism

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) { return mix(seed ^ mix(value)); }

// Per-vertex adjacency as (neighbour, multiplicity) pairs.
std::vector<std::vector<std::pair<VertexId, int>>> neighbour_multiplicities(const MultiGraph& g) {
  std::vector<std::vector<std::pair<VertexId, int>>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto& row = adj[static_cast<std::size_t>(v)];
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other_end(e, v);
      auto it = std::find_if(row.begin(), row.end(), [w](const auto& p) { return p.first == w; });
      if (it == row.end())
        row.emplace_back(w, 1);
      else
        ++it->second;
    }
  }
  return adj;
}

std::size_t class_count(std::vector<std::uint64_t> colours) {
  std::sort(colours.begin(), colours.end());
  return static_cast<std::size_t>(std::unique(colours.begin(), colours.end()) - colours.begin());
}

// Refines until the number of colour classes stops growing. The round count
// depends only on the isomorphism class, so colours are comparable across
// graphs.
std::vector<std::uint64_t> refined_colours(const MultiGraph& g) {
  const auto adj = neighbour_multiplicities(g);
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<std::uint64_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = combine(0x5eed, static_cast<std::uint64_t>(g.degree(static_cast<int>(v))));
  std::size_t classes = class_count(colour);
  std::vector<std::pair<std::uint64_t, int>> sig;
  for (std::size_t round = 0; round < n + 1; ++round) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig.clear();
      for (auto [w, mult] : adj[v]) sig.emplace_back(colour[static_cast<std::size_t>(w)], mult);
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = combine(colour[v], sig.size());
      for (auto [c, mult] : sig) h = combine(combine(h, c), static_cast<std::uint64_t>(mult));
      next[v] = h;
    }
    colour = std::move(next);
    std::size_t now = class_count(colour);
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

std::uint64_t hash_of_colours(const MultiGraph& g, std::vector<std::uint64_t> colours) {
  std::sort(colours.begin(), colours.end());
  std::uint64_t h = combine(static_cast<std::uint64_t>(g.num_vertices()), static_cast<std::uint64_t>(g.num_edges()));
  for (auto c : colours) h = combine(h, c);
  return h;
}

class IsoSearch {
 public:
  IsoSearch(const MultiGraph& a, const MultiGraph& b, std::vector<std::uint64_t> ca, std::vector<std::uint64_t> cb)
      : n_(a.num_vertices()), ca_(std::move(ca)), cb_(std::move(cb)) {
    ma_ = matrix(a);
    mb_ = matrix(b);
    order_ = search_order(a);
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  bool run() { return extend(0); }

 private:
  std::vector<int> matrix(const MultiGraph& g) const {
    std::vector<int> m(static_cast<std::size_t>(n_ * n_), 0);
    for (const auto& [u, v] : g.edge_list()) {
      ++m[static_cast<std::size_t>(u * n_ + v)];
      ++m[static_cast<std::size_t>(v * n_ + u)];
    }
    return m;
  }

  // Connected-first order, rarest colour classes first.
  std::vector<VertexId> search_order(const MultiGraph& a) const {
    std::vector<int> class_size(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v)
      class_size[static_cast<std::size_t>(v)] = static_cast<int>(std::count(ca_.begin(), ca_.end(), ca_[static_cast<std::size_t>(v)]));
    std::vector<VertexId> order;
    std::vector<bool> placed(static_cast<std::size_t>(n_), false);
    std::vector<int> links(static_cast<std::size_t>(n_), 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (best < 0) {
          best = v;
          continue;
        }
        auto key = [&](int x) {
          return std::make_tuple(-links[static_cast<std::size_t>(x)], class_size[static_cast<std::size_t>(x)], x);
        };
        if (key(v) < key(best)) best = v;
      }
      placed[static_cast<std::size_t>(best)] = true;
      order.push_back(best);
      for (EdgeId e : a.incident(best)) ++links[static_cast<std::size_t>(a.other_end(e, best))];
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId v = order_[depth];
    for (VertexId w = 0; w < n_; ++w) {
      if (used_[static_cast<std::size_t>(w)] || cb_[static_cast<std::size_t>(w)] != ca_[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        VertexId u = order_[i];
        VertexId x = map_[static_cast<std::size_t>(u)];
        ok = ma_[static_cast<std::size_t>(v * n_ + u)] == mb_[static_cast<std::size_t>(w * n_ + x)];
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(w)] = false;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  int n_;
  std::vector<std::uint64_t> ca_, cb_;
  std::vector<int> ma_, mb_;
  std::vector<VertexId> order_;
  std::vector<VertexId> map_;
  std::vector<bool> used_;
};

}  // namespace

std::uint64_t invariant_hash(const MultiGraph& g) { return hash_of_colours(g, refined_colours(g)); }

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto ca = refined_colours(a);
  auto cb = refined_colours(b);
  if (hash_of_colours(a, ca) != hash_of_colours(b, cb)) return false;
  IsoSearch search(a, b, std::move(ca), std::move(cb));
  return search.run();
}

MultiGraph relabeled(const MultiGraph& g, std::span<const VertexId> vertex_map, std::span<const EdgeId> edge_order) {
  if (static_cast<int>(vertex_map.size()) != g.num_vertices()) throw GraphError("vertex map has wrong size");
  if (!edge_order.empty() && static_cast<int>(edge_order.size()) != g.num_edges())
    throw GraphError("edge order has wrong size");
  std::vector<Endpoints> edges;
  edges.reserve(static_cast<std::size_t>(g.num_edges()));
  for (int i = 0; i < g.num_edges(); ++i) {
    EdgeId old = edge_order.empty() ? i : edge_order[static_cast<std::size_t>(i)];
    const auto [u, v] = g.endpoints(old);
    edges.push_back({vertex_map[static_cast<std::size_t>(u)], vertex_map[static_cast<std::size_t>(v)]});
  }
  return MultiGraph::build(g.num_vertices(), edges);
}

MultiGraph canonical_edge_order(const MultiGraph& g) {
  std::vector<Endpoints> edges;
  for (const auto& [u, v] : g.edge_list()) edges.push_back({std::min(u, v), std::max(u, v)});
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Endpoints& a, const Endpoints& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return MultiGraph::build(g.num_vertices(), edges);
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  std::vector<Endpoints> edges = a.edge_list();
  const int shift = a.num_vertices();
  for (const auto& [u, v] : b.edge_list()) edges.push_back({u + shift, v + shift});
  return MultiGraph::build(a.num_vertices() + b.num_vertices(), edges);
}

bool has_parallel_edges(const MultiGraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (EdgeId e : g.incident(v))
      if (g.multiplicity(v, g.other_end(e, v)) > 1) return true;
  return false;
}

}  // namespace kec
