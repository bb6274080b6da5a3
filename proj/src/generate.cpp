#include "kec/generate.hpp"

#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>

namespace kec {

void validate_config(const GenConfig& cfg) {
  if (cfg.n < 2 || cfg.n % 2 != 0)
    throw std::invalid_argument("cubic graphs need an even order n >= 2 (got " + std::to_string(cfg.n) + ")");
  if (cfg.mode == GenMode::kExhaustive && cfg.n > kExhaustiveMaxN)
    throw std::invalid_argument("exhaustive enumeration is capped at n <= " + std::to_string(kExhaustiveMaxN));
  if (cfg.mode == GenMode::kRandom && cfg.count < 0) throw std::invalid_argument("count must be non-negative");
}

namespace {

// Up-to-isomorphism collection preserving insertion order.
class IsoClassSet {
 public:
  bool insert(MultiGraph g) {
    const std::uint64_t h = invariant_hash(g);
    auto& bucket = buckets_[h];
    for (std::size_t i : bucket)
      if (are_isomorphic(graphs_[i], g)) return false;
    bucket.push_back(graphs_.size());
    graphs_.push_back(std::move(g));
    return true;
  }
  std::vector<MultiGraph> take() { return std::move(graphs_); }

 private:
  std::vector<MultiGraph> graphs_;
  std::map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

MultiGraph expand(const MultiGraph& g, EdgeId first, EdgeId second) {
  const VertexId s = g.num_vertices();
  const VertexId t = s + 1;
  std::vector<Endpoints> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (e != first && e != second) edges.push_back(g.endpoints(e));
  const auto [a, b] = g.endpoints(first);
  if (first == second) {
    edges.push_back({a, s});
    edges.push_back({s, t});
    edges.push_back({s, t});
    edges.push_back({t, b});
  } else {
    const auto [c, d] = g.endpoints(second);
    edges.push_back({a, s});
    edges.push_back({s, b});
    edges.push_back({c, t});
    edges.push_back({t, d});
    edges.push_back({s, t});
  }
  return canonical_edge_order(MultiGraph::build(g.num_vertices() + 2, edges));
}

MultiGraph theta_graph() {
  const Endpoints e[] = {{0, 1}, {0, 1}, {0, 1}};
  return MultiGraph::build(2, e);
}

struct Levels {
  std::map<int, std::vector<MultiGraph>> connected;
  std::map<int, std::vector<MultiGraph>> disconnected;
};

// Multisets of connected components (non-decreasing (order, index)) totalling n.
void unions_rec(const Levels& lv, int remaining, int min_order, std::size_t min_index, int parts,
                std::vector<const MultiGraph*>& chosen, std::vector<MultiGraph>& out) {
  if (remaining == 0) {
    if (parts < 2) return;
    MultiGraph g = *chosen.front();
    for (std::size_t i = 1; i < chosen.size(); ++i) g = disjoint_union(g, *chosen[i]);
    out.push_back(canonical_edge_order(g));
    return;
  }
  for (int order = min_order; order <= remaining; order += 2) {
    const auto& comps = lv.connected.at(order);
    for (std::size_t i = order == min_order ? min_index : 0; i < comps.size(); ++i) {
      chosen.push_back(&comps[i]);
      unions_rec(lv, remaining - order, order, i, parts + 1, chosen, out);
      chosen.pop_back();
    }
  }
}

const Levels& levels_up_to(int n) {
  static Levels lv;
  static std::mutex mu;
  std::lock_guard lock(mu);
  if (lv.connected.empty()) {
    lv.connected[2] = {theta_graph()};
    lv.disconnected[2] = {};
  }
  for (int order = 4; order <= n; order += 2) {
    if (lv.connected.count(order)) continue;
    IsoClassSet found;
    for (const auto* source : {&lv.connected.at(order - 2), &lv.disconnected.at(order - 2)}) {
      for (const MultiGraph& g : *source) {
        for (EdgeId a = 0; a < g.num_edges(); ++a) {
          for (EdgeId b = a; b < g.num_edges(); ++b) {
            MultiGraph h = expand(g, a, b);
            if (is_connected(h)) found.insert(std::move(h));
          }
        }
      }
    }
    lv.connected[order] = found.take();
    std::vector<MultiGraph> unions;
    std::vector<const MultiGraph*> chosen;
    unions_rec(lv, order, 2, 0, 0, chosen, unions);
    lv.disconnected[order] = std::move(unions);
  }
  return lv;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace

std::vector<MultiGraph> enumerate_cubic(const GenConfig& cfg) {
  validate_config(cfg);
  if (cfg.mode != GenMode::kExhaustive) throw std::invalid_argument("enumerate_cubic needs exhaustive mode");
  const Levels& lv = levels_up_to(cfg.n);
  std::vector<MultiGraph> out = lv.connected.at(cfg.n);
  if (!cfg.connected_only) {
    const auto& rest = lv.disconnected.at(cfg.n);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

std::vector<MultiGraph> enumerate_cubic_up_to(int max_n) {
  std::vector<MultiGraph> out;
  for (int n = 2; n <= max_n; n += 2) {
    auto level = enumerate_cubic({.n = n});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

MultiGraph random_cubic_sample(int n, std::uint64_t seed, std::uint64_t index, bool connected_only) {
  validate_config({.n = n, .mode = GenMode::kRandom});
  std::uint64_t state = seed;
  splitmix64(state);
  state ^= index * 0xd1b54a32d192ed03ULL;
  std::mt19937_64 rng(splitmix64(state));
  const int stubs = 3 * n;
  std::vector<int> perm(static_cast<std::size_t>(stubs));
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    for (int i = 0; i < stubs; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = stubs - 1; i > 0; --i) {
      auto j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    std::vector<Endpoints> edges;
    bool loop = false;
    for (int i = 0; i < stubs; i += 2) {
      const VertexId a = perm[static_cast<std::size_t>(i)] / 3;
      const VertexId b = perm[static_cast<std::size_t>(i + 1)] / 3;
      if (a == b) {
        loop = true;
        break;
      }
      edges.push_back({a, b});
    }
    if (loop) continue;
    MultiGraph g = canonical_edge_order(MultiGraph::build(n, edges));
    if (connected_only && !is_connected(g)) continue;
    return g;
  }
  throw std::runtime_error("random_cubic: too many rejected samples");
}

std::vector<MultiGraph> random_cubic(const GenConfig& cfg) {
  validate_config(cfg);
  std::vector<MultiGraph> out;
  out.reserve(static_cast<std::size_t>(cfg.count));
  for (int i = 0; i < cfg.count; ++i)
    out.push_back(random_cubic_sample(cfg.n, cfg.seed, static_cast<std::uint64_t>(i), cfg.connected_only));
  return out;
}

}  // namespace kec
