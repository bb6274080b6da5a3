#include "kec/matching.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace kec {

OneFactor OneFactor::from(const MultiGraph& g, EdgeSet edges) {
  if (edges.universe() != g.num_edges()) throw PreconditionError("1-factor edge set belongs to a different graph");
  if (!is_perfect_matching(g, edges)) throw PreconditionError("edge set is not a perfect matching");
  return OneFactor(std::move(edges));
}

TwoFactor TwoFactor::from(const MultiGraph& g, EdgeSet edges) {
  if (edges.universe() != g.num_edges()) throw PreconditionError("2-factor edge set belongs to a different graph");
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e : edges.ids()) {
    ++deg[static_cast<std::size_t>(g.endpoints(e).u)];
    ++deg[static_cast<std::size_t>(g.endpoints(e).v)];
  }
  if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; }))
    throw PreconditionError("edge set is not 2-regular");
  return TwoFactor(std::move(edges));
}

bool is_perfect_matching(const MultiGraph& g, const EdgeSet& s) {
  return s.universe() == g.num_edges() && is_matching(g, s) && 2 * s.size() == g.num_vertices();
}

namespace {

// Edmonds' blossom algorithm on the underlying simple graph.
class Blossom {
 public:
  explicit Blossom(const MultiGraph& g) : g_(g), n_(g.num_vertices()) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (VertexId v = 0; v < n_; ++v) {
      for (EdgeId e : g.incident(v)) adj_[static_cast<std::size_t>(v)].push_back(g.other_end(e, v));
      auto& row = adj_[static_cast<std::size_t>(v)];
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    mate_.assign(static_cast<std::size_t>(n_), -1);
  }

  EdgeSet run() {
    for (VertexId v = 0; v < n_; ++v)
      if (mate_[idx(v)] < 0) augment_from(v);
    EdgeSet out(g_.num_edges());
    for (VertexId v = 0; v < n_; ++v) {
      VertexId w = mate_[idx(v)];
      if (w < v) continue;
      EdgeId best = -1;
      for (EdgeId e : g_.incident(v))
        if (g_.other_end(e, v) == w && (best < 0 || e < best)) best = e;
      out.insert(best);
    }
    return out;
  }

 private:
  static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

  VertexId lca(VertexId a, VertexId b) {
    std::vector<bool> seen(idx(n_), false);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = true;
      if (mate_[idx(a)] < 0) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = in_blossom_[idx(base_[idx(mate_[idx(v)])])] = true;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  VertexId find_path(VertexId root) {
    used_.assign(idx(n_), false);
    parent_.assign(idx(n_), -1);
    base_.resize(idx(n_));
    for (VertexId v = 0; v < n_; ++v) base_[idx(v)] = v;
    used_[idx(root)] = true;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId to : adj_[idx(v)]) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] >= 0 && parent_[idx(mate_[idx(to)])] >= 0)) {
          VertexId cur = lca(v, to);
          in_blossom_.assign(idx(n_), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[idx(i)])]) {
              base_[idx(i)] = cur;
              if (!used_[idx(i)]) {
                used_[idx(i)] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[idx(to)] < 0) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] < 0) return to;
          used_[idx(mate_[idx(to)])] = true;
          q.push(mate_[idx(to)]);
        }
      }
    }
    return -1;
  }

  void augment_from(VertexId root) {
    VertexId v = find_path(root);
    while (v >= 0) {
      VertexId pv = parent_[idx(v)];
      VertexId ppv = mate_[idx(pv)];
      mate_[idx(v)] = pv;
      mate_[idx(pv)] = v;
      v = ppv;
    }
  }

  const MultiGraph& g_;
  int n_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> mate_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

void require_cubic(const MultiGraph& g, const char* op) {
  if (!is_cubic(g)) throw PreconditionError(std::string(op) + " requires a cubic graph");
}

void perfect_rec(const MultiGraph& g, std::vector<bool>& covered, std::vector<EdgeId>& chosen,
                 std::vector<OneFactor>& out) {
  VertexId v = 0;
  while (v < g.num_vertices() && covered[static_cast<std::size_t>(v)]) ++v;
  if (v == g.num_vertices()) {
    out.push_back(OneFactor::from(g, EdgeSet::from_ids(g.num_edges(), chosen)));
    return;
  }
  std::vector<EdgeId> options(g.incident(v).begin(), g.incident(v).end());
  std::sort(options.begin(), options.end());
  for (EdgeId e : options) {
    VertexId w = g.other_end(e, v);
    if (covered[static_cast<std::size_t>(w)]) continue;
    covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = true;
    chosen.push_back(e);
    perfect_rec(g, covered, chosen, out);
    chosen.pop_back();
    covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = false;
  }
}

// Include/exclude over edges in id order; `visit` receives every matching.
template <typename Visit>
void matchings_rec(const MultiGraph& g, EdgeId e, std::vector<bool>& covered, EdgeSet& current, Visit& visit) {
  if (e == g.num_edges()) {
    visit(current);
    return;
  }
  const auto [u, v] = g.endpoints(e);
  if (!covered[static_cast<std::size_t>(u)] && !covered[static_cast<std::size_t>(v)]) {
    covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = true;
    current.insert(e);
    matchings_rec(g, e + 1, covered, current, visit);
    current.erase(e);
    covered[static_cast<std::size_t>(u)] = covered[static_cast<std::size_t>(v)] = false;
  }
  matchings_rec(g, e + 1, covered, current, visit);
}

template <typename T>
void sort_lex(std::vector<T>& items) {
  std::sort(items.begin(), items.end());
}

}  // namespace

EdgeSet maximum_matching(const MultiGraph& g) { return Blossom(g).run(); }

std::optional<OneFactor> find_one_factor(const MultiGraph& g) {
  require_cubic(g, "find_one_factor");
  EdgeSet m = maximum_matching(g);
  if (2 * m.size() != g.num_vertices()) return std::nullopt;
  return OneFactor::from(g, std::move(m));
}

TwoFactor complement_two_factor(const MultiGraph& g, const OneFactor& f) {
  if (!is_perfect_matching(g, f.edges())) throw PreconditionError("complement_two_factor needs a perfect matching of g");
  return TwoFactor::from(g, g.all_edges().minus(f.edges()));
}

std::vector<OneFactor> enumerate_perfect_matchings(const MultiGraph& g, const MatchingCaps& caps) {
  require_cubic(g, "enumerate_perfect_matchings");
  if (g.num_vertices() > caps.perfect_max_n) {
    throw CapExceeded("perfect matching enumeration capped at n <= " + std::to_string(caps.perfect_max_n) +
                      " (n = " + std::to_string(g.num_vertices()) + "); use random sampling of 1-factors instead");
  }
  std::vector<OneFactor> out;
  if (g.num_vertices() % 2 != 0) return out;
  std::vector<bool> covered(static_cast<std::size_t>(g.num_vertices()), false);
  std::vector<EdgeId> chosen;
  perfect_rec(g, covered, chosen, out);
  std::sort(out.begin(), out.end(), [](const OneFactor& a, const OneFactor& b) { return a.edges() < b.edges(); });
  return out;
}

std::vector<EdgeSet> enumerate_all_matchings(const MultiGraph& g) {
  std::vector<EdgeSet> out;
  std::vector<bool> covered(static_cast<std::size_t>(g.num_vertices()), false);
  EdgeSet current(g.num_edges());
  auto visit = [&](const EdgeSet& s) { out.push_back(s); };
  matchings_rec(g, 0, covered, current, visit);
  sort_lex(out);
  return out;
}

std::vector<EdgeSet> enumerate_maximal_matchings(const MultiGraph& g, const MatchingCaps& caps) {
  if (g.num_vertices() > caps.maximal_max_n) {
    throw CapExceeded("maximal matching enumeration capped at n <= " + std::to_string(caps.maximal_max_n) +
                      " (n = " + std::to_string(g.num_vertices()) + ")");
  }
  std::vector<EdgeSet> out;
  std::vector<bool> covered(static_cast<std::size_t>(g.num_vertices()), false);
  EdgeSet current(g.num_edges());
  auto visit = [&](const EdgeSet& s) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.endpoints(e);
      if (!covered[static_cast<std::size_t>(u)] && !covered[static_cast<std::size_t>(v)]) return;
    }
    out.push_back(s);
  };
  matchings_rec(g, 0, covered, current, visit);
  sort_lex(out);
  return out;
}

}  // namespace kec
