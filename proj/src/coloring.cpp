#include "kec/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kec/matching.hpp"

namespace kec {

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (Color c = 1; c <= kNumColors; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

PartialColoring::PartialColoring(const MultiGraph& g)
    : graph_(&g), assignment_(static_cast<std::size_t>(g.num_edges()), kUncolored) {}

PartialColoring::PartialColoring(const MultiGraph& g, std::vector<Color> assignment)
    : graph_(&g), assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != g.num_edges())
    throw std::invalid_argument("assignment length " + std::to_string(assignment_.size()) + " does not match m = " +
                                std::to_string(g.num_edges()));
}

void PartialColoring::set(EdgeId e, Color c) { assignment_.at(static_cast<std::size_t>(e)) = c; }

PartialColoring PartialColoring::with(EdgeId e, Color c) const {
  PartialColoring out = *this;
  out.set(e, c);
  return out;
}

int PartialColoring::colored_count() const {
  return static_cast<int>(std::count_if(assignment_.begin(), assignment_.end(), [](Color c) { return c != kUncolored; }));
}

EdgeSet PartialColoring::colored_edges() const {
  EdgeSet s(graph_->num_edges());
  for (EdgeId e = 0; e < graph_->num_edges(); ++e)
    if (color(e) != kUncolored) s.insert(e);
  return s;
}

EdgeSet PartialColoring::uncolored_edges() const { return colored_edges().complement(); }

EdgeSet PartialColoring::color_class(Color c) const {
  EdgeSet s(graph_->num_edges());
  for (EdgeId e = 0; e < graph_->num_edges(); ++e)
    if (color(e) == c) s.insert(e);
  return s;
}

std::optional<EdgeId> PartialColoring::edge_with_color(VertexId v, Color c) const {
  std::optional<EdgeId> best;
  for (EdgeId e : graph_->incident(v))
    if (color(e) == c && (!best || e < *best)) best = e;
  return best;
}

ColorSet colors_at(const PartialColoring& c, VertexId v) {
  ColorSet s;
  for (EdgeId e : c.graph().incident(v)) s.insert(c.color(e));
  return s;
}

bool validate(const PartialColoring& c) {
  const MultiGraph& g = c.graph();
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (c.color(e) > kNumColors) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    unsigned seen = 0;
    for (EdgeId e : g.incident(v)) {
      Color col = c.color(e);
      if (col == kUncolored) continue;
      unsigned bit = 1u << col;
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

std::vector<EdgeSet> NuRecord::matchings() const {
  std::vector<EdgeSet> out;
  for (Color c = 1; c <= k; ++c) out.push_back(witness.color_class(c));
  return out;
}

Json NuRecord::to_json() const {
  Json j;
  j["k"] = k;
  j["value"] = value;
  j["witness"] = coloring_to_json(witness);
  Json ms = Json::array();
  for (const auto& s : matchings()) ms.push_back(ids_to_json(s));
  j["matchings"] = std::move(ms);
  return j;
}

namespace {

// Depth-first search over per-edge values {uncolored, 1..k} in edge id order,
// values tried in ascending order, so the first assignment reaching `target`
// colored edges is the lexicographically smallest such assignment. Colors
// are introduced in order of first use (the first colored edge gets 1, the
// next new color is 2, ...), which loses nothing up to color permutation.
class AssignmentSearch {
 public:
  AssignmentSearch(const MultiGraph& g, int k, EdgeSet forced_uncolored)
      : g_(g),
        k_(k),
        full_(ColorSet::first(k)),
        forced_(std::move(forced_uncolored)),
        assignment_(static_cast<std::size_t>(g.num_edges()), kUncolored),
        used_(static_cast<std::size_t>(g.num_vertices())),
        avail_(static_cast<std::size_t>(g.num_vertices())) {}

  // Upper bound on colored edges for the empty assignment.
  int initial_bound() { return bound_from(0); }

  std::optional<std::vector<Color>> find_at_least(int target) {
    target_ = target;
    std::fill(assignment_.begin(), assignment_.end(), kUncolored);
    std::fill(used_.begin(), used_.end(), ColorSet{});
    if (dfs(0, 0, 0)) return assignment_;
    return std::nullopt;
  }

 private:
  // Remaining edges that still have a free color, capped per vertex by the
  // number of colors still free there; each edge uses two vertex slots.
  int bound_from(EdgeId from) {
    std::fill(avail_.begin(), avail_.end(), 0);
    int open = 0;
    for (EdgeId e = from; e < g_.num_edges(); ++e) {
      if (forced_.contains(e)) continue;
      const auto [u, v] = g_.endpoints(e);
      if ((full_ - (used_[idx(u)] | used_[idx(v)])).empty()) continue;
      ++open;
      ++avail_[idx(u)];
      ++avail_[idx(v)];
    }
    int slots = 0;
    for (VertexId v = 0; v < g_.num_vertices(); ++v)
      slots += std::min(avail_[idx(v)], k_ - used_[idx(v)].size());
    return std::min(open, slots / 2);
  }

  bool dfs(EdgeId e, int colored, int max_color) {
    if (colored >= target_) return true;  // the rest stay uncolored, which is lexicographically smallest
    if (e == g_.num_edges()) return false;
    if (colored + bound_from(e) < target_) return false;
    const auto [u, v] = g_.endpoints(e);
    if (dfs(e + 1, colored, max_color)) return true;
    if (forced_.contains(e)) return false;
    const ColorSet blocked = used_[idx(u)] | used_[idx(v)];
    const int top = std::min(max_color + 1, k_);
    for (Color c = 1; c <= top; ++c) {
      if (blocked.contains(c)) continue;
      assignment_[idx(e)] = c;
      const ColorSet old_u = used_[idx(u)];
      const ColorSet old_v = used_[idx(v)];
      used_[idx(u)].insert(c);
      used_[idx(v)].insert(c);
      if (dfs(e + 1, colored + 1, std::max<int>(max_color, c))) return true;
      used_[idx(u)] = old_u;
      used_[idx(v)] = old_v;
      assignment_[idx(e)] = kUncolored;
    }
    return false;
  }

  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  const MultiGraph& g_;
  int k_;
  ColorSet full_;
  EdgeSet forced_;
  int target_ = 0;
  std::vector<Color> assignment_;
  std::vector<ColorSet> used_;
  std::vector<int> avail_;
};

void require_k(int k) {
  if (k < 1 || k > kNumColors) throw std::invalid_argument("k must be 1, 2 or 3 (got " + std::to_string(k) + ")");
}

// Calls visit(subset) for every size-r subset of [0, m) in lexicographic
// order; stops early when visit returns false.
template <typename Visit>
void for_each_combination(int m, int r, Visit&& visit) {
  std::vector<EdgeId> pick(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
  if (r > m) return;
  for (;;) {
    if (!visit(pick)) return;
    int i = r - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - r + i) --i;
    if (i < 0) return;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

NuRecord nu(const MultiGraph& g, int k) {
  require_k(k);
  if (k == 1) {
    EdgeSet m = maximum_matching(g);
    PartialColoring w(g);
    for (EdgeId e : m.ids()) w.set(e, 1);
    return NuRecord{1, m.size(), std::move(w)};
  }
  AssignmentSearch search(g, k, g.empty_edge_set());
  for (int target = search.initial_bound(); target >= 0; --target) {
    if (auto found = search.find_at_least(target)) {
      PartialColoring w(g, std::move(*found));
      const int value = w.colored_count();
      return NuRecord{k, value, std::move(w)};
    }
  }
  throw std::logic_error("nu: empty assignment must always be feasible");
}

std::optional<PartialColoring> color_all_except(const MultiGraph& g, const EdgeSet& uncolored, int k) {
  require_k(k);
  AssignmentSearch search(g, k, uncolored);
  auto found = search.find_at_least(g.num_edges() - uncolored.size());
  if (!found) return std::nullopt;
  return PartialColoring(g, std::move(*found));
}

std::vector<MaxColorableSubgraph> enumerate_max_3ec_subgraphs(const MultiGraph& g, const SolverCaps& caps) {
  if (g.num_vertices() > caps.complement_max_n) {
    throw CapExceeded("maximum 3-edge-colorable subgraph enumeration capped at n <= " +
                      std::to_string(caps.complement_max_n) + " (n = " + std::to_string(g.num_vertices()) + ")");
  }
  const int nu3 = nu(g, 3).value;
  const int missing = g.num_edges() - nu3;
  std::vector<MaxColorableSubgraph> out;
  for_each_combination(g.num_edges(), missing, [&](const std::vector<EdgeId>& pick) {
    EdgeSet u = EdgeSet::from_ids(g.num_edges(), pick);
    if (auto w = color_all_except(g, u, 3)) out.push_back({std::move(u), std::move(*w)});
    return true;
  });
  return out;
}

std::vector<EdgeSet> enumerate_max_3ec_complements(const MultiGraph& g, const SolverCaps& caps) {
  std::vector<EdgeSet> out;
  for (auto& s : enumerate_max_3ec_subgraphs(g, caps)) out.push_back(std::move(s.complement));
  return out;
}

Certificate check_complement_matching(const MultiGraph& g, const SolverCaps& caps) {
  if (!is_cubic(g)) throw PreconditionError("Theorem-1 check requires a cubic graph");
  const auto subgraphs = enumerate_max_3ec_subgraphs(g, caps);
  Certificate cert;
  cert.claim = Claim::kT1;
  cert.graph = g;
  cert.verdict = Verdict::kPass;
  Json entries = Json::array();
  Json violating = Json::array();
  for (const auto& s : subgraphs) {
    Json entry;
    entry["uncolored"] = ids_to_json(s.complement);
    entry["assignment"] = assignment_to_json(s.witness);
    entry["is_matching"] = is_matching(g, s.complement);
    if (!is_matching(g, s.complement)) {
      cert.verdict = Verdict::kFail;
      violating.push_back(entry);
    }
    entries.push_back(std::move(entry));
  }
  cert.witness["nu3"] = g.num_edges() - (subgraphs.empty() ? 0 : subgraphs.front().complement.size());
  cert.witness["subgraphs"] = std::move(entries);
  if (cert.verdict == Verdict::kFail) cert.witness["violating"] = std::move(violating);
  return cert;
}

Json coloring_to_json(const PartialColoring& c) {
  Json j;
  j["n"] = c.graph().num_vertices();
  j["m"] = c.graph().num_edges();
  j["assignment"] = assignment_to_json(c);
  return j;
}

Json assignment_to_json(const PartialColoring& c) {
  Json a = Json::array();
  for (Color col : c.assignment()) a.push_back(static_cast<int>(col));
  return a;
}

PartialColoring coloring_from_json(const MultiGraph& g, const Json& j) {
  const Json& a = j.is_array() ? j : j.at("assignment");
  if (j.is_object()) {
    if (j.at("n").get<int>() != g.num_vertices() || j.at("m").get<int>() != g.num_edges())
      throw std::invalid_argument("coloring dimensions do not match the graph");
  }
  std::vector<Color> assignment;
  for (const auto& v : a) {
    int c = v.get<int>();
    if (c < 0 || c > kNumColors) throw std::invalid_argument("color value out of range: " + std::to_string(c));
    assignment.push_back(static_cast<Color>(c));
  }
  return PartialColoring(g, std::move(assignment));
}

Json ids_to_json(const EdgeSet& s) { return Json(s.ids()); }

EdgeSet ids_from_json(const MultiGraph& g, const Json& j) {
  EdgeSet s(g.num_edges());
  for (const auto& v : j) {
    int e = v.get<int>();
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("edge id out of range: " + std::to_string(e));
    s.insert(e);
  }
  return s;
}

}  // namespace kec
