#include "kec/kempe.hpp"

#include <algorithm>
#include <string>

namespace kec {

namespace {

Color other_of(Color c, Color a, Color b) { return c == a ? b : a; }

int overlap(const PartialColoring& c, const EdgeSet& f) { return c.colored_edges().intersected(f).size(); }

void require_cubic(const MultiGraph& g, const char* op) {
  if (!is_cubic(g)) throw PreconditionError(std::string(op) + " requires a cubic graph");
}

Json state_dump(const PartialColoring& c, const OneFactor& f, const std::vector<int>& progress) {
  Json j;
  j["graph"] = graph_to_json(c.graph());
  j["factor"] = ids_to_json(f.edges());
  j["coloring"] = assignment_to_json(c);
  j["progress"] = progress;
  return j;
}

}  // namespace

AlternatingPath alternating_path(const PartialColoring& c, VertexId start, Color alpha, Color gamma) {
  if (alpha == gamma || alpha == kUncolored || gamma == kUncolored || alpha > kNumColors || gamma > kNumColors)
    throw PreconditionError("alternating_path needs two distinct proper colors");
  const MultiGraph& g = c.graph();
  AlternatingPath p;
  p.start = start;
  p.alpha = alpha;
  p.gamma = gamma;
  p.vertices.push_back(start);
  VertexId cur = start;
  Color want = alpha;
  for (;;) {
    auto next = c.edge_with_color(cur, want);
    if (!next) break;
    if (!p.edges.empty() && *next == p.edges.back()) break;  // only reachable on improper input
    if (static_cast<int>(p.edges.size()) >= g.num_edges())
      throw PreconditionError("alternating walk does not terminate; coloring is not proper");
    p.edges.push_back(*next);
    cur = g.other_end(*next, cur);
    p.vertices.push_back(cur);
    want = other_of(want, alpha, gamma);
    if (cur == start) {
      p.closed = true;
      break;
    }
  }
  p.end = cur;
  return p;
}

bool is_maximal(const PartialColoring& c, const AlternatingPath& p) {
  const MultiGraph& g = c.graph();
  if (p.vertices.size() != p.edges.size() + 1 || p.vertices.front() != p.start || p.vertices.back() != p.end)
    return false;
  Color want = p.alpha;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeId e = p.edges[i];
    if (c.color(e) != want) return false;
    const auto [a, b] = g.endpoints(e);
    const VertexId from = p.vertices[i];
    const VertexId to = p.vertices[i + 1];
    if (!((a == from && b == to) || (a == to && b == from))) return false;
    want = other_of(want, p.alpha, p.gamma);
  }
  if (p.closed) return !p.edges.empty() && p.end == p.start && p.edges.size() % 2 == 0;
  if (p.end == p.start && !p.edges.empty()) return false;
  if (p.edges.empty()) return !c.edge_with_color(p.start, p.alpha).has_value();
  if (c.edge_with_color(p.start, p.gamma).has_value()) return false;
  const Color next = p.edges.size() % 2 == 0 ? p.alpha : p.gamma;
  return !c.edge_with_color(p.end, next).has_value();
}

PartialColoring shift_path(const PartialColoring& c, const AlternatingPath& p) {
  if (!is_maximal(c, p)) throw PreconditionError("shift_path requires a maximal alternating path");
  PartialColoring out = c;
  for (EdgeId e : p.edges) out.set(e, other_of(c.color(e), p.alpha, p.gamma));
  return out;
}

bool is_valid_cycle(const PartialColoring& c, const AlternatingCycle& cyc) {
  const MultiGraph& g = c.graph();
  if (cyc.cycle_edges.size() < 2 || cyc.cycle_edges.size() % 2 != 0) return false;
  if (cyc.vertices.size() != cyc.cycle_edges.size() + 1 || cyc.pendant_edges.size() != cyc.vertices.size()) return false;
  if (c.color(cyc.uncolored_edge) != kUncolored) return false;
  const auto [eu, ev] = g.endpoints(cyc.uncolored_edge);
  const VertexId u = cyc.vertices.front();
  const VertexId v = cyc.vertices.back();
  if (!((eu == u && ev == v) || (eu == v && ev == u))) return false;
  std::vector<VertexId> sorted = cyc.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < cyc.cycle_edges.size(); ++i) {
    const EdgeId e = cyc.cycle_edges[i];
    if (c.color(e) != (i % 2 == 0 ? cyc.beta : cyc.gamma)) return false;
    const auto [a, b] = g.endpoints(e);
    const VertexId x = cyc.vertices[i];
    const VertexId y = cyc.vertices[i + 1];
    if (!((a == x && b == y) || (a == y && b == x))) return false;
  }
  for (std::size_t i = 0; i < cyc.vertices.size(); ++i) {
    const EdgeId p = cyc.pendant_edges[i];
    if (c.color(p) != cyc.alpha) return false;
    const auto [a, b] = g.endpoints(p);
    if (a != cyc.vertices[i] && b != cyc.vertices[i]) return false;
  }
  return true;
}

AlternatingCycle find_odd_cycle(const PartialColoring& c, EdgeId e) {
  const MultiGraph& g = c.graph();
  require_cubic(g, "find_odd_cycle");
  if (e < 0 || e >= g.num_edges()) throw PreconditionError("edge id out of range");
  if (c.color(e) != kUncolored) throw PreconditionError("find_odd_cycle: edge " + std::to_string(e) + " is colored");
  const auto [a, b] = g.endpoints(e);
  const VertexId u = std::min(a, b);
  const VertexId v = std::max(a, b);
  const ColorSet cu = colors_at(c, u);
  const ColorSet cv = colors_at(c, v);
  if ((cu & cv).size() != 1 || (cu | cv) != ColorSet::first(kNumColors)) {
    throw PreconditionError("find_odd_cycle: endpoints of edge " + std::to_string(e) +
                            " do not satisfy the maximality color condition");
  }
  AlternatingCycle cyc;
  cyc.uncolored_edge = e;
  cyc.alpha = (cu & cv).lowest();
  cyc.beta = (cu - cv).lowest();
  cyc.gamma = (cv - cu).lowest();

  const AlternatingPath path = alternating_path(c, u, cyc.beta, cyc.gamma);
  auto violated = [&](const std::string& why) {
    Json trace;
    trace["reason"] = why;
    trace["graph"] = graph_to_json(g);
    trace["coloring"] = assignment_to_json(c);
    trace["edge"] = e;
    trace["path"] = path_to_json(path);
    return ClassificationViolated("classification violated at edge " + std::to_string(e) + ": " + why, trace);
  };
  if (path.closed || path.end != v) throw violated("beta-gamma path from u does not end at v");
  cyc.cycle_edges = path.edges;
  cyc.vertices = path.vertices;

  for (std::size_t i = 0; i < cyc.vertices.size(); ++i) {
    const VertexId w = cyc.vertices[i];
    const EdgeId before = i == 0 ? e : cyc.cycle_edges[i - 1];
    const EdgeId after = i + 1 == cyc.vertices.size() ? e : cyc.cycle_edges[i];
    std::vector<EdgeId> rest;
    for (EdgeId x : g.incident(w))
      if (x != before && x != after) rest.push_back(x);
    if (rest.size() != 1) throw violated("cycle vertex " + std::to_string(w) + " has no unique pendant edge");
    cyc.pendant_edges.push_back(rest.front());
  }
  if (!is_valid_cycle(c, cyc)) throw violated("cycle is not odd with alternating beta-gamma edges and alpha pendants");
  return cyc;
}

Json path_to_json(const AlternatingPath& p) {
  Json j;
  j["start"] = p.start;
  j["colors"] = {p.alpha, p.gamma};
  j["edges"] = p.edges;
  j["vertices"] = p.vertices;
  j["end"] = p.end;
  j["closed"] = p.closed;
  return j;
}

Json cycle_to_json(const AlternatingCycle& cyc) {
  Json j;
  j["uncolored_edge"] = cyc.uncolored_edge;
  j["cycle_edges"] = cyc.cycle_edges;
  j["vertices"] = cyc.vertices;
  j["alpha"] = cyc.alpha;
  j["beta"] = cyc.beta;
  j["gamma"] = cyc.gamma;
  j["pendant_edges"] = cyc.pendant_edges;
  return j;
}

// ---------------------------------------------------------------------------
// Extension algorithms

namespace {

struct LoopGuard {
  const PartialColoring& start;
  const OneFactor& f;
  int cap;
  int iterations = 0;
  std::vector<int> progress;

  void step(const PartialColoring& now, bool increasing) {
    ++iterations;
    const int value = overlap(now, f.edges());
    if (!validate(now)) throw ExtensionFailure("coloring became improper", state_dump(now, f, progress));
    if (now.colored_count() != start.colored_count())
      throw ExtensionFailure("colored edge count changed", state_dump(now, f, progress));
    const bool monotone = increasing ? value > progress.back() : value < progress.back();
    progress.push_back(value);
    if (!monotone) throw ExtensionFailure("progress counter is not strictly monotone", state_dump(now, f, progress));
  }

  void check_cap(const PartialColoring& now) const {
    if (iterations >= cap)
      throw ExtensionFailure("iteration cap " + std::to_string(cap) + " exceeded", state_dump(now, f, progress));
  }
};

void check_inputs(const MultiGraph& g, const OneFactor& f, const PartialColoring& start, const char* op) {
  require_cubic(g, op);
  if (!is_perfect_matching(g, f.edges())) throw PreconditionError(std::string(op) + " needs a 1-factor of the graph");
  if (&start.graph() != &g) throw PreconditionError(std::string(op) + ": start coloring belongs to another graph");
  if (!validate(start)) throw PreconditionError(std::string(op) + ": start coloring is not proper");
}

std::optional<EdgeId> lowest_uncolored(const PartialColoring& c, const EdgeSet& f, bool inside) {
  for (EdgeId e = 0; e < c.graph().num_edges(); ++e)
    if (c.color(e) == kUncolored && f.contains(e) == inside) return e;
  return std::nullopt;
}

// Colors edges[0], edges[1], ... alternately first, second.
void color_alternately(PartialColoring& c, const std::vector<EdgeId>& edges, Color first, Color second) {
  for (std::size_t i = 0; i < edges.size(); ++i) c.set(edges[i], i % 2 == 0 ? first : second);
}

}  // namespace

ExtensionResult extend_one_factor_from(const MultiGraph& g, const OneFactor& f, const PartialColoring& start) {
  check_inputs(g, f, start, "extend_one_factor");
  PartialColoring c = start;
  LoopGuard guard{start, f, 10 * g.num_edges(), 0, {}};
  guard.progress.push_back(overlap(c, f.edges()));
  while (auto e = lowest_uncolored(c, f.edges(), true)) {
    guard.check_cap(c);
    const auto [a, b] = g.endpoints(*e);
    const VertexId u = std::min(a, b);
    const VertexId v = std::max(a, b);
    const ColorSet cu = colors_at(c, u);
    const ColorSet cv = colors_at(c, v);
    if (cu.size() != 2 || (cu & cv).size() != 1 || (cu | cv) != ColorSet::first(kNumColors)) {
      Json trace = state_dump(c, f, guard.progress);
      trace["edge"] = *e;
      throw ClassificationViolated("maximality color condition fails at 1-factor edge " + std::to_string(*e), trace);
    }
    const Color alpha = (cu - cv).lowest();
    const EdgeId displaced = *c.edge_with_color(u, alpha);
    c.set(displaced, kUncolored);
    c.set(*e, alpha);
    guard.step(c, true);
  }
  return {std::move(c), guard.iterations, std::move(guard.progress)};
}

ExtensionResult extend_one_factor(const MultiGraph& g, const OneFactor& f) {
  require_cubic(g, "extend_one_factor");
  return extend_one_factor_from(g, f, nu(g, 3).witness);
}

ExtensionResult extend_avoiding_from(const MultiGraph& g, const OneFactor& f, const PartialColoring& start) {
  check_inputs(g, f, start, "extend_avoiding");
  const EdgeSet& factor = f.edges();
  PartialColoring c = start;
  LoopGuard guard{start, f, 10 * g.num_edges(), 0, {}};
  guard.progress.push_back(overlap(c, factor));
  while (auto e = lowest_uncolored(c, factor, false)) {
    guard.check_cap(c);
    const AlternatingCycle cyc = find_odd_cycle(c, *e);
    const int len = cyc.length();
    // Closed edge sequence: ring[i] joins ring_vertices[i] and ring_vertices[i + 1 mod len].
    std::vector<EdgeId> ring = cyc.cycle_edges;
    ring.push_back(cyc.uncolored_edge);
    const std::vector<VertexId>& ring_vertices = cyc.vertices;
    auto at = [&](int i) { return ring[static_cast<std::size_t>(((i % len) + len) % len)]; };

    int on_factor = -1;
    for (int i = 0; i < len; ++i)
      if (factor.contains(at(i)) && (on_factor < 0 || at(i) < at(on_factor))) on_factor = i;

    PartialColoring next = c;
    if (on_factor >= 0) {
      // The cycle meets F: leave that F edge uncolored and recolor the rest of the cycle.
      std::vector<EdgeId> path;
      for (int k = 1; k < len; ++k) path.push_back(at(on_factor + k));
      next.set(at(on_factor), kUncolored);
      color_alternately(next, path, cyc.beta, cyc.gamma);
    } else {
      PartialColoring theta = c;
      for (EdgeId x : cyc.cycle_edges) theta.set(x, kUncolored);
      std::vector<int> order(static_cast<std::size_t>(len));
      for (int i = 0; i < len; ++i) order[static_cast<std::size_t>(i)] = i;
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return ring_vertices[static_cast<std::size_t>(x)] < ring_vertices[static_cast<std::size_t>(y)];
      });
      int chosen = -1;
      AlternatingPath escape;
      for (int j : order) {
        AlternatingPath p = alternating_path(theta, ring_vertices[static_cast<std::size_t>(j)], cyc.alpha, cyc.gamma);
        if (p.empty() || p.closed) continue;
        if (std::find(ring_vertices.begin(), ring_vertices.end(), p.end) != ring_vertices.end()) continue;
        chosen = j;
        escape = std::move(p);
        break;
      }
      if (chosen < 0) {
        Json trace = state_dump(c, f, guard.progress);
        trace["cycle"] = cycle_to_json(cyc);
        throw ClassificationViolated("no alpha-gamma path leaves the odd cycle of edge " + std::to_string(*e), trace);
      }
      next = shift_path(theta, escape);
      // x = (w, z) is the lower-id cycle edge at w; y is the other one.
      const EdgeId forward = at(chosen);
      const EdgeId backward = at(chosen - 1);
      std::vector<EdgeId> path;
      int z_index;
      EdgeId x;
      if (forward < backward) {
        x = forward;
        z_index = (chosen + 1) % len;
        for (int k = 1; k < len; ++k) path.push_back(at(chosen - k));
      } else {
        x = backward;
        z_index = (chosen - 1 + len) % len;
        for (int k = 0; k < len - 1; ++k) path.push_back(at(chosen + k));
      }
      const EdgeId z_pendant = cyc.pendant_edges[static_cast<std::size_t>(z_index)];
      if (next.color(z_pendant) != cyc.alpha || !factor.contains(z_pendant)) {
        Json trace = state_dump(c, f, guard.progress);
        trace["cycle"] = cycle_to_json(cyc);
        trace["escape"] = path_to_json(escape);
        throw ClassificationViolated("pendant edge at the far end of x is not an alpha-colored 1-factor edge", trace);
      }
      next.set(z_pendant, kUncolored);
      next.set(x, cyc.alpha);
      color_alternately(next, path, cyc.beta, cyc.gamma);
    }
    c = std::move(next);
    guard.step(c, false);
  }
  return {std::move(c), guard.iterations, std::move(guard.progress)};
}

ExtensionResult extend_avoiding(const MultiGraph& g, const OneFactor& f) {
  require_cubic(g, "extend_avoiding");
  return extend_avoiding_from(g, f, nu(g, 3).witness);
}

}  // namespace kec
