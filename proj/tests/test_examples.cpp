// Worked examples per operation, including golden traces on the hand-checked
// S6 witness in data/s6_witness.json.

#include <doctest.h>

#include <fstream>

#include "kec/coloring.hpp"
#include "kec/graph_io.hpp"
#include "kec/kempe.hpp"
#include "kec/matching.hpp"
#include "kec/verify.hpp"
#include "support.hpp"

using namespace kec;
using kec::test::G;

namespace {

// x1=0 y1=1 z1=2 x2=3 y2=4 z2=5
// 0:x1y1 1:x1y1 2:x1z1 3:y1z1 4:z1z2 5:x2y2 6:x2y2 7:x2z2 8:y2z2
PartialColoring s6_witness(const MultiGraph& s6) {
  std::ifstream in(std::string(KEC_TEST_DATA_DIR) + "/s6_witness.json");
  REQUIRE(in);
  return coloring_from_json(s6, Json::parse(in));
}

std::vector<int> component_sizes(const MultiGraph& g, const EdgeSet& s) {
  std::vector<Endpoints> edges;
  for (EdgeId e : s.ids()) edges.push_back(g.endpoints(e));
  std::vector<int> sizes;
  for (const auto& c : connected_components(MultiGraph::build(g.num_vertices(), edges)))
    sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("graph-core examples") {
  CHECK_FALSE(is_cubic(G(2, {{0, 1}})));
  const MultiGraph k4 = canon("K4").graph;  // 01 02 03 12 13 23
  CHECK(is_matching(k4, EdgeSet::from_ids(6, std::vector<EdgeId>{0, 5})));
  CHECK(connected_components(G(0, {})).empty());
  CHECK(connected_components(k4).size() == 1);
  const MultiGraph theta = canon("THETA").graph;
  const auto tt = connected_components(disjoint_union(theta, theta));
  REQUIRE(tt.size() == 2);
  CHECK(tt[0].size() == 2);
  CHECK(tt[1].size() == 2);
  CHECK(invariant_hash(k4) != invariant_hash(canon("K33").graph));
  const std::vector<VertexId> id{0, 1};
  const std::vector<EdgeId> rev{2, 1, 0};
  CHECK(invariant_hash(theta) == invariant_hash(relabeled(theta, id, rev)));
  CHECK_FALSE(are_isomorphic(theta, k4));
  const MultiGraph s6 = canon("S6").graph;
  const std::vector<VertexId> mirror{3, 4, 5, 0, 1, 2};
  CHECK(are_isomorphic(s6, relabeled(s6, mirror)));
}

TEST_CASE("matching-factor examples") {
  const MultiGraph theta = canon("THETA").graph;
  const MultiGraph k4 = canon("K4").graph;
  const MultiGraph s6 = canon("S6").graph;
  const MultiGraph petersen = canon("PETERSEN").graph;
  CHECK(maximum_matching(theta).size() == 1);
  CHECK(maximum_matching(k4).size() == 2);
  CHECK(maximum_matching(petersen).size() == 5);
  CHECK(find_one_factor(theta)->edges().size() == 1);
  for (const OneFactor& f : enumerate_perfect_matchings(s6)) {
    CHECK(f.edges().contains(4));
    CHECK((f.edges().contains(0) != f.edges().contains(1)));
    CHECK((f.edges().contains(5) != f.edges().contains(6)));
  }
  const OneFactor f0 = OneFactor::from(theta, EdgeSet::from_ids(3, std::vector<EdgeId>{0}));
  CHECK(complement_two_factor(theta, f0).edges().ids() == std::vector<EdgeId>{1, 2});
  const OneFactor fk = OneFactor::from(k4, EdgeSet::from_ids(6, std::vector<EdgeId>{0, 5}));
  CHECK(component_sizes(k4, complement_two_factor(k4, fk).edges()) == std::vector<int>{4});
  for (const OneFactor& f : enumerate_perfect_matchings(petersen))
    CHECK(component_sizes(petersen, complement_two_factor(petersen, f).edges()) == std::vector<int>{5, 5});
  const auto theta_max = enumerate_maximal_matchings(theta);
  CHECK(theta_max.size() == 3);
  for (const auto& m : theta_max) CHECK(m.size() == 1);
  std::vector<EdgeSet> k4_perfect;
  for (const auto& f : enumerate_perfect_matchings(k4)) k4_perfect.push_back(f.edges());
  CHECK(enumerate_maximal_matchings(k4) == k4_perfect);
  const MultiGraph p3 = G(3, {{0, 1}, {1, 2}});
  const auto p3_max = enumerate_maximal_matchings(p3);
  REQUIRE(p3_max.size() == 2);
  CHECK(p3_max[0].ids() == std::vector<EdgeId>{0});
  CHECK(p3_max[1].ids() == std::vector<EdgeId>{1});
}

TEST_CASE("hand-checked S6 witness") {
  const MultiGraph s6 = canon("S6").graph;
  const PartialColoring w = s6_witness(s6);
  REQUIRE(validate(w));
  CHECK(w.colored_count() == 7);
  CHECK(w.colored_count() == nu(s6, 3).value);
  CHECK(colors_at(w, 1) == (ColorSet::of(1) | ColorSet::of(2)));
  CHECK(colors_at(PartialColoring(s6), 0).empty());
  CHECK(colors_at(nu(canon("K4").graph, 3).witness, 0) == ColorSet::first(3));

  // Golden Kempe traces.
  const AlternatingPath none = alternating_path(w, 1, 3, 1);
  CHECK(none.empty());
  const AlternatingPath p = alternating_path(w, 1, 1, 3);
  CHECK(p.edges == std::vector<EdgeId>{0, 2, 4, 7, 5});
  CHECK(p.end == 4);
  CHECK(is_maximal(w, p));
  const PartialColoring s = shift_path(w, p);
  CHECK(validate(s));
  CHECK(shift_path(s, alternating_path(s, 1, 3, 1)) == w);

  const AlternatingCycle cyc = find_odd_cycle(w, 3);
  CHECK(cyc.length() == 3);
  CHECK(cyc.vertices == std::vector<VertexId>{1, 0, 2});
  CHECK(cyc.cycle_edges == std::vector<EdgeId>{1, 2});
  CHECK(cyc.alpha == 1);
  CHECK(cyc.pendant_edges.back() == 4);  // z1-z2
  CHECK(w.color(4) == cyc.alpha);
  CHECK(is_valid_cycle(w, cyc));
}

TEST_CASE("Kempe examples") {
  const MultiGraph k4 = canon("K4").graph;
  const PartialColoring full = nu(k4, 3).witness;
  const AlternatingPath p = alternating_path(full, 0, 1, 2);
  CHECK(p.closed);
  CHECK(p.edges.size() == 4);
  CHECK(alternating_path(PartialColoring(k4), 0, 1, 2).empty());
  const PartialColoring empty(k4);
  const AlternatingPath e = alternating_path(empty, 0, 1, 2);
  CHECK(shift_path(empty, e) == empty);
  // Single alpha edge with no gamma at the far end.
  const MultiGraph two = G(2, {{0, 1}});
  const PartialColoring one(two, {1});
  const PartialColoring swapped = shift_path(one, alternating_path(one, 0, 1, 2));
  CHECK(swapped.color(0) == 2);
  CHECK(validate(swapped));
  CHECK_THROWS_AS(find_odd_cycle(full, 0), PreconditionError);
}

TEST_CASE("extension examples") {
  const MultiGraph theta = canon("THETA").graph;
  const MultiGraph s6 = canon("S6").graph;
  const MultiGraph petersen = canon("PETERSEN").graph;
  const auto r = extend_one_factor(theta, OneFactor::from(theta, EdgeSet::from_ids(3, std::vector<EdgeId>{0})));
  CHECK(r.coloring.colored_count() == 3);
  for (const OneFactor& f : enumerate_perfect_matchings(s6)) {
    const auto a = extend_one_factor(s6, f);
    CHECK(a.coloring.colored_count() == 7);
    CHECK_FALSE(a.coloring.uncolored_edges().intersects(f.edges()));
    const auto b = extend_avoiding(s6, f);
    CHECK(b.coloring.colored_count() == 7);
    CHECK(b.coloring.uncolored_edges().is_subset_of(f.edges()));
    CHECK(b.coloring.uncolored_edges().size() == 2);
  }
  for (const OneFactor& f : enumerate_perfect_matchings(petersen)) {
    const auto a = extend_one_factor(petersen, f);
    CHECK(a.coloring.colored_count() == 13);
    CHECK(f.edges().is_subset_of(a.coloring.colored_edges()));
    const auto b = extend_avoiding(petersen, f);
    CHECK(b.coloring.colored_count() == 13);
    CHECK(b.coloring.uncolored_edges().size() == 2);
    CHECK(b.coloring.uncolored_edges().is_subset_of(f.edges()));
  }
}

TEST_CASE("coloring-solver examples") {
  const MultiGraph s6 = canon("S6").graph;
  CHECK(enumerate_max_3ec_complements(canon("THETA").graph) == std::vector<EdgeSet>{EdgeSet(3)});
  CHECK(enumerate_max_3ec_complements(canon("K4").graph) == std::vector<EdgeSet>{EdgeSet(6)});
  const auto comps = enumerate_max_3ec_complements(s6);
  CHECK(!comps.empty());
  const EdgeSet left = EdgeSet::from_ids(9, std::vector<EdgeId>{0, 1, 2, 3});
  const EdgeSet right = EdgeSet::from_ids(9, std::vector<EdgeId>{5, 6, 7, 8});
  for (const EdgeSet& u : comps) {
    CHECK(u.size() == 2);
    CHECK(is_matching(s6, u));
    CHECK(u.intersected(left).size() == 1);
    CHECK(u.intersected(right).size() == 1);
  }
}

TEST_CASE("verify-harness examples") {
  const MultiGraph theta = canon("THETA").graph;
  const MultiGraph petersen = canon("PETERSEN").graph;
  CHECK(petersen.num_edges() == 15);
  CHECK_FALSE(has_parallel_edges(petersen));
  // Girth 5: no triangle and no 4-cycle.
  for (VertexId a = 0; a < 10; ++a)
    for (VertexId b = 0; b < 10; ++b)
      for (VertexId c = 0; c < 10; ++c) {
        if (a == b || b == c || a == c) continue;
        CHECK_FALSE((petersen.multiplicity(a, b) && petersen.multiplicity(b, c) && petersen.multiplicity(a, c)));
        for (VertexId d = 0; d < 10; ++d) {
          if (d == a || d == b || d == c) continue;
          CHECK_FALSE((petersen.multiplicity(a, b) && petersen.multiplicity(b, c) && petersen.multiplicity(c, d) &&
                       petersen.multiplicity(d, a)));
        }
      }
  const Certificate t2 = check_t2(theta);
  CHECK(t2.verdict == Verdict::kPass);
  CHECK(t2.witness.at("factors") == 3);
  CHECK(check_t3(petersen).witness.at("factors") == 6);
  const Certificate k4 = check_t5(canon("K4").graph);
  CHECK(k4.witness.at("nu2").get<int>() + k4.witness.at("nu3").get<int>() == 10);
  const Certificate pb = check_bounds(petersen);
  CHECK(pb.verdict == Verdict::kPass);
  CHECK(pb.witness.at("nu2") == 9);
  const Certificate sb = check_bounds(canon("S6").graph);
  CHECK(sb.witness.at("nu3_bound_tight") == true);
  for (const Certificate& c : check_conjecture(theta)) CHECK(c.verdict == Verdict::kPass);
  // Golden: every maximal matching of S6 contains the complement of some
  // maximum 3-edge-colorable subgraph.
  const auto s6 = check_conjecture(canon("S6").graph);
  CHECK(s6.size() == enumerate_maximal_matchings(canon("S6").graph).size());
  for (const Certificate& c : s6) CHECK(c.verdict == Verdict::kPass);
}
