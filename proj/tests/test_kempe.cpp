#include <doctest.h>

#include <random>

#include "kec/generate.hpp"
#include "kec/kempe.hpp"
#include "kec/matching.hpp"
#include "kec/verify.hpp"
#include "kempe_cases.hpp"
#include "support.hpp"

using namespace kec;

TEST_CASE("alternating path on a hand example") {
  // Path 0-1-2-3 with colors 1,2,1; vertex 0 misses 2 and 3 misses 2.
  const MultiGraph g = test::G(4, {{0, 1}, {1, 2}, {2, 3}});
  const PartialColoring c(g, {1, 2, 1});
  const AlternatingPath p = alternating_path(c, 0, 1, 2);
  CHECK(p.edges == std::vector<EdgeId>{0, 1, 2});
  CHECK(p.vertices == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(p.end == 3);
  CHECK_FALSE(p.closed);
  CHECK(is_maximal(c, p));
  const PartialColoring s = shift_path(c, p);
  CHECK(s.assignment()[0] == 2);
  CHECK(s.assignment()[1] == 1);
  CHECK(s.assignment()[2] == 2);
  // Starting mid-path is not maximal.
  const AlternatingPath mid = alternating_path(c, 1, 2, 1);
  CHECK_FALSE(is_maximal(c, mid));
  CHECK_THROWS_AS(shift_path(c, mid), PreconditionError);
  CHECK_THROWS_AS(alternating_path(c, 0, 1, 1), PreconditionError);
}

TEST_CASE("alternating path closes on an even cycle") {
  const MultiGraph g = test::G(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const PartialColoring c(g, {1, 2, 1, 2});
  const AlternatingPath p = alternating_path(c, 0, 1, 2);
  CHECK(p.closed);
  CHECK(p.end == 0);
  CHECK(p.edges.size() == 4);
  CHECK(is_maximal(c, p));
  CHECK(test::check_shift(c, p).empty());
}

TEST_CASE("empty path when start lacks alpha") {
  const MultiGraph theta = canon("THETA").graph;
  const PartialColoring c(theta, {1, 0, 0});
  const AlternatingPath p = alternating_path(c, 0, 2, 1);
  CHECK(p.empty());
  CHECK(p.end == 0);
}

TEST_CASE("find_odd_cycle on Petersen") {
  const MultiGraph g = canon("PETERSEN").graph;
  const NuRecord r = nu(g, 3);
  const auto unc = r.witness.uncolored_edges().ids();
  REQUIRE(unc.size() == 2);
  for (EdgeId e : unc) {
    CHECK(test::check_cycle(r.witness, e).empty());
    const AlternatingCycle cyc = find_odd_cycle(r.witness, e);
    CHECK(cyc.length() >= 5);  // girth 5
    const Json j = cycle_to_json(cyc);
    CHECK(j.at("cycle_edges").size() == cyc.cycle_edges.size());
  }
  CHECK_THROWS_AS(find_odd_cycle(r.witness, r.witness.colored_edges().ids().front()), PreconditionError);
}

TEST_CASE("find_odd_cycle rejects non-maximal situations") {
  const MultiGraph theta = canon("THETA").graph;
  const PartialColoring c(theta, {1, 0, 0});
  CHECK_THROWS_AS(find_odd_cycle(c, 1), PreconditionError);
}

TEST_CASE("shift and cycle properties on random colorings") {
  std::mt19937_64 rng(2024);
  int shifts = 0;
  int cycles = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = 4 + 2 * test::pick(rng, 5);
    const MultiGraph g = random_cubic_sample(n, 99, static_cast<std::uint64_t>(round), true);
    const PartialColoring partial = test::random_partial(g, rng);
    for (int t = 0; t < 5; ++t) {
      if (auto p = test::random_maximal_path(partial, rng)) {
        CHECK(test::check_shift(partial, *p) == "");
        ++shifts;
      }
    }
    const PartialColoring best = test::scramble_maximum(nu(g, 3).witness, rng, 20);
    REQUIRE(validate(best));
    REQUIRE(best.colored_count() == nu(g, 3).value);
    for (EdgeId e : best.uncolored_edges().ids()) {
      CHECK(test::check_cycle(best, e) == "");
      ++cycles;
    }
  }
  CHECK(shifts > 500);
  CHECK(cycles > 20);
}

namespace {

void check_extensions(const MultiGraph& g, const PartialColoring& start) {
  const int nu3 = start.colored_count();
  for (const OneFactor& f : enumerate_perfect_matchings(g)) {
    const ExtensionResult a = extend_one_factor_from(g, f, start);
    CHECK(validate(a.coloring));
    CHECK(a.coloring.colored_count() == nu3);
    CHECK(f.edges().is_subset_of(a.coloring.colored_edges()));
    CHECK(a.progress.size() == static_cast<std::size_t>(a.iterations) + 1);
    for (std::size_t i = 1; i < a.progress.size(); ++i) CHECK(a.progress[i] > a.progress[i - 1]);

    const ExtensionResult b = extend_avoiding_from(g, f, start);
    CHECK(validate(b.coloring));
    CHECK(b.coloring.colored_count() == nu3);
    CHECK(b.coloring.uncolored_edges().is_subset_of(f.edges()));
    CHECK(complement_two_factor(g, f).edges().is_subset_of(b.coloring.colored_edges()));
    for (std::size_t i = 1; i < b.progress.size(); ++i) CHECK(b.progress[i] < b.progress[i - 1]);
  }
}

}  // namespace

TEST_CASE("extensions over every 1-factor up to n = 10") {
  for (const MultiGraph& g : enumerate_cubic_up_to(10)) check_extensions(g, nu(g, 3).witness);
}

TEST_CASE("extensions from scrambled maximum colorings") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 150; ++i) {
    const MultiGraph g = random_cubic_sample(4 + 2 * test::pick(rng, 5), 4, static_cast<std::uint64_t>(i), true);
    check_extensions(g, test::scramble_maximum(nu(g, 3).witness, rng, 30));
  }
}

TEST_CASE("extension preconditions") {
  const MultiGraph k4 = canon("K4").graph;
  const OneFactor f = *find_one_factor(k4);
  const PartialColoring small(k4, {1, 0, 0, 0, 0, 0});
  CHECK_THROWS(extend_one_factor_from(k4, f, small));
  const PartialColoring improper(k4, {1, 1, 0, 0, 0, 0});
  CHECK_THROWS(extend_avoiding_from(k4, f, improper));
  CHECK(extend_one_factor(k4, f).coloring.colored_count() == 6);
  const MultiGraph theta = canon("THETA").graph;
  CHECK(extend_one_factor(theta, *find_one_factor(theta)).coloring.colored_count() == 3);
}

TEST_CASE("non-maximum colorings can violate the classification") {
  std::mt19937_64 rng(31);
  int violations = 0;
  for (int i = 0; i < 400 && violations < 5; ++i) {
    const MultiGraph g = random_cubic_sample(8 + 2 * test::pick(rng, 3), 6, static_cast<std::uint64_t>(i), true);
    const PartialColoring c = test::random_partial(g, rng);
    for (EdgeId e : c.uncolored_edges().ids()) {
      const auto [a, b] = g.endpoints(e);
      const ColorSet ca = colors_at(c, a);
      const ColorSet cb = colors_at(c, b);
      if ((ca & cb).size() != 1 || (ca | cb) != ColorSet::first(3)) {
        CHECK_THROWS_AS(find_odd_cycle(c, e), PreconditionError);
        continue;
      }
      try {
        const std::string problem = test::check_cycle(c, e);
        CHECK(problem == "");
      } catch (const ClassificationViolated& v) {
        ++violations;
        CHECK(v.trace().contains("path"));
        CHECK(v.trace().at("edge") == e);
      }
    }
  }
  CHECK(violations >= 1);
}
