#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "kec/generate.hpp"
#include "kec/graph_io.hpp"
#include "kec/verify.hpp"
#include "support.hpp"

using namespace kec;

namespace {

// Round-trip equality up to relabeling of ids inside parallel classes.
bool same_edge_multiset(const MultiGraph& a, const MultiGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (VertexId u = 0; u < a.num_vertices(); ++u)
    for (VertexId v = 0; v < a.num_vertices(); ++v)
      if (a.multiplicity(u, v) != b.multiplicity(u, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("edge-list parses theta") {
  const MultiGraph g = parse_edge_list("2 3\n0 1\n0 1\n0 1");
  CHECK(g.num_vertices() == 2);
  CHECK(g.multiplicity(0, 1) == 3);
}

TEST_CASE("edge-list errors carry positions") {
  try {
    parse_edge_list("2 1\n0 0");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
    CHECK(e.message().find("loop edge (0,0)") != std::string::npos);
  }
  try {
    parse_edge_list("2 1\n0 x");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse_edge_list("3 2\n0 1\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.message().find("expected 2 edge lines") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 5"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 1 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n-1 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("edge-list comments and multiple records") {
  const auto gs = parse_edge_lists("# first\n2 3\n0 1\n  # inside\n0 1\n0 1\n\n# 1\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  REQUIRE(gs.size() == 2);
  CHECK(gs[1].num_vertices() == 4);
  CHECK_THROWS_AS(parse_edge_list("2 3\n0 1\n0 1\n0 1\n2 3\n0 1\n0 1\n0 1\n"), ParseError);
}

TEST_CASE("write is canonical and round-trips") {
  const MultiGraph g = test::G(3, {{2, 1}, {1, 0}, {0, 2}, {1, 0}});
  CHECK(write_edge_list(g) == "3 4\n0 1\n0 1\n0 2\n1 2\n");
  CHECK(write_graph(g) == write_edge_list(g));
  CHECK_THROWS_AS(write_graph(g, GraphFormat::kGraph6), std::invalid_argument);
  CHECK(write_edge_list_in_id_order(g) == "3 4\n2 1\n1 0\n0 2\n1 0\n");
  std::mt19937_64 rng(3);
  for (const auto& name : canon_names()) {
    const MultiGraph c = canon(name).graph;
    const MultiGraph back = parse_edge_list(write_edge_list(c));
    CHECK(same_edge_multiset(c, back));
    const MultiGraph s = test::shuffled(c, rng);
    CHECK(write_edge_list(parse_edge_list(write_edge_list(s))) == write_edge_list(s));
  }
  const MultiGraph s6 = parse_edge_list(write_edge_list(canon("S6").graph));
  CHECK(s6.multiplicity(0, 1) == 2);
  CHECK(s6.multiplicity(3, 4) == 2);
}

TEST_CASE("round-trip over the generated corpus") {
  for (const MultiGraph& g : enumerate_cubic_up_to(10)) {
    const std::string text = write_edge_list(g);
    CHECK(write_edge_list(parse_edge_list(text)) == text);
  }
  std::string stream;
  const auto sample = random_cubic({.n = 10, .mode = GenMode::kRandom, .count = 20, .seed = 5});
  for (std::size_t i = 0; i < sample.size(); ++i) stream += "# " + std::to_string(i) + "\n" + write_edge_list(sample[i]);
  const auto back = parse_edge_lists(stream);
  REQUIRE(back.size() == sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) CHECK(same_edge_multiset(sample[i], back[i]));
}

TEST_CASE("graph6 matches a reference encoder") {
  const MultiGraph k4 = canon("K4").graph;
  CHECK(test::graph6_encode(k4) == "C~");
  CHECK(same_edge_multiset(parse_graph6("C~"), k4));
  CHECK(same_edge_multiset(parse_graph6(">>graph6<<C~"), k4));
  for (const auto& name : {"K33", "PETERSEN"}) {
    const MultiGraph g = canon(name).graph;
    CHECK(same_edge_multiset(parse_graph6(test::graph6_encode(g)), g));
  }
  for (const MultiGraph& g : enumerate_cubic_up_to(12)) {
    if (has_parallel_edges(g)) continue;
    CHECK(same_edge_multiset(parse_graph6(test::graph6_encode(g)), g));
  }
  // Petersen in its usual published form.
  const MultiGraph p = parse_graph6("IheA@GUAo");
  CHECK(p.num_vertices() == 10);
  CHECK(p.num_edges() == 15);
  CHECK(is_cubic(p));
  CHECK(are_isomorphic(p, canon("PETERSEN").graph));
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C\x20"), ParseError);
  try {
    parse_graph6_lines("C~\n\nC");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  const auto gs = parse_graph6_lines(">>graph6<<C~\nC~\n\n");
  CHECK(gs.size() == 2);
}

TEST_CASE("read_graph from files") {
  const auto dir = std::filesystem::temp_directory_path() / "kec_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "theta.txt") << "2 3\n0 1\n0 1\n0 1\n";
    std::ofstream(dir / "k4.g6") << "C~\n";
  }
  CHECK(read_graph(dir / "theta.txt", GraphFormat::kEdgeList).num_edges() == 3);
  CHECK(read_graph(dir / "k4.g6", GraphFormat::kGraph6).num_edges() == 6);
  CHECK_THROWS(read_graph(dir / "missing.txt", GraphFormat::kEdgeList));
  std::filesystem::remove_all(dir);
}
