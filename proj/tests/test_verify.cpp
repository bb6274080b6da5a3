#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "kec/coloring.hpp"
#include "kec/generate.hpp"
#include "kec/matching.hpp"
#include "kec/verify.hpp"
#include "support.hpp"

using namespace kec;

TEST_CASE("canonical corpus") {
  CHECK(canon_names() == std::vector<std::string>{"THETA", "K4", "K33", "PETERSEN", "S6"});
  for (const auto& name : canon_names()) {
    CHECK(is_cubic(canon(name).graph));
    CHECK(is_connected(canon(name).graph));
  }
  CHECK_THROWS_WITH_AS(canon("FOO"), doctest::Contains("PETERSEN"), std::invalid_argument);
}

TEST_CASE("checks pass on the canonical corpus and re-validate") {
  for (const auto& name : canon_names()) {
    CAPTURE(name);
    const MultiGraph g = canon(name).graph;
    for (const Certificate& c : {check_t1(g), check_t2(g), check_t3(g), check_t5(g), check_bounds(g)}) {
      CHECK(c.verdict == Verdict::kPass);
      const Revalidation r = revalidate(c);
      CHECK_MESSAGE(r.ok, r.reason);
      const Certificate back = Certificate::from_json(Json::parse(c.to_json().dump()));
      CHECK(revalidate(back).ok);
      CHECK(back.to_json().dump() == c.to_json().dump());
    }
    for (const Certificate& c : check_conjecture(g)) {
      CHECK(c.verdict == Verdict::kPass);
      CHECK(revalidate(c).ok);
    }
  }
}

TEST_CASE("certificate layout") {
  const Certificate c = check_t5(canon("S6").graph);
  const Json j = c.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"claim", "graph", "hash", "verdict", "witness", "version"});
  CHECK(j.at("claim") == "T5");
  CHECK(j.at("version") == "kec 1.0.0");
  CHECK(j.at("hash").get<std::string>().size() == 16);
  CHECK(j.at("witness").at("nu2") == 5);
  CHECK(j.at("witness").at("nu3") == 7);
  CHECK(j.at("witness").at("sum_equality") == true);
  Json bad = j;
  bad["hash"] = "0000000000000000";
  CHECK_THROWS(Certificate::from_json(bad));
}

TEST_CASE("tampered certificates fail re-validation") {
  const MultiGraph g = canon("S6").graph;
  {
    Certificate c = check_t5(g);
    c.witness["nu2"] = 6;  // witness no longer has that many edges
    CHECK_FALSE(revalidate(c).ok);
  }
  {
    Certificate c = check_t5(g);
    c.verdict = Verdict::kFail;
    CHECK_FALSE(revalidate(c).ok);
  }
  {
    Certificate c = check_t2(g);
    c.witness["extensions"][0]["assignment"][0] = 0;
    c.witness["extensions"][0]["assignment"][1] = 0;
    CHECK_FALSE(revalidate(c).ok);
  }
  {
    Certificate c = check_t1(g);
    c.witness["subgraphs"][0]["assignment"] = Json::array({1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK_FALSE(revalidate(c).ok);
  }
  {
    auto cs = check_conjecture(g);
    Certificate c = cs.front();
    c.witness["matching"] = Json::array({0});
    CHECK_FALSE(revalidate(c).ok);
  }
  {
    Certificate c = check_t3(g);
    c.witness = Json::object();
    CHECK_FALSE(revalidate(c).ok);
  }
}

TEST_CASE("a fabricated conjecture FAIL re-validates only when honest") {
  const MultiGraph g = canon("S6").graph;
  Certificate c = check_conjecture(g).front();
  const Json complement = c.witness.at("complement");
  const Json assignment = c.witness.at("assignment");
  c.verdict = Verdict::kFail;
  c.witness.erase("complement");
  c.witness.erase("assignment");
  Json entry;
  entry["uncolored"] = complement;
  entry["assignment"] = assignment;
  c.witness["complements"] = Json::array({entry});
  // The listed complement fits inside F, so the FAIL is refuted.
  CHECK_FALSE(revalidate(c).ok);
}

TEST_CASE("no 1-factor gives a vacuous PASS") {
  const MultiGraph g = test::three_blocks();
  const Certificate c = check_t2(g);
  CHECK(c.verdict == Verdict::kPass);
  CHECK(c.witness.at("note") == "no 1-factor");
  CHECK(revalidate(c).ok);
  CHECK(check_t3(g).verdict == Verdict::kPass);
}

TEST_CASE("bounds and T5 on the corpus up to n = 10") {
  int equality_at_6 = 0;
  bool s6_found = false;
  for (const MultiGraph& g : enumerate_cubic_up_to(10)) {
    const Certificate t5 = check_t5(g);
    const Certificate b = check_bounds(g);
    CHECK(t5.verdict == Verdict::kPass);
    CHECK(b.verdict == Verdict::kPass);
    if (g.num_vertices() == 6 && t5.witness.at("sum_equality").get<bool>()) {
      ++equality_at_6;
      s6_found = s6_found || are_isomorphic(g, canon("S6").graph);
    }
  }
  CHECK(equality_at_6 >= 1);
  CHECK(s6_found);
}

TEST_CASE("extremal search is consistent with check_t5") {
  CHECK(search_extremal(2).empty());
  const auto found = search_extremal(10, 3);
  std::size_t equality = 0;
  for (const MultiGraph& g : enumerate_cubic_up_to(10))
    equality += check_t5(g).witness.at("sum_equality").get<bool>();
  CHECK(found.size() == equality);
  bool s6 = false;
  for (const Certificate& c : found) {
    CHECK(c.claim == Claim::kExtremal);
    CHECK(revalidate(c).ok);
    s6 = s6 || are_isomorphic(c.graph, canon("S6").graph);
  }
  CHECK(s6);
  CHECK(search_extremal(6).size() >= 1);
  CHECK_THROWS_AS(search_extremal(14), std::invalid_argument);
  CHECK_THROWS_AS(search_bound_tight(14), std::invalid_argument);
  for (const Certificate& c : search_bound_tight(10)) CHECK(revalidate(c).ok);
}

TEST_CASE("conjecture cap") {
  CHECK_THROWS_AS(check_conjecture(random_cubic_sample(12, 3, 0, true)), CapExceeded);
  CHECK_NOTHROW(check_conjecture(random_cubic_sample(12, 3, 0, true), {.conjecture_max_n = 12}));
}

TEST_CASE("parallel_map keeps order and rethrows the first error") {
  std::vector<int> xs(200);
  for (int i = 0; i < 200; ++i) xs[static_cast<std::size_t>(i)] = i;
  for (int jobs : {1, 2, 7, 64}) {
    const auto ys = parallel_map(xs, jobs, [](int x) { return x * x; });
    for (int i = 0; i < 200; ++i) CHECK(ys[static_cast<std::size_t>(i)] == i * i);
  }
  CHECK_THROWS_WITH(parallel_map(xs, 4,
                                 [](int x) {
                                   if (x == 17 || x == 150) throw std::runtime_error(std::to_string(x));
                                   return x;
                                 }),
                    "17");
  CHECK(parallel_map(std::vector<int>{}, 4, [](int x) { return x; }).empty());
}
