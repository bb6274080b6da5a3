#include "kec/verify.hpp"

#include <cstdlib>
#include <stdexcept>

#include "kec/coloring.hpp"
#include "kec/generate.hpp"
#include "kec/kempe.hpp"
#include "kec/matching.hpp"

namespace kec {

namespace {

MultiGraph make(int n, std::initializer_list<Endpoints> edges) {
  return MultiGraph::build(n, std::vector<Endpoints>(edges));
}

void require_cubic(const MultiGraph& g, const char* what) {
  if (!is_cubic(g)) throw PreconditionError(std::string(what) + " requires a cubic graph");
}

Certificate make_cert(Claim claim, const MultiGraph& g) {
  Certificate c;
  c.claim = claim;
  c.graph = g;
  c.verdict = Verdict::kPass;
  return c;
}

Json extension_entry(const OneFactor& f, const ExtensionResult& r) {
  Json j;
  j["factor"] = ids_to_json(f.edges());
  j["assignment"] = assignment_to_json(r.coloring);
  j["iterations"] = r.iterations;
  return j;
}

enum class FactorMode { kContain, kAvoid };

// Shared driver of the two 1-factor extension checks.
Certificate check_extensions(const MultiGraph& g, const HarnessCaps& caps, FactorMode mode) {
  const Claim claim = mode == FactorMode::kContain ? Claim::kT2 : Claim::kT3;
  require_cubic(g, mode == FactorMode::kContain ? "T2 check" : "T3 check");
  const auto factors = enumerate_perfect_matchings(g, {.perfect_max_n = caps.factor_max_n});
  Certificate cert = make_cert(claim, g);
  if (factors.empty()) {
    cert.witness["note"] = "no 1-factor";
    cert.witness["factors"] = 0;
    return cert;
  }
  const NuRecord nu3 = nu(g, 3);
  cert.witness["nu3"] = nu3.value;
  cert.witness["nu3_witness"] = assignment_to_json(nu3.witness);
  cert.witness["factors"] = factors.size();
  Json entries = Json::array();
  Json failures = Json::array();
  for (const OneFactor& f : factors) {
    try {
      ExtensionResult r = mode == FactorMode::kContain ? extend_one_factor_from(g, f, nu3.witness)
                                                       : extend_avoiding_from(g, f, nu3.witness);
      std::string problem;
      if (!validate(r.coloring))
        problem = "coloring is not proper";
      else if (r.coloring.colored_count() != nu3.value)
        problem = "size differs from nu3";
      else if (mode == FactorMode::kContain && !f.edges().is_subset_of(r.coloring.colored_edges()))
        problem = "1-factor not contained in H";
      else if (mode == FactorMode::kAvoid && !r.coloring.uncolored_edges().is_subset_of(f.edges()))
        problem = "uncolored edge outside the 1-factor";
      else if (mode == FactorMode::kAvoid &&
               !complement_two_factor(g, f).edges().is_subset_of(r.coloring.colored_edges()))
        problem = "complementary 2-factor not contained in H";
      if (!problem.empty()) {
        Json fail = extension_entry(f, r);
        fail["reason"] = problem;
        failures.push_back(std::move(fail));
        if (cert.verdict == Verdict::kPass) cert.verdict = Verdict::kFail;
      }
      entries.push_back(extension_entry(f, r));
    } catch (const ClassificationViolated& err) {
      Json fail;
      fail["factor"] = ids_to_json(f.edges());
      fail["reason"] = err.what();
      fail["trace"] = err.trace();
      failures.push_back(std::move(fail));
      cert.verdict = Verdict::kViolationFound;
    } catch (const ExtensionFailure& err) {
      Json fail;
      fail["factor"] = ids_to_json(f.edges());
      fail["reason"] = err.what();
      fail["trace"] = err.dump();
      failures.push_back(std::move(fail));
      if (cert.verdict == Verdict::kPass) cert.verdict = Verdict::kFail;
    }
  }
  cert.witness["extensions"] = std::move(entries);
  if (!failures.empty()) cert.witness["failures"] = std::move(failures);
  return cert;
}

struct NuPair {
  NuRecord nu2;
  NuRecord nu3;
};

Json nu_pair_witness(const MultiGraph& g, const NuPair& p) {
  const int n = g.num_vertices();
  Json w;
  w["n"] = n;
  w["nu2"] = p.nu2.value;
  w["nu3"] = p.nu3.value;
  w["nu2_witness"] = assignment_to_json(p.nu2.witness);
  w["nu3_witness"] = assignment_to_json(p.nu3.witness);
  w["sum_equality"] = p.nu2.value + p.nu3.value == 2 * n;
  w["nu2_bound_tight"] = 5 * p.nu2.value == 4 * n;
  w["nu3_bound_tight"] = 6 * p.nu3.value == 7 * n;
  return w;
}

// --- revalidation helpers ---------------------------------------------------

struct Invalid {
  std::string reason;
};

void expect(bool cond, const std::string& reason) {
  if (!cond) throw Invalid{reason};
}

PartialColoring coloring_of(const MultiGraph& g, const Json& assignment, int max_color, const std::string& what) {
  PartialColoring c = coloring_from_json(g, assignment);
  expect(validate(c), what + " is not a proper partial coloring");
  for (EdgeId e = 0; e < g.num_edges(); ++e) expect(c.color(e) <= max_color, what + " uses a color above " + std::to_string(max_color));
  return c;
}

void revalidate_extensions(const Certificate& cert, FactorMode mode) {
  const MultiGraph& g = cert.graph;
  const Json& w = cert.witness;
  if (w.contains("note")) {
    expect(cert.verdict == Verdict::kPass, "vacuous certificate must PASS");
    expect(enumerate_perfect_matchings(g, {.perfect_max_n = g.num_vertices()}).empty() || false,
           "graph recorded without 1-factor has one");
    return;
  }
  const int nu3 = w.at("nu3").get<int>();
  expect(coloring_of(g, w.at("nu3_witness"), 3, "nu3 witness").colored_count() == nu3, "nu3 witness size differs");
  bool all_ok = true;
  for (const Json& entry : w.at("extensions")) {
    const EdgeSet f = ids_from_json(g, entry.at("factor"));
    expect(is_perfect_matching(g, f), "recorded factor is not a perfect matching");
    PartialColoring c = coloring_from_json(g, entry.at("assignment"));
    bool ok = validate(c) && c.colored_count() == nu3;
    if (mode == FactorMode::kContain) ok = ok && f.is_subset_of(c.colored_edges());
    if (mode == FactorMode::kAvoid) ok = ok && c.uncolored_edges().is_subset_of(f);
    all_ok = all_ok && ok;
  }
  if (cert.verdict == Verdict::kPass) {
    expect(all_ok && !w.contains("failures"), "PASS certificate contains a failing extension");
    expect(w.at("extensions").size() == w.at("factors").get<std::size_t>(), "extension count differs from factor count");
  } else {
    expect(w.contains("failures") && !w.at("failures").empty(), "non-PASS certificate without failures");
  }
}

void revalidate_t1(const Certificate& cert) {
  const MultiGraph& g = cert.graph;
  const Json& w = cert.witness;
  const int nu3 = w.at("nu3").get<int>();
  bool violation = false;
  expect(!w.at("subgraphs").empty(), "no maximum subgraph recorded");
  for (const Json& entry : w.at("subgraphs")) {
    PartialColoring c = coloring_of(g, entry.at("assignment"), 3, "subgraph coloring");
    expect(c.colored_count() == nu3, "subgraph size differs from nu3");
    const EdgeSet u = ids_from_json(g, entry.at("uncolored"));
    expect(c.uncolored_edges() == u, "recorded complement differs from the coloring's uncolored edges");
    if (!is_matching(g, u)) violation = true;
  }
  expect((cert.verdict == Verdict::kFail) == violation, "verdict disagrees with the recorded complements");
}

void revalidate_nu_pair(const Certificate& cert) {
  const MultiGraph& g = cert.graph;
  const Json& w = cert.witness;
  const int n = g.num_vertices();
  const int nu2 = w.at("nu2").get<int>();
  const int nu3 = w.at("nu3").get<int>();
  expect(coloring_of(g, w.at("nu2_witness"), 2, "nu2 witness").colored_count() == nu2, "nu2 witness size differs");
  expect(coloring_of(g, w.at("nu3_witness"), 3, "nu3 witness").colored_count() == nu3, "nu3 witness size differs");
  bool holds = true;
  switch (cert.claim) {
    case Claim::kT5:
      holds = nu2 + nu3 >= 2 * n;
      break;
    case Claim::kBounds:
      holds = 5 * nu2 >= 4 * n && 6 * nu3 >= 7 * n;
      break;
    case Claim::kExtremal:
      holds = nu2 + nu3 == 2 * n;
      break;
    default:
      break;
  }
  expect(holds == (cert.verdict == Verdict::kPass), "verdict disagrees with the recorded values");
}

void revalidate_conjecture(const Certificate& cert) {
  const MultiGraph& g = cert.graph;
  const Json& w = cert.witness;
  const EdgeSet matching = ids_from_json(g, w.at("matching"));
  expect(is_matching(g, matching), "recorded F is not a matching");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (matching.contains(e)) continue;
    EdgeSet bigger = matching;
    bigger.insert(e);
    expect(!is_matching(g, bigger), "recorded F is not maximal");
  }
  const int nu3 = w.at("nu3").get<int>();
  if (cert.verdict == Verdict::kPass) {
    PartialColoring c = coloring_of(g, w.at("assignment"), 3, "witness coloring");
    expect(c.colored_count() == nu3, "witness size differs from nu3");
    expect(c.uncolored_edges().is_subset_of(matching), "witness leaves an edge outside F uncolored");
  } else {
    expect(!w.at("complements").empty(), "FAIL certificate lists no complements");
    for (const Json& entry : w.at("complements")) {
      PartialColoring c = coloring_of(g, entry.at("assignment"), 3, "complement coloring");
      expect(c.colored_count() == nu3, "complement coloring size differs from nu3");
      const EdgeSet u = ids_from_json(g, entry.at("uncolored"));
      expect(c.uncolored_edges() == u, "recorded complement differs from its coloring");
      expect(!u.is_subset_of(matching), "a recorded complement fits inside F, so the FAIL is wrong");
    }
  }
}

}  // namespace

CanonGraph canon(std::string_view name) {
  if (name == "THETA") return {"THETA", make(2, {{0, 1}, {0, 1}, {0, 1}})};
  if (name == "K4") return {"K4", make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
  if (name == "K33")
    return {"K33", make(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})};
  if (name == "PETERSEN") {
    return {"PETERSEN", make(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
                                  {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}})};
  }
  if (name == "S6") {
    return {"S6", make(6, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 5}, {3, 4}, {3, 4}, {3, 5}, {4, 5}})};
  }
  std::string known;
  for (const auto& n : canon_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown canonical graph '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<std::string> canon_names() { return {"THETA", "K4", "K33", "PETERSEN", "S6"}; }

Certificate check_t1(const MultiGraph& g, const HarnessCaps& caps) {
  return check_complement_matching(g, {.complement_max_n = caps.complement_max_n});
}

Certificate check_t2(const MultiGraph& g, const HarnessCaps& caps) {
  return check_extensions(g, caps, FactorMode::kContain);
}

Certificate check_t3(const MultiGraph& g, const HarnessCaps& caps) {
  return check_extensions(g, caps, FactorMode::kAvoid);
}

Certificate check_t5(const MultiGraph& g) {
  require_cubic(g, "T5 check");
  const NuPair p{nu(g, 2), nu(g, 3)};
  Certificate cert = make_cert(Claim::kT5, g);
  cert.witness = nu_pair_witness(g, p);
  if (p.nu2.value + p.nu3.value < 2 * g.num_vertices()) cert.verdict = Verdict::kFail;
  return cert;
}

Certificate check_bounds(const MultiGraph& g) {
  require_cubic(g, "bounds check");
  const NuPair p{nu(g, 2), nu(g, 3)};
  const int n = g.num_vertices();
  Certificate cert = make_cert(Claim::kBounds, g);
  cert.witness = nu_pair_witness(g, p);
  if (5 * p.nu2.value < 4 * n || 6 * p.nu3.value < 7 * n) cert.verdict = Verdict::kFail;
  return cert;
}

std::vector<Certificate> check_conjecture(const MultiGraph& g, const HarnessCaps& caps) {
  require_cubic(g, "conjecture check");
  if (g.num_vertices() > caps.conjecture_max_n) {
    throw CapExceeded("conjecture check capped at n <= " + std::to_string(caps.conjecture_max_n) +
                      " (n = " + std::to_string(g.num_vertices()) + ")");
  }
  const auto maximal = enumerate_maximal_matchings(g, {.maximal_max_n = caps.conjecture_max_n});
  const auto subgraphs = enumerate_max_3ec_subgraphs(g, {.complement_max_n = caps.conjecture_max_n});
  const int nu3 = g.num_edges() - subgraphs.front().complement.size();
  std::vector<Certificate> out;
  for (const EdgeSet& f : maximal) {
    Certificate cert = make_cert(Claim::kConjecture, g);
    cert.witness["matching"] = ids_to_json(f);
    cert.witness["nu3"] = nu3;
    auto fit = std::find_if(subgraphs.begin(), subgraphs.end(),
                            [&](const MaxColorableSubgraph& s) { return s.complement.is_subset_of(f); });
    if (fit != subgraphs.end()) {
      cert.witness["complement"] = ids_to_json(fit->complement);
      cert.witness["assignment"] = assignment_to_json(fit->witness);
    } else {
      cert.verdict = Verdict::kFail;
      Json all = Json::array();
      for (const auto& s : subgraphs) {
        Json entry;
        entry["uncolored"] = ids_to_json(s.complement);
        entry["assignment"] = assignment_to_json(s.witness);
        all.push_back(std::move(entry));
      }
      cert.witness["complements"] = std::move(all);
    }
    out.push_back(std::move(cert));
  }
  return out;
}

std::vector<Certificate> search_extremal(int max_n, int jobs) {
  if (max_n > kExhaustiveMaxN) throw std::invalid_argument("extremal search is capped at max_n <= 12");
  const auto graphs = enumerate_cubic_up_to(max_n);
  auto certs = parallel_map(graphs, jobs, [](const MultiGraph& g) -> std::optional<Certificate> {
    const NuPair p{nu(g, 2), nu(g, 3)};
    if (p.nu2.value + p.nu3.value != 2 * g.num_vertices()) return std::nullopt;
    Certificate cert = make_cert(Claim::kExtremal, g);
    cert.witness = nu_pair_witness(g, p);
    return cert;
  });
  std::vector<Certificate> out;
  for (auto& c : certs)
    if (c) out.push_back(std::move(*c));
  return out;
}

std::vector<Certificate> search_bound_tight(int max_n, int jobs) {
  if (max_n > kExhaustiveMaxN) throw std::invalid_argument("bound search is capped at max_n <= 12");
  const auto graphs = enumerate_cubic_up_to(max_n);
  auto certs = parallel_map(graphs, jobs, [](const MultiGraph& g) -> std::optional<Certificate> {
    Certificate cert = check_bounds(g);
    if (!cert.witness.at("nu2_bound_tight").get<bool>() && !cert.witness.at("nu3_bound_tight").get<bool>())
      return std::nullopt;
    return cert;
  });
  std::vector<Certificate> out;
  for (auto& c : certs)
    if (c) out.push_back(std::move(*c));
  return out;
}

Revalidation revalidate(const Certificate& cert) {
  try {
    switch (cert.claim) {
      case Claim::kT1:
        revalidate_t1(cert);
        break;
      case Claim::kT2:
        revalidate_extensions(cert, FactorMode::kContain);
        break;
      case Claim::kT3:
        revalidate_extensions(cert, FactorMode::kAvoid);
        break;
      case Claim::kT5:
      case Claim::kBounds:
      case Claim::kExtremal:
        revalidate_nu_pair(cert);
        break;
      case Claim::kConjecture:
        revalidate_conjecture(cert);
        break;
    }
  } catch (const Invalid& bad) {
    return {false, bad.reason};
  } catch (const std::exception& err) {
    return {false, std::string("malformed witness: ") + err.what()};
  }
  return {};
}

int default_jobs() {
  if (const char* env = std::getenv("KEC_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace kec
