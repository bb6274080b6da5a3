#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "kec/certificate.hpp"
#include "kec/coloring.hpp"
#include "kec/generate.hpp"
#include "kec/graph_io.hpp"
#include "kec/kempe.hpp"
#include "kec/matching.hpp"
#include "kec/verify.hpp"

namespace kec::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string input;
  std::string canon;
  int all_n = 0;
  std::string format = "edgelist";
};

void add_source_options(CLI::App* cmd, Source& src, bool allow_all_n) {
  cmd->add_option("--input", src.input, "graph file (edge-list records or graph6 lines; '-' for stdin)");
  cmd->add_option("--canon", src.canon, "canonical graph: THETA, K4, K33, PETERSEN, S6");
  if (allow_all_n)
    cmd->add_option("--all-n", src.all_n, "every connected cubic multigraph with n <= N (N <= 12)");
  cmd->add_option("--format", src.format, "input format")->check(CLI::IsMember({"edgelist", "graph6"}));
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

void require_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw UsageError("cannot open " + path);
}

std::vector<MultiGraph> load(const Source& src) {
  const int given = !src.input.empty() + !src.canon.empty() + (src.all_n != 0);
  if (given != 1) throw UsageError("exactly one of --input, --canon, --all-n is required");
  if (!src.canon.empty()) return {canon(src.canon).graph};
  if (src.all_n != 0) {
    if (src.all_n < 2 || src.all_n > kExhaustiveMaxN)
      throw UsageError("--all-n must be in 2.." + std::to_string(kExhaustiveMaxN));
    return enumerate_cubic_up_to(src.all_n);
  }
  const GraphFormat fmt = src.format == "graph6" ? GraphFormat::kGraph6 : GraphFormat::kEdgeList;
  if (src.input == "-") {
    const std::string text = slurp(std::cin);
    return fmt == GraphFormat::kGraph6 ? parse_graph6_lines(text) : parse_edge_lists(text);
  }
  require_file(src.input);
  return read_graphs(src.input, fmt);
}

MultiGraph load_one(const Source& src) {
  auto graphs = load(src);
  if (graphs.size() != 1) throw UsageError("expected exactly one graph, got " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- nu ---------------------------------------------------------------------

int cmd_nu(const Source& src, int k, std::ostream& out) {
  const MultiGraph g = load_one(src);
  out << nu(g, k).to_json().dump() << '\n';
  return kOk;
}

// --- extend -----------------------------------------------------------------

// Factor edges given by endpoints; parallel copies take the lowest unused id.
OneFactor factor_from_file(const MultiGraph& g, const std::string& path) {
  require_file(path);
  const MultiGraph fg = read_graph(path, GraphFormat::kEdgeList);
  if (fg.num_vertices() != g.num_vertices())
    throw UsageError("factor file has " + std::to_string(fg.num_vertices()) + " vertices, graph has " +
                     std::to_string(g.num_vertices()));
  EdgeSet ids = g.empty_edge_set();
  for (const auto& [a, b] : fg.edge_list()) {
    std::optional<EdgeId> pick;
    for (EdgeId e : g.incident(a)) {
      if (g.other_end(e, a) == b && !ids.contains(e) && (!pick || e < *pick)) pick = e;
    }
    if (!pick) throw UsageError("factor edge (" + std::to_string(a) + "," + std::to_string(b) + ") is not in the graph");
    ids.insert(*pick);
  }
  try {
    return OneFactor::from(g, ids);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("--factor: ") + e.what());
  }
}

int cmd_extend(const Source& src, const std::string& mode, const std::string& factor_path, std::ostream& out,
               std::ostream& err) {
  const MultiGraph g = load_one(src);
  if (!is_cubic(g)) throw UsageError("extend requires a cubic graph");
  std::optional<OneFactor> f;
  if (!factor_path.empty()) {
    f = factor_from_file(g, factor_path);
  } else {
    f = find_one_factor(g);
    if (!f) {
      const EdgeSet m = maximum_matching(g);
      Json j;
      j["status"] = "NO-1-FACTOR";
      j["graph"] = graph_to_json(g);
      j["maximum_matching"] = ids_to_json(m);
      j["maximum_matching_size"] = m.size();
      j["required"] = g.num_vertices() / 2;
      out << j.dump() << '\n';
      err << "no 1-factor: maximum matching has " << m.size() << " edges, " << g.num_vertices() / 2
          << " needed\n";
      return kNoOneFactor;
    }
  }
  const bool contain = mode == "contain";
  Json j;
  j["mode"] = mode;
  j["graph"] = graph_to_json(g);
  j["factor"] = ids_to_json(f->edges());
  try {
    const ExtensionResult r = contain ? extend_one_factor(g, *f) : extend_avoiding(g, *f);
    const int nu3 = nu(g, 3).value;
    Json report;
    report["proper"] = validate(r.coloring);
    report["colored"] = r.coloring.colored_count();
    report["nu3"] = nu3;
    report["maximum"] = r.coloring.colored_count() == nu3;
    bool ok = report["proper"].get<bool>() && report["maximum"].get<bool>();
    if (contain) {
      const bool in = f->edges().is_subset_of(r.coloring.colored_edges());
      report["factor_in_H"] = in;
      ok = ok && in;
    } else {
      const bool unc = r.coloring.uncolored_edges().is_subset_of(f->edges());
      const bool two = complement_two_factor(g, *f).edges().is_subset_of(r.coloring.colored_edges());
      report["uncolored_in_factor"] = unc;
      report["two_factor_in_H"] = two;
      ok = ok && unc && two;
    }
    j["status"] = ok ? "OK" : "INVALID";
    j["coloring"] = coloring_to_json(r.coloring);
    j["iterations"] = r.iterations;
    j["progress"] = r.progress;
    j["validation"] = std::move(report);
    out << j.dump() << '\n';
    if (!ok) {
      err << "extension result failed validation\n";
      return kFailure;
    }
    err << mode << ": |H| = " << r.coloring.colored_count() << " after " << r.iterations << " iterations\n";
    return kOk;
  } catch (const ClassificationViolated& e) {
    j["status"] = "CLASSIFICATION-VIOLATED";
    j["reason"] = e.what();
    j["trace"] = e.trace();
    out << j.dump() << '\n';
    err << "classification violated: " << e.what() << '\n';
    return kViolation;
  } catch (const ExtensionFailure& e) {
    j["status"] = "EXTENSION-FAILURE";
    j["reason"] = e.what();
    j["trace"] = e.dump();
    out << j.dump() << '\n';
    err << "extension failure: " << e.what() << '\n';
    return kFailure;
  }
}

// --- verify / search --------------------------------------------------------

struct Tally {
  std::map<Verdict, int> counts;
  int certificates = 0;
};

Tally emit(const std::vector<std::vector<Certificate>>& batches, std::ostream& out) {
  Tally t;
  for (const auto& batch : batches) {
    for (const Certificate& c : batch) {
      out << c.to_json().dump() << '\n';
      ++t.counts[c.verdict];
      ++t.certificates;
    }
  }
  return t;
}

void summarize(std::ostream& err, const std::string& what, std::size_t graphs, const Tally& t, double secs) {
  err << what << ": graphs=" << graphs << " certificates=" << t.certificates;
  for (Verdict v : {Verdict::kPass, Verdict::kFail, Verdict::kViolationFound}) {
    auto it = t.counts.find(v);
    err << ' ' << to_string(v) << '=' << (it == t.counts.end() ? 0 : it->second);
  }
  err << " wall=" << std::fixed << secs << "s\n";
}

int cmd_verify(const Source& src, const std::string& claim, int jobs, const HarnessCaps& caps, std::ostream& out,
               std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto graphs = load(src);
  for (const MultiGraph& g : graphs)
    if (!is_cubic(g)) throw UsageError("verify requires cubic graphs");
  auto batches = parallel_map(graphs, jobs, [&](const MultiGraph& g) -> std::vector<Certificate> {
    if (claim == "t1") return {check_t1(g, caps)};
    if (claim == "t2") return {check_t2(g, caps)};
    if (claim == "t3") return {check_t3(g, caps)};
    if (claim == "t5") return {check_t5(g)};
    if (claim == "bounds") return {check_bounds(g)};
    return check_conjecture(g, caps);
  });
  const Tally t = emit(batches, out);
  summarize(err, "verify " + claim, graphs.size(), t, seconds_since(t0));
  const int fails = t.counts.count(Verdict::kFail) ? t.counts.at(Verdict::kFail) : 0;
  const int viol = t.counts.count(Verdict::kViolationFound) ? t.counts.at(Verdict::kViolationFound) : 0;
  if (viol == 0 && fails == 0) return kOk;
  if (claim == "conjecture" && viol == 0) {
    err << "conjecture: " << fails << " FAIL certificate(s) recorded as findings\n";
    return kConjectureFinding;
  }
  return kFailure;
}

int cmd_search(bool extremal, bool bound_tight, int max_n, int jobs, std::ostream& out, std::ostream& err) {
  if (extremal == bound_tight) throw UsageError("exactly one of --extremal, --bound-tight is required");
  if (max_n < 2 || max_n > kExhaustiveMaxN)
    throw UsageError("--max-n must be in 2.." + std::to_string(kExhaustiveMaxN));
  const auto t0 = std::chrono::steady_clock::now();
  auto found = extremal ? search_extremal(max_n, jobs) : search_bound_tight(max_n, jobs);
  std::size_t graphs = 0;
  for (int n = 2; n <= max_n; n += 2) graphs += enumerate_cubic({.n = n}).size();
  const Tally t = emit({found}, out);
  summarize(err, extremal ? "search extremal" : "search bound-tight", graphs, t, seconds_since(t0));
  return kOk;
}

// --- gen --------------------------------------------------------------------

int cmd_gen(int n, bool all, std::optional<int> count, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (all == count.has_value()) throw UsageError("exactly one of --all, --count is required");
  GenConfig cfg{.n = n, .mode = all ? GenMode::kExhaustive : GenMode::kRandom, .count = count.value_or(0), .seed = seed};
  validate_config(cfg);
  const auto graphs = all ? enumerate_cubic(cfg) : random_cubic(cfg);
  for (std::size_t i = 0; i < graphs.size(); ++i) out << "# " << i << '\n' << write_edge_list(graphs[i]);
  err << "gen: " << graphs.size() << " graph(s) on " << n << " vertices\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum k-edge-colorable subgraphs of cubic multigraphs", "kec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolkitVersion));

  Source src;
  int jobs = default_jobs();

  int k = 3;
  auto* nu_cmd = app.add_subcommand("nu", "exact nu_k with a witness coloring");
  nu_cmd->add_option("--k", k, "number of colors")->required()->check(CLI::IsMember({1, 2, 3}));
  add_source_options(nu_cmd, src, false);

  std::string mode;
  std::string factor;
  auto* ext_cmd = app.add_subcommand("extend", "maximum 3-edge-colorable subgraph relative to a 1-factor");
  ext_cmd->add_option("--mode", mode, "contain: 1-factor inside H; avoid: uncolored edges inside the 1-factor")
      ->required()
      ->check(CLI::IsMember({"contain", "avoid"}));
  ext_cmd->add_option("--factor", factor, "edge-list of a perfect matching (default: one is found)");
  add_source_options(ext_cmd, src, false);

  std::string claim;
  auto* ver_cmd = app.add_subcommand("verify", "run a checker and stream certificates");
  ver_cmd->add_option("--claim", claim, "t1 | t2 | t3 | t5 | bounds | conjecture")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "t5", "bounds", "conjecture"}));
  ver_cmd->add_option("--jobs", jobs, "worker threads (default: KEC_JOBS or hardware concurrency)")
      ->check(CLI::PositiveNumber);
  HarnessCaps caps;
  ver_cmd->add_option("--conjecture-max-n", caps.conjecture_max_n, "largest n accepted by the conjecture check")
      ->capture_default_str()
      ->check(CLI::Range(2, kExhaustiveMaxN));
  add_source_options(ver_cmd, src, true);

  int gen_n = 0;
  bool gen_all = false;
  std::optional<int> gen_count;
  std::uint64_t gen_seed = 0;
  std::string gen_format = "edgelist";
  auto* gen_cmd = app.add_subcommand("gen", "generate cubic multigraphs as '#'-separated edge-list records");
  gen_cmd->add_option("--n", gen_n, "number of vertices")->required();
  gen_cmd->add_flag("--all", gen_all, "every connected graph up to isomorphism (n <= 12)");
  gen_cmd->add_option("--count", gen_count, "random samples")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen_seed, "random seed");
  gen_cmd->add_option("--format", gen_format, "output format")->check(CLI::IsMember({"edgelist"}));

  bool extremal = false;
  bool bound_tight = false;
  int max_n = 0;
  auto* search_cmd = app.add_subcommand("search", "exhaustive search for equality cases");
  search_cmd->add_flag("--extremal", extremal, "graphs with nu2 + nu3 = 2n");
  search_cmd->add_flag("--bound-tight", bound_tight, "graphs with 5 nu2 = 4n or 6 nu3 = 7n");
  search_cmd->add_option("--max-n", max_n, "largest order (<= 12)")->required();
  search_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*nu_cmd) return cmd_nu(src, k, out);
    if (*ext_cmd) return cmd_extend(src, mode, factor, out, err);
    if (*ver_cmd) return cmd_verify(src, claim, jobs, caps, out, err);
    if (*gen_cmd) return cmd_gen(gen_n, gen_all, gen_count, gen_seed, out, err);
    if (*search_cmd) return cmd_search(extremal, bound_tight, max_n, jobs, out, err);
  } catch (const ParseError& e) {
    err << "error: input line " << e.line() << ", column " << e.column() << ": " << e.message() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace kec::cli
