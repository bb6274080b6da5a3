#include "kec/certificate.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace kec {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 7> kClaims{{
    {Claim::kT1, "T1"},
    {Claim::kT2, "T2"},
    {Claim::kT3, "T3"},
    {Claim::kT5, "T5"},
    {Claim::kBounds, "BOUNDS"},
    {Claim::kConjecture, "CONJ"},
    {Claim::kExtremal, "EXTREMAL"},
}};

constexpr std::array<std::pair<Verdict, std::string_view>, 3> kVerdicts{{
    {Verdict::kPass, "PASS"},
    {Verdict::kFail, "FAIL"},
    {Verdict::kViolationFound, "VIOLATION-FOUND"},
}};

}  // namespace

std::string_view to_string(Claim c) {
  for (auto [k, s] : kClaims)
    if (k == c) return s;
  return "?";
}

std::string_view to_string(Verdict v) {
  for (auto [k, s] : kVerdicts)
    if (k == v) return s;
  return "?";
}

std::optional<Claim> claim_from_string(std::string_view s) {
  for (auto [k, name] : kClaims)
    if (name == s) return k;
  return std::nullopt;
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
  for (auto [k, name] : kVerdicts)
    if (name == s) return k;
  return std::nullopt;
}

std::string hash_to_hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json graph_to_json(const MultiGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edge_list()) edges.push_back({u, v});
  Json j;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["edges"] = std::move(edges);
  return j;
}

MultiGraph graph_from_json(const Json& j) {
  std::vector<Endpoints> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  MultiGraph g = MultiGraph::build(j.at("n").get<int>(), edges);
  if (j.contains("m") && j.at("m").get<int>() != g.num_edges()) throw std::runtime_error("graph m does not match edges");
  return g;
}

Json Certificate::to_json() const {
  Json j;
  j["claim"] = std::string(to_string(claim));
  j["graph"] = graph_to_json(graph);
  j["hash"] = hash_to_hex(invariant_hash(graph));
  j["verdict"] = std::string(to_string(verdict));
  j["witness"] = witness;
  j["version"] = version;
  return j;
}

Certificate Certificate::from_json(const Json& j) {
  Certificate c;
  auto claim = claim_from_string(j.at("claim").get<std::string>());
  auto verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (!claim) throw std::runtime_error("unknown claim in certificate");
  if (!verdict) throw std::runtime_error("unknown verdict in certificate");
  c.claim = *claim;
  c.verdict = *verdict;
  c.graph = graph_from_json(j.at("graph"));
  if (j.at("hash").get<std::string>() != hash_to_hex(invariant_hash(c.graph)))
    throw std::runtime_error("certificate hash does not match its graph");
  c.witness = j.at("witness");
  c.version = j.at("version").get<std::string>();
  return c;
}

}  // namespace kec
