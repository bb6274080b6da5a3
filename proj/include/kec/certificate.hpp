#ifndef KEC_CERTIFICATE_HPP
#define KEC_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kec/graph.hpp"

namespace kec {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolkitVersion = "kec 1.0.0";

enum class Claim { kT1, kT2, kT3, kT5, kBounds, kConjecture, kExtremal };
enum class Verdict { kPass, kFail, kViolationFound };

std::string_view to_string(Claim c);
std::string_view to_string(Verdict v);
std::optional<Claim> claim_from_string(std::string_view s);
std::optional<Verdict> verdict_from_string(std::string_view s);

// Self-contained record of one verification outcome. Witness edge ids refer
// to the embedded graph in its own edge order.
struct Certificate {
  Claim claim = Claim::kT1;
  MultiGraph graph;
  Verdict verdict = Verdict::kPass;
  Json witness = Json::object();
  std::string version{kToolkitVersion};

  // {"claim","graph","hash","verdict","witness","version"} in that order.
  Json to_json() const;
  static Certificate from_json(const Json& j);
};

Json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const Json& j);
std::string hash_to_hex(std::uint64_t h);

}  // namespace kec

#endif  // KEC_CERTIFICATE_HPP
