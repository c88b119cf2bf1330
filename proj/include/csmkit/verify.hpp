#pragma once

// Exhaustive identity checks and conjecture sweeps over a whole Weyl group.

#include <string>
#include <string_view>
#include <vector>

#include "csmkit/sweeps.hpp"
#include "json.hpp"

namespace csmkit {

struct SweepReport {
  std::string identity;
  nlohmann::ordered_json scope;
  long checked = 0;
  std::vector<nlohmann::ordered_json> violations;
  long elapsed_ms = 0;
  std::string version = CSMKIT_VERSION;
  bool conjecture = false;
  // Extra per-sweep data (pair counts, tables).
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const { return violations.empty(); }
  std::string status() const { return passed() ? "pass" : "fail"; }
};

const std::vector<std::string>& identity_names();
const std::vector<std::string>& conjecture_names();

// Throws InvalidInput for unknown names or identities that need type A.
SweepReport verify_identity(std::string_view identity, const WeylGroup& group, Exec exec);
SweepReport check_conjecture(std::string_view name, const WeylGroup& group, Exec exec);

nlohmann::ordered_json to_json(const SweepReport& report);
std::string to_csv(const SweepReport& report);
std::string to_markdown(const SweepReport& report);

}  // namespace csmkit
