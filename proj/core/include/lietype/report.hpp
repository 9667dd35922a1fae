#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lietype {

// One verified statement: pass iff expected == computed.
struct Claim {
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

// Machine-readable result of one verification run.  Serialization is
// deterministic (insertion order, fixed formatting); elapsed_ms is kept
// out of the stable document so repeated runs are byte-identical.
struct VerificationReport {
  std::string command;
  std::string statement;  // the mathematical statement being checked
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> info;
  std::vector<Claim> claims;
  double elapsed_ms = 0.0;

  void param(const std::string& key, const std::string& value) {
    parameters.emplace_back(key, value);
  }
  void note(const std::string& key, const std::string& value) {
    info.emplace_back(key, value);
  }
  void claim(const std::string& description, const std::string& expected,
             const std::string& computed) {
    claims.push_back({description, expected, computed, expected == computed});
  }
  void claim_true(const std::string& description, bool computed) {
    claim(description, "true", computed ? "true" : "false");
  }

  bool passed() const {
    for (const Claim& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

// Stable JSON document (UTF-8, insertion-ordered keys, 2-space indent,
// trailing newline).
std::string report_to_json(const VerificationReport& r);

// Combined document for a batch run: one summary claim per report plus the
// full sub-reports.
std::string reports_to_json(
    const std::string& command,
    const std::vector<std::pair<std::string, std::string>>& parameters,
    const std::vector<VerificationReport>& reports);

// Human-readable rendering.
std::string report_to_table(const VerificationReport& r);
std::string reports_to_table(const std::vector<VerificationReport>& reports);

}  // namespace lietype
