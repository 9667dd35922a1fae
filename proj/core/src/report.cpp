#include "lietype/report.hpp"

#include <json.hpp>

namespace lietype {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_ordered_json(const VerificationReport& r) {
  ordered_json j;
  j["command"] = r.command;
  if (!r.statement.empty()) j["statement"] = r.statement;
  j["parameters"] = ordered_json::object();
  for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
  if (!r.info.empty()) {
    j["info"] = ordered_json::object();
    for (const auto& [k, v] : r.info) j["info"][k] = v;
  }
  j["claims"] = ordered_json::array();
  for (const Claim& c : r.claims) {
    ordered_json jc;
    jc["description"] = c.description;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["pass"] = c.pass;
    j["claims"].push_back(jc);
  }
  j["pass"] = r.passed();
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  return to_ordered_json(r).dump(2) + "\n";
}

std::string reports_to_json(
    const std::string& command,
    const std::vector<std::pair<std::string, std::string>>& parameters,
    const std::vector<VerificationReport>& reports) {
  ordered_json j;
  j["command"] = command;
  j["parameters"] = ordered_json::object();
  for (const auto& [k, v] : parameters) j["parameters"][k] = v;
  j["claims"] = ordered_json::array();
  bool all = true;
  for (const VerificationReport& r : reports) {
    ordered_json jc;
    jc["description"] = r.command + ": " + r.statement;
    jc["expected"] = "pass";
    jc["computed"] = r.passed() ? "pass" : "fail";
    jc["pass"] = r.passed();
    j["claims"].push_back(jc);
    all = all && r.passed();
  }
  j["reports"] = ordered_json::array();
  for (const VerificationReport& r : reports)
    j["reports"].push_back(to_ordered_json(r));
  j["pass"] = all;
  return j.dump(2) + "\n";
}

std::string report_to_table(const VerificationReport& r) {
  std::string s;
  s += "command: " + r.command + "\n";
  if (!r.statement.empty()) s += "checks:  " + r.statement + "\n";
  for (const auto& [k, v] : r.parameters) s += "  " + k + " = " + v + "\n";
  if (!r.info.empty()) {
    s += "info:\n";
    for (const auto& [k, v] : r.info) s += "  " + k + ": " + v + "\n";
  }
  s += "claims:\n";
  for (const Claim& c : r.claims) {
    s += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " +
         c.description + " (expected " + c.expected + ", computed " +
         c.computed + ")\n";
  }
  s += std::string("result: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  return s;
}

std::string reports_to_table(const std::vector<VerificationReport>& reports) {
  std::string s;
  bool all = true;
  for (const VerificationReport& r : reports) {
    s += report_to_table(r) + "\n";
    all = all && r.passed();
  }
  s += std::string("overall: ") + (all ? "PASS" : "FAIL") + "\n";
  return s;
}

}  // namespace lietype
