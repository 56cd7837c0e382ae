#include "igq/cli/report.hpp"

#include <json.hpp>

namespace igq::cli {

const char* const kToolVersion = "igq 1.0.0";

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

CheckResult CheckResult::compare(std::string claim_id, std::string computed, std::string expected,
                                 std::string detail) {
  Status s = computed == expected ? Status::Pass : Status::Fail;
  return {std::move(claim_id), std::move(computed), std::move(expected), s, std::move(detail)};
}

CheckResult CheckResult::failure(std::string claim_id, std::string expected, std::string error) {
  return {std::move(claim_id), "error", std::move(expected), Status::Fail, std::move(error)};
}

Summary summarize(const std::vector<CheckResult>& rows) {
  Summary s;
  for (const CheckResult& r : rows) {
    if (r.status == Status::Pass) ++s.pass;
    else if (r.status == Status::Fail) ++s.fail;
    else ++s.inconclusive;
  }
  return s;
}

std::string to_json(const Invocation& invocation, const std::vector<CheckResult>& rows) {
  nlohmann::ordered_json doc;
  doc["tool_version"] = kToolVersion;
  nlohmann::ordered_json inv = nlohmann::ordered_json::object();
  for (const auto& [k, v] : invocation) inv[k] = v;
  doc["invocation"] = inv;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckResult& r : rows) {
    nlohmann::ordered_json row;
    row["claim_id"] = r.claim_id;
    row["computed"] = r.computed;
    row["expected"] = r.expected;
    row["status"] = status_name(r.status);
    row["detail"] = r.detail;
    arr.push_back(std::move(row));
  }
  doc["rows"] = std::move(arr);
  const Summary s = summarize(rows);
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}};
  return doc.dump(2) + "\n";
}

namespace {

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += "<br>";
    else out += c;
  }
  return out;
}

}  // namespace

std::string to_markdown(const Invocation& invocation, const std::vector<CheckResult>& rows) {
  std::string out = "# " + std::string(kToolVersion) + "\n\n";
  for (const auto& [k, v] : invocation) out += "- " + k + ": `" + v + "`\n";
  out += "\n| claim | computed | expected | status | detail |\n|---|---|---|---|---|\n";
  for (const CheckResult& r : rows)
    out += "| " + md_cell(r.claim_id) + " | " + md_cell(r.computed) + " | " + md_cell(r.expected) +
           " | " + status_name(r.status) + " | " + md_cell(r.detail) + " |\n";
  const Summary s = summarize(rows);
  out += "\n**pass** " + std::to_string(s.pass) + ", **fail** " + std::to_string(s.fail) +
         ", **inconclusive** " + std::to_string(s.inconclusive) + "\n";
  return out;
}

std::string timings_json(const Timings& timings) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [k, ms] : timings) doc[k] = ms;
  return doc.dump(2) + "\n";
}

}  // namespace igq::cli
