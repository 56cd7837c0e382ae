#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "igq/bbw/weights.hpp"
#include "igq/presentations/presentation.hpp"

namespace igq::cli {

enum class Status { Pass, Fail, Inconclusive };
std::string status_name(Status s);

struct CheckResult {
  std::string claim_id;
  std::string computed;
  std::string expected;
  Status status = Status::Fail;
  std::string detail;

  /// PASS iff computed == expected.
  static CheckResult compare(std::string claim_id, std::string computed, std::string expected,
                             std::string detail = {});
  static CheckResult failure(std::string claim_id, std::string expected, std::string error);
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
};
Summary summarize(const std::vector<CheckResult>& rows);

/// Per-check wall-clock milliseconds, kept out of the rows.
using Timings = std::vector<std::pair<std::string, double>>;

/// Ordered (name, value) pairs echoed back as the `invocation` object.
using Invocation = std::vector<std::pair<std::string, std::string>>;

std::string to_json(const Invocation& invocation, const std::vector<CheckResult>& rows);
std::string to_markdown(const Invocation& invocation, const std::vector<CheckResult>& rows);
std::string timings_json(const Timings& timings);

extern const char* const kToolVersion;

inline const std::vector<std::string> kQhChecks = {"dims",  "homomorphism", "spectrum", "zcount",
                                                   "lemma", "regularity",   "unfolding"};
inline const std::vector<std::string> kDcatChecks = {"lefschetz", "keyext", "residual", "euler"};

struct QhOptions {
  int n = 3;
  std::set<std::string> checks;
  presentations::QMode q_mode = presentations::QMode::Specialize1;
  std::optional<std::filesystem::path> dump_dir;
};

/// Runs the selected checks for one n in the fixed order of kQhChecks.
/// Failures of individual computations become FAIL rows.
std::vector<CheckResult> run_qh_suite(const QhOptions& options, Timings* timings = nullptr);

struct DcatOptions {
  bbw::Space space = bbw::Space::isotropic(2);
  std::set<std::string> checks;
};

std::vector<CheckResult> run_dcat_suite(const DcatOptions& options, Timings* timings = nullptr);

}  // namespace igq::cli
