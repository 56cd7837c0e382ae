#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "igq/bbw/collections.hpp"
#include "igq/cli/report.hpp"

namespace igq::cli {

namespace {

using bbw::ExtProfile;
using bbw::Space;

bool has_sequence(const Space& s) {
  return s.kind() == Space::Kind::Isotropic || s.param() % 2 == 0;
}

std::string pair_id(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string profile_detail(const ExtProfile& e) {
  return "profile " + e.str() + (e.conclusive ? " conclusive" : " inconclusive") + ", euler " +
         std::to_string(e.euler);
}

class DcatRun {
 public:
  DcatRun(const Space& space, std::vector<CheckResult>& rows)
      : space_(space), prefix_("." + space.name()), rows_(rows) {}

  void guarded(const std::string& claim, const std::string& expected, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rows_.push_back(CheckResult::failure(claim + prefix_, expected, e.what()));
    }
  }

  void lefschetz() {
    const auto lambda = bbw::support_partition(space_);
    std::size_t count = 0;
    for (int l : lambda) count += static_cast<std::size_t>(l);
    const std::string expected = "objects " + std::to_string(count) + ", 0 non-exceptional, 0 violations";
    guarded("lefschetz", expected, [&] {
      const auto r = bbw::verify_collection(space_);
      std::string detail = std::to_string(r.pairs_checked) + " ordered pairs";
      for (const auto& v : r.violations)
        detail += "; Ext(#" + std::to_string(v.from) + ", #" + std::to_string(v.to) + ") = " + v.profile.str();
      rows_.push_back(CheckResult::compare(
          "lefschetz" + prefix_,
          "objects " + std::to_string(r.objects) + ", " + std::to_string(r.non_exceptional.size()) +
              " non-exceptional, " + std::to_string(r.violations.size()) + " violations",
          expected, detail));
      rows_.push_back(CheckResult::compare("lefschetz.serre" + prefix_,
                                           std::to_string(r.serre_mismatches) + " mismatches", "0 mismatches",
                                           "Ext^d(E,F) against Ext^{dim-d}(F,E(-index))"));
      if (space_.kind() == Space::Kind::Isotropic) {
        const std::size_t k = space_.param();
        rows_.push_back(CheckResult::compare("lefschetz.count" + prefix_, std::to_string(r.objects),
                                             std::to_string(2 * k * (k - 1)),
                                             "object count against the cohomology dimension 2k(k-1)"));
      }
    });
  }

  void keyext() {
    if (space_.kind() != Space::Kind::Isotropic) return;
    const int k = space_.param();
    const std::string expected = "{" + std::to_string(2 * k - 3) + ":1}";
    guarded("keyext", expected, [&] {
      const ExtProfile e = bbw::ext_bundles(space_, k - 1, 0, k - 1, 1 - k);
      rows_.push_back(CheckResult::compare("keyext" + prefix_, e.str(), expected,
                                           "Ext(S^{k-1}U*, S^{k-1}U*(1-k)) from " +
                                               bbw::hom_bundle(k - 1, 0, k - 1, 1 - k).str()));
    });
  }

  void residual() {
    if (!has_sequence(space_)) return;
    const int k = bbw::sequence_k(space_);
    const bool isotropic = space_.kind() == Space::Kind::Isotropic;
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) {
        const std::string claim = "residual" + std::string(j < i ? "" : j == i ? ".self" : ".reverse") +
                                  pair_id(i, j);
        // Expected total dimension of Ext(F_i(k-i), F_j(k-j)), or -1 without a claim.
        int expected_total = 0;
        if (i == j) expected_total = 1;
        else if (j < i) expected_total = isotropic && i == j + 1 ? 1 : 0;
        else if (isotropic && i == 1) expected_total = -1;
        const std::string expected = expected_total < 0 ? "no claim" : "total " + std::to_string(expected_total);
        guarded(claim, expected, [&] {
          const ExtProfile e = bbw::ext_f_pair(space_, i, j, k - i, k - j);
          CheckResult row;
          if (expected_total < 0) {
            row = {claim + prefix_, "total " + std::to_string(e.total()), expected, Status::Inconclusive,
                   "informational; " + profile_detail(e)};
          } else if (!e.conclusive) {
            row = {claim + prefix_, "inconclusive", expected, j < i ? Status::Fail : Status::Inconclusive,
                   profile_detail(e)};
          } else {
            row = CheckResult::compare(claim + prefix_, "total " + std::to_string(e.total()), expected,
                                       profile_detail(e));
          }
          rows_.push_back(std::move(row));
        });
      }
    for (int i = 1; i <= k; ++i) {
      const std::string claim = "residual.orthogonality.i=" + std::to_string(i);
      guarded(claim, "all zero", [&] {
        const auto r = bbw::check_f_orthogonality(space_, i);
        std::string bad;
        for (const auto& e : r.entries)
          if (!e.profile.is_zero() || !e.profile.conclusive)
            bad += (bad.empty() ? "" : "; ") + e.object.str() + " -> " + e.profile.str();
        rows_.push_back(CheckResult::compare(claim + prefix_, r.ok() ? "all zero" : bad, "all zero",
                                             std::to_string(r.entries.size()) + " objects in blocks 0.." +
                                                 std::to_string(k - i)));
      });
    }
  }

  void euler() {
    if (!has_sequence(space_)) return;
    const int k = bbw::sequence_k(space_);
    std::string zeros;
    for (int j = 0; j < 2 * k; ++j) zeros += (j ? " " : "") + std::string("0");
    guarded("euler", zeros, [&] {
      std::string sums;
      for (std::int64_t s : bbw::sequence_euler_sums(space_)) sums += (sums.empty() ? "" : " ") + std::to_string(s);
      rows_.push_back(CheckResult::compare("euler" + prefix_, sums, zeros,
                                           "alternating chi over the long exact sequence twisted by 0.." +
                                               std::to_string(2 * k - 1)));
    });
    guarded("euler.serre", "0 mismatches", [&] {
      std::size_t mismatches = 0;
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
          const auto src = bbw::f_complex(i, k, bbw::Side::Right).twisted(k - i);
          const auto dst = bbw::f_complex(j, k, bbw::Side::Left).twisted(k - j);
          if (!bbw::serre_consistent(space_, src, dst)) ++mismatches;
        }
      rows_.push_back(CheckResult::compare("euler.serre" + prefix_, std::to_string(mismatches) + " mismatches",
                                           "0 mismatches", "E1 totals of every F-pair against their Serre partners"));
    });
  }

 private:
  Space space_;
  std::string prefix_;
  std::vector<CheckResult>& rows_;
};

}  // namespace

std::vector<CheckResult> run_dcat_suite(const DcatOptions& opt, Timings* timings) {
  for (const std::string& c : opt.checks)
    if (std::find(kDcatChecks.begin(), kDcatChecks.end(), c) == kDcatChecks.end())
      throw std::invalid_argument("unknown dcat check: " + c);

  std::vector<CheckResult> rows;
  DcatRun run(opt.space, rows);
  const std::vector<std::pair<std::string, std::function<void()>>> steps = {
      {"lefschetz", [&] { run.lefschetz(); }},
      {"keyext", [&] { run.keyext(); }},
      {"residual", [&] { run.residual(); }},
      {"euler", [&] { run.euler(); }}};
  for (const auto& [name, step] : steps) {
    if (!opt.checks.count(name)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    step();
    const auto t1 = std::chrono::steady_clock::now();
    if (timings)
      timings->emplace_back(name + "." + opt.space.name(),
                            std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return rows;
}

}  // namespace igq::cli
