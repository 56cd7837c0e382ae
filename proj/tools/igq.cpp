#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "igq/cli/report.hpp"

namespace {

using igq::cli::CheckResult;
using igq::cli::Invocation;

std::set<std::string> parse_checks(const std::string& list, const std::vector<std::string>& all) {
  if (list == "all") return {all.begin(), all.end()};
  std::set<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.insert(item);
  return out;
}

std::string join(const std::set<std::string>& checks, const std::vector<std::string>& order) {
  std::string s;
  for (const std::string& c : order)
    if (checks.count(c)) s += (s.empty() ? "" : ",") + c;
  return s;
}

int emit(const std::string& format, const Invocation& inv, const std::vector<CheckResult>& rows,
         const std::string& timings_file, const igq::cli::Timings& timings) {
  std::cout << (format == "md" ? igq::cli::to_markdown(inv, rows) : igq::cli::to_json(inv, rows));
  if (!timings_file.empty()) std::ofstream(timings_file) << igq::cli::timings_json(timings);
  return igq::cli::summarize(rows).fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quantum cohomology and derived-category claims for IG(2,2n)"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string timings_file;
  std::string check_list = "all";

  auto* qh = app.add_subcommand("qh", "ring presentations, spectrum, deformation and unfolding checks");
  int n = 3;
  int max_n = 5;
  std::string q_mode = "1";
  std::string dump_dir;
  qh->add_option("--n", n, "IG(2,2n) parameter")->required();
  qh->add_option("--check", check_list, "comma-separated subset of dims,homomorphism,spectrum,zcount,"
                                        "lemma,regularity,unfolding, or all");
  qh->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));
  qh->add_option("--dump", dump_dir, "directory for presentations and Groebner bases");
  qh->add_option("--q-mode", q_mode)->check(CLI::IsMember({"1", "symbolic"}));
  qh->add_option("--max-n", max_n, "upper bound accepted for --n");
  qh->add_option("--timings", timings_file, "write per-check milliseconds to this file");

  auto* dcat = app.add_subcommand("dcat", "Borel-Bott-Weil and exceptional collection checks");
  int k = 2;
  int max_k = 4;
  std::string space = "igr";
  dcat->add_option("--k", k, "G(2,2k), G(2,2k+1) or IG(2,2k) parameter")->required();
  dcat->add_option("--space", space)->check(CLI::IsMember({"gr", "gr-odd", "igr"}));
  dcat->add_option("--check", check_list, "comma-separated subset of lefschetz,keyext,residual,euler, or all");
  dcat->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));
  dcat->add_option("--max-k", max_k, "upper bound accepted for --k");
  dcat->add_option("--timings", timings_file, "write per-check milliseconds to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    igq::cli::Timings timings;
    if (qh->parsed()) {
      if (n < 2 || n > max_n) throw std::invalid_argument("--n must lie in [2, " + std::to_string(max_n) + "]");
      igq::cli::QhOptions opt;
      opt.n = n;
      opt.checks = parse_checks(check_list, igq::cli::kQhChecks);
      opt.q_mode = q_mode == "symbolic" ? igq::presentations::QMode::Symbolic
                                        : igq::presentations::QMode::Specialize1;
      if (!dump_dir.empty()) opt.dump_dir = dump_dir;
      const auto rows = igq::cli::run_qh_suite(opt, &timings);
      Invocation inv = {{"command", "qh"},
                        {"n", std::to_string(n)},
                        {"checks", join(opt.checks, igq::cli::kQhChecks)},
                        {"q_mode", q_mode}};
      return emit(format, inv, rows, timings_file, timings);
    }
    if (k < 2 || k > max_k) throw std::invalid_argument("--k must lie in [2, " + std::to_string(max_k) + "]");
    igq::cli::DcatOptions opt;
    opt.space = space == "igr"  ? igq::bbw::Space::isotropic(k)
                : space == "gr" ? igq::bbw::Space::grassmannian(2 * k)
                                : igq::bbw::Space::grassmannian(2 * k + 1);
    opt.checks = parse_checks(check_list, igq::cli::kDcatChecks);
    const auto rows = igq::cli::run_dcat_suite(opt, &timings);
    Invocation inv = {{"command", "dcat"},
                      {"k", std::to_string(k)},
                      {"space", space},
                      {"checks", join(opt.checks, igq::cli::kDcatChecks)}};
    return emit(format, inv, rows, timings_file, timings);
  } catch (const std::exception& e) {
    std::cerr << "igq: " << e.what() << "\n";
    return 2;
  }
}
