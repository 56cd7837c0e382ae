#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>

#include "igq/algebra/groebner.hpp"
#include "igq/cli/report.hpp"
#include "igq/deformation/first_order.hpp"
#include "igq/presentations/spectrum.hpp"
#include "igq/unfolding/milnor.hpp"

namespace igq::cli {

namespace {

using presentations::PresentationSpec;
using presentations::QMode;
using presentations::Variant;

constexpr Variant kVariants[] = {Variant::ClassicalI, Variant::ClassicalII, Variant::QuantumI,
                                 Variant::QuantumII};

std::string lower(std::string s) {
  for (char& c : s) {
    if (c == '_') c = '-';
    else c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

std::string tuple_str(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  for (std::size_t x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

class QhRun {
 public:
  QhRun(const QhOptions& opt, std::vector<CheckResult>& rows) : opt_(opt), n_(opt.n), rows_(rows) {}

  void guarded(const std::string& claim, const std::string& expected, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rows_.push_back(CheckResult::failure(claim + suffix(), expected, e.what()));
    }
  }

  std::string suffix() const { return ".n=" + std::to_string(n_); }

  void dims() {
    const std::size_t expected = 2 * n_ * (n_ - 1);
    for (Variant v : kVariants) {
      const std::string claim = "dims." + lower(presentations::variant_name(v));
      guarded(claim, std::to_string(expected), [&] {
        const PresentationSpec spec{n_, v, QMode::Specialize1};
        const auto ideal = presentations::build_presentation(spec);
        const auto gb = algebra::buchberger(ideal);
        const auto dim = algebra::quotient_dimension(gb);
        rows_.push_back(CheckResult::compare(claim + suffix(), dim ? std::to_string(*dim) : "infinite",
                                             std::to_string(expected),
                                             std::to_string(ideal.generators().size()) + " generators, " +
                                                 std::to_string(gb.size()) + " basis elements"));
        dump(spec, ideal, gb);
      });
      if (opt_.q_mode == QMode::Symbolic) homogeneity(v);
    }
  }

  void homogeneity(Variant v) {
    const std::string claim = "homogeneity." + lower(presentations::variant_name(v));
    guarded(claim, "weighted-homogeneous", [&] {
      const PresentationSpec spec{n_, v, QMode::Symbolic};
      const auto ideal = presentations::build_presentation(spec);
      std::string computed = "weighted-homogeneous";
      std::string detail = "degrees";
      for (const auto& g : ideal.generators()) {
        detail += ' ' + std::to_string(g.weighted_degree());
        if (!g.is_weighted_homogeneous()) computed = "inhomogeneous: " + g.str();
      }
      rows_.push_back(CheckResult::compare(claim + suffix(), computed, "weighted-homogeneous", detail));
      dump(spec, ideal, std::nullopt);
    });
  }

  void homomorphism() {
    for (bool quantum : {false, true}) {
      const std::string claim = quantum ? "homomorphism.quantum" : "homomorphism.classical";
      const std::size_t dim = 2 * n_ * (n_ - 1);
      const std::string expected = "images vanish, dims " + std::to_string(dim) + "/" + std::to_string(dim);
      guarded(claim, expected, [&] {
        const auto r = presentations::verify_homomorphism(n_, quantum);
        const std::string computed = std::string(r.ok ? "images vanish" : "images survive") + ", dims " +
                                     std::to_string(r.dim_one) + "/" + std::to_string(r.dim_two);
        std::string detail = "lambda=" + std::to_string(r.lambda);
        rows_.push_back(CheckResult::compare(claim + suffix(), computed, expected, detail));
      });
    }
  }

  const presentations::SpectrumReport& spectrum_report() {
    if (!spectrum_) spectrum_ = presentations::decompose_spectrum(n_);
    return *spectrum_;
  }

  std::string expected_spectrum() const {
    const std::size_t n = n_;
    const std::size_t off = (2 * n - 1) * (n - 1);
    if (n == 2) return tuple_str({4, 0, 1, 3, 3});
    return tuple_str({2 * n * (n - 1), 1, n - 1, off, off});
  }

  void spectrum() {
    guarded("spectrum", expected_spectrum(), [&] {
      const auto& s = spectrum_report();
      std::string coeffs;
      for (long c : s.projection_coefficients) coeffs += (coeffs.empty() ? "" : ",") + std::to_string(c);
      rows_.push_back(CheckResult::compare(
          "spectrum" + suffix(),
          tuple_str({s.total_dim, s.tangent_dim_origin, s.local_length_origin, s.offorigin_dim,
                     s.offorigin_distinct_points}),
          expected_spectrum(),
          "projection (" + coeffs + ") attempts=" + std::to_string(s.projection_attempts) +
              (s.projection_verified ? " verified" : " unverified")));
      rows_.push_back(CheckResult::compare("spectrum.origin-length" + suffix(),
                                           std::to_string(s.origin_length_direct),
                                           std::to_string(s.total_dim - s.offorigin_dim),
                                           "length of Q[x]/(I + (x_i^N)) against total - off-origin"));
    });
  }

  void zcount() {
    const std::size_t expected = (n_ - 1) * (2 * n_ - 1);
    guarded("zcount", std::to_string(expected), [&] {
      const auto c = presentations::count_offorigin_by_substitution(n_);
      rows_.push_back(CheckResult::compare(
          "zcount" + suffix(), std::to_string(c.pairs), std::to_string(expected),
          "squarefree degree " + std::to_string(c.squarefree_degree) + ", excluded " +
              std::to_string(c.excluded_origin) + "+" + std::to_string(c.excluded_second_zero) + "+" +
              std::to_string(c.excluded_diagonal) + ", remaining " + std::to_string(c.remaining)));
      rows_.push_back(CheckResult::compare("zcount.agreement" + suffix(), std::to_string(c.pairs),
                                           std::to_string(spectrum_report().offorigin_distinct_points),
                                           "substitution count against projection count"));
    });
  }

  void lemma() {
    if (n_ < 3) return;
    guarded("lemma.sigma", "(-1)^n q", [&] {
      const auto r = deformation::verify_lemma_presentation(n_, opt_.q_mode);
      rows_.push_back(CheckResult::compare(
          "lemma.sigma" + suffix(), r.sigma_t_coefficient + (r.sigma_t0_zero ? "" : " (t0 part nonzero)"),
          r.sigma_expected, r.telescoping_ok ? "telescoping identity holds" : "telescoping identity fails"));
      rows_.push_back(CheckResult::compare("lemma.chain" + suffix(),
                                           r.chain_t_coefficient + " | " + r.chain_t0, "0 | 0",
                                           "t-part | t0 normal form"));
    });
  }

  void regularity() {
    guarded("regularity", "1", [&] {
      const auto r = deformation::regularity_corank(n_);
      rows_.push_back(CheckResult::compare("regularity" + suffix(), std::to_string(r.corank), "1",
                                           "rank " + std::to_string(r.rank) + " of " +
                                               std::to_string(r.matrix.size()) + "x" +
                                               std::to_string(r.columns) + ", t entry " +
                                               std::to_string(r.t_entry)));
    });
  }

  void unfolding() {
    const std::size_t n = n_;
    const std::size_t emb = n >= 3 ? 1 : 0;
    const std::string expected = "local " + tuple_str({emb, n - 1}) + " milnor " + tuple_str({emb, n - 1}) +
                                 " A_" + std::to_string(n - 1);
    guarded("unfolding", expected, [&] {
      const auto m = unfolding::match_quantum_factor(n_);
      const std::string computed = "local " + tuple_str({m.tangent_dim, m.local_length}) + " milnor " +
                                   tuple_str({m.corank, m.milnor_number}) + " " + m.label;
      rows_.push_back(CheckResult::compare(
          "unfolding" + suffix(), computed, expected,
          "algebraic match only; the convergence hypothesis is not machine-checked"));
    });
  }

 private:
  void dump(const PresentationSpec& spec, const algebra::Ideal& ideal,
            const std::optional<algebra::GroebnerBasis>& gb) {
    if (!opt_.dump_dir) return;
    std::filesystem::create_directories(*opt_.dump_dir);
    const std::string stem = "n" + std::to_string(n_) + "_" + lower(presentations::variant_name(spec.variant)) +
                             (spec.q_mode == QMode::Symbolic && presentations::is_quantum(spec.variant)
                                  ? "_symbolic"
                                  : "");
    const std::string header = presentations::dump_header(spec);
    std::ofstream(*opt_.dump_dir / (stem + ".ideal.txt")) << header << ideal.str();
    if (gb) std::ofstream(*opt_.dump_dir / (stem + ".gb.txt")) << header << "# reduced basis\n" << gb->str();
  }

  const QhOptions& opt_;
  int n_;
  std::vector<CheckResult>& rows_;
  std::optional<presentations::SpectrumReport> spectrum_;
};

}  // namespace

std::vector<CheckResult> run_qh_suite(const QhOptions& opt, Timings* timings) {
  if (opt.n < 2) throw std::invalid_argument("n must be at least 2");
  for (const std::string& c : opt.checks)
    if (std::find(kQhChecks.begin(), kQhChecks.end(), c) == kQhChecks.end())
      throw std::invalid_argument("unknown qh check: " + c);

  std::vector<CheckResult> rows;
  QhRun run(opt, rows);
  const std::vector<std::pair<std::string, std::function<void()>>> steps = {
      {"dims", [&] { run.dims(); }},           {"homomorphism", [&] { run.homomorphism(); }},
      {"spectrum", [&] { run.spectrum(); }},   {"zcount", [&] { run.zcount(); }},
      {"lemma", [&] { run.lemma(); }},         {"regularity", [&] { run.regularity(); }},
      {"unfolding", [&] { run.unfolding(); }}};
  for (const auto& [name, step] : steps) {
    if (!opt.checks.count(name)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    step();
    const auto t1 = std::chrono::steady_clock::now();
    if (timings)
      timings->emplace_back(name + run.suffix(), std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return rows;
}

}  // namespace igq::cli
