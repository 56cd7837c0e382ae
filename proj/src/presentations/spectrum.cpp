#include "igq/presentations/spectrum.hpp"

#include <stdexcept>

#include "igq/algebra/linalg.hpp"
#include "igq/algebra/univariate.hpp"

namespace igq::presentations {

using algebra::GroebnerBasis;
using algebra::Monomial;
using algebra::Ring;
using algebra::buchberger;
using algebra::normal_form;
using algebra::quotient_dimension;

namespace {

std::size_t finite_dimension(const GroebnerBasis& gb, const char* what) {
  const auto d = quotient_dimension(gb);
  if (!d) throw std::runtime_error(std::string(what) + " is not zero-dimensional");
  return *d;
}

std::size_t degree(const Polynomial& f) { return f.is_zero() ? 0 : f.total_degree(); }

}  // namespace

HomomorphismReport verify_homomorphism(int n, bool quantum) {
  HomomorphismReport report;
  report.n = n;
  report.quantum = quantum;
  const Variant one = quantum ? Variant::QuantumI : Variant::ClassicalI;
  const Variant two = quantum ? Variant::QuantumII : Variant::ClassicalII;

  const Ideal target = build_presentation({n, two, QMode::Specialize1});
  const GroebnerBasis gb_two = buchberger(target);
  report.dim_two = finite_dimension(gb_two, "II-presentation");
  report.dim_one = finite_dimension(buchberger(build_presentation({n, one, QMode::Specialize1})),
                                    "I-presentation");

  std::vector<Polynomial> images;
  for (int k = 1; k <= 2 * n - 2; ++k) images.push_back(sigma_in_ab(n, k, target.ring()));

  const std::vector<int> signs = quantum ? std::vector<int>{1, -1} : std::vector<int>{1};
  for (const int lambda : signs) {
    const Ideal source = build_presentation({n, one, QMode::Specialize1}, Rational(lambda));
    std::vector<std::string> residues;
    bool all_zero = true;
    for (const auto& g : source.generators()) {
      const Polynomial r = normal_form(g.substitute(images), gb_two);
      all_zero = all_zero && r.is_zero();
      residues.push_back(r.str());
    }
    report.residues.push_back(std::move(residues));
    if (all_zero) {
      report.lambda = lambda;
      break;
    }
  }
  report.ok = report.lambda != 0 && report.dim_one == report.dim_two;
  return report;
}

std::vector<long> linear_form_coefficients(std::size_t count, std::size_t attempt) {
  std::vector<long> seq{1};
  for (long p = 2; seq.size() < count + attempt; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) seq.push_back(p);
  }
  return {seq.begin() + static_cast<std::ptrdiff_t>(attempt), seq.end()};
}

Polynomial linear_form(const RingPtr& ring, const std::vector<long>& coefficients) {
  if (coefficients.size() != ring->size()) throw std::invalid_argument("one coefficient per variable");
  Polynomial form(ring);
  for (std::size_t i = 0; i < ring->size(); ++i) {
    form += Polynomial::variable(ring, i) * Rational(coefficients[i]);
  }
  return form;
}

std::size_t count_points_by_projection(const Ideal& ideal, const std::vector<long>& coefficients,
                                       std::string* eliminant) {
  const GroebnerBasis gb = buchberger(ideal);
  const Polynomial f =
      algebra::minimal_polynomial(linear_form(ideal.ring(), coefficients), gb, Ring::make({"w"}));
  if (eliminant) *eliminant = f.str();
  return algebra::distinct_root_count(f);
}

std::size_t origin_length(const Ideal& ideal, std::size_t exponent) {
  const RingPtr& ring = ideal.ring();
  Ideal local = ideal;
  for (std::size_t v = 0; v < ring->size(); ++v) {
    local.add(Polynomial::variable(ring, v).pow(static_cast<unsigned>(exponent)));
  }
  return finite_dimension(buchberger(local), "origin-local ideal");
}

SpectrumReport decompose_spectrum(int n) {
  SpectrumReport report;
  const Ideal ideal = build_presentation({n, Variant::QuantumII, QMode::Specialize1});
  const RingPtr& ring = ideal.ring();
  const GroebnerBasis gb = buchberger(ideal);
  report.total_dim = finite_dimension(gb, "quantum ideal");

  algebra::RationalMatrix linear;
  for (const auto& g : ideal.generators()) {
    if (!g.constant_term().is_zero()) throw std::runtime_error("origin is not on the spectrum");
    std::vector<Rational> row;
    for (std::size_t v = 0; v < ring->size(); ++v) {
      Monomial m;
      m.set(v, 1);
      row.push_back(g.coefficient(m));
    }
    linear.push_back(std::move(row));
  }
  report.tangent_dim_origin = ring->size() - algebra::rank(linear);

  // On this spectrum a1 vanishes only at the origin, so I : a1^∞ drops exactly
  // the origin's component. The guard recomputes that component's length
  // directly as dim Q[x]/(I + (x_i^N)) with N the total dimension.
  const Ideal off = algebra::saturate(ideal, Polynomial::variable(ring, "a1"));
  const GroebnerBasis off_gb = buchberger(off);
  report.offorigin_dim = finite_dimension(off_gb, "off-origin ideal");
  report.local_length_origin = report.total_dim - report.offorigin_dim;
  report.origin_length_direct = origin_length(ideal, report.total_dim);
  report.saturation_guard = report.origin_length_direct == report.local_length_origin;

  for (std::size_t attempt = 0; attempt <= 3; ++attempt) {
    report.projection_attempts = attempt + 1;
    report.projection_coefficients = linear_form_coefficients(ring->size(), attempt);
    report.offorigin_distinct_points =
        count_points_by_projection(off_gb.ideal(), report.projection_coefficients, &report.eliminant);
    if (report.offorigin_distinct_points == report.offorigin_dim) {
      report.projection_verified = true;
      break;
    }
  }
  return report;
}

SubstitutionCount count_offorigin_by_substitution(int n) {
  if (n < 2) throw std::invalid_argument("IG(2,2n) needs n >= 2");
  const RingPtr ring = Ring::make({"z"});
  const Polynomial z = Polynomial::variable(ring, std::size_t{0});
  const auto e = static_cast<unsigned>(2 * n);
  const Polynomial z_e = z.pow(e);
  const Polynomial f = (z_e - z).pow(e) - z_e;

  SubstitutionCount out;
  Polynomial rest = algebra::squarefree_part(f);
  out.squarefree_degree = degree(rest);
  auto strip = [&rest](const Polynomial& g) {
    const Polynomial common = algebra::univ_gcd(rest, g);
    rest = algebra::univ_divide_exact(rest, common);
    return degree(common);
  };
  out.excluded_origin = strip(z);
  out.excluded_second_zero = strip(z_e - z);
  out.excluded_diagonal = strip(z_e - z * Rational(2));
  out.remaining = degree(rest);
  if (out.remaining % 2 != 0) throw std::logic_error("odd number of ordered root pairs");
  out.pairs = out.remaining / 2;
  return out;
}

}  // namespace igq::presentations
