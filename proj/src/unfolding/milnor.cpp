#include "igq/unfolding/milnor.hpp"

#include "igq/algebra/linalg.hpp"
#include "igq/presentations/spectrum.hpp"

namespace igq::unfolding {

using algebra::Ideal;
using algebra::Rational;
using algebra::RationalMatrix;

GermData milnor_data(const Polynomial& f) {
  if (!f.constant_term().is_zero()) throw std::invalid_argument("germ must vanish at the origin");
  const std::size_t vars = f.ring()->size();

  Ideal jacobian(f.ring());
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < vars; ++i) {
    partials.push_back(f.derivative(i));
    if (!partials.back().is_zero()) jacobian.add(partials.back());
  }
  auto basis = algebra::quotient_basis(algebra::buchberger(jacobian));
  if (!basis) throw NonIsolatedSingularity("Jacobian quotient is infinite");

  RationalMatrix hessian(vars, std::vector<Rational>(vars));
  for (std::size_t i = 0; i < vars; ++i)
    for (std::size_t j = 0; j < vars; ++j) hessian[i][j] = partials[i].derivative(j).constant_term();

  GermData g;
  g.milnor_number = basis->size();
  g.corank = vars - algebra::rank(hessian);
  g.monomial_basis = *basis;
  for (const Monomial& m : *basis) g.basis_text.push_back(Polynomial::monomial(f.ring(), m).str());
  return g;
}

std::string classify_corank1(std::size_t mu) {
  if (mu == 0) throw std::invalid_argument("Milnor number must be positive");
  return "A_" + std::to_string(mu);
}

std::string classify_germ(const GermData& germ) {
  if (germ.corank == 0) {
    if (germ.milnor_number != 1) throw std::logic_error("Morse germ with Milnor number != 1");
    return classify_corank1(1);
  }
  if (germ.corank == 1) return classify_corank1(germ.milnor_number);
  throw std::invalid_argument("corank " + std::to_string(germ.corank) + " is not classified");
}

QuantumFactorMatch match_quantum_factor(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const presentations::SpectrumReport s = presentations::decompose_spectrum(n);

  auto ring = algebra::Ring::make({"x"});
  const GermData germ = milnor_data(Polynomial::variable(ring, 0).pow(static_cast<unsigned>(n)));

  QuantumFactorMatch m;
  m.n = n;
  m.tangent_dim = s.tangent_dim_origin;
  m.local_length = s.local_length_origin;
  m.corank = germ.corank;
  m.milnor_number = germ.milnor_number;
  m.label = classify_germ(germ);
  m.ok = m.tangent_dim == m.corank && m.local_length == m.milnor_number &&
         m.milnor_number == static_cast<std::size_t>(n - 1) && m.tangent_dim <= 1;
  return m;
}

}  // namespace igq::unfolding
