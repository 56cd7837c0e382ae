#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "igq/algebra/groebner.hpp"

namespace igq::unfolding {

using algebra::Monomial;
using algebra::Polynomial;

class NonIsolatedSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct GermData {
  std::size_t milnor_number = 0;
  std::size_t corank = 0;
  std::vector<Monomial> monomial_basis;
  std::vector<std::string> basis_text;
};

/// Jacobian quotient of f (counted over all critical points, which is the
/// local Milnor algebra when the origin is the only one) and the Hessian
/// corank at the origin.
GermData milnor_data(const Polynomial& f);

/// "A_mu".
std::string classify_corank1(std::size_t mu);

/// Morse germs give A_1, corank-1 germs A_mu; anything else throws.
std::string classify_germ(const GermData& germ);

struct QuantumFactorMatch {
  int n = 0;
  std::size_t tangent_dim = 0;
  std::size_t local_length = 0;
  std::size_t corank = 0;
  std::size_t milnor_number = 0;
  std::string label;
  bool ok = false;
};

/// Compares the origin factor of the quantum spectrum with the Milnor algebra
/// of x^n through (embedding dimension, length).
QuantumFactorMatch match_quantum_factor(int n);

}  // namespace igq::unfolding
