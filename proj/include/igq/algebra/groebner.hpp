#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "igq/algebra/polynomial.hpp"

namespace igq::algebra {

/// Finite generating set of an ideal; all generators share one ring.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  void add(Polynomial p);

  /// Line-separated canonical text of the generators.
  std::string str() const;
  static Ideal parse(RingPtr ring, std::string_view text);

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

/// Reduced Groebner basis: monic elements, sorted by leading monomial
/// (descending), no term of any element divisible by another leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced_elements);

  const RingPtr& ring() const { return ring_; }
  const TermOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit_ideal() const;

  /// Index of the first element whose leading monomial divides m, or -1.
  std::ptrdiff_t find_reducer(const Monomial& m) const;

  Ideal ideal() const { return Ideal(ring_, elements_); }
  std::string str() const { return ideal().str(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::vector<simd::ExponentBlock> leads_;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and sugar pair
/// selection, in the ideal's own ring order.
GroebnerBasis buchberger(const Ideal& ideal);
/// Same, after moving the generators to a copy of the ring with `order`.
GroebnerBasis buchberger(const Ideal& ideal, TermOrder order);

/// Fully reduced remainder of f modulo gb.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Sign-free S-polynomial of two monic-or-not polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// True iff every S-polynomial of the elements reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& gb);

/// Standard monomials in ascending term order; nullopt when infinite.
std::optional<std::vector<Monomial>> quotient_basis(const GroebnerBasis& gb);
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb);

/// Coordinates of a normal form in the standard-monomial basis.
std::vector<Rational> quotient_coordinates(const Polynomial& nf, const std::vector<Monomial>& basis);

/// Monic generator of the kernel of Q[w] -> Q[x]/I, w -> f, written in the
/// one-variable ring `target`. Requires a zero-dimensional basis; equals the
/// generator of (I + (w - f)) ∩ Q[w].
Polynomial minimal_polynomial(const Polynomial& f, const GroebnerBasis& gb, const RingPtr& target);

/// Exact quotient a / b; throws std::domain_error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// I : (f), via the intersection I ∩ (f) computed by eliminating an auxiliary
/// variable.
Ideal colon(const Ideal& ideal, const Polynomial& f);

/// I : f^∞ by iterated colon. Stops once two consecutive reduced bases agree;
/// throws std::runtime_error if that has not happened within the bound
/// (quotient dimension of I plus one, or 64 when I is not zero-dimensional).
Ideal saturate(const Ideal& ideal, const Polynomial& f);

/// Elimination ideal I ∩ Q[keep], returned in a ring of the kept variables
/// (original relative order, original weights, weighted grevlex).
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep);

}  // namespace igq::algebra
