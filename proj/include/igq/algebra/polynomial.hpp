#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "igq/algebra/rational.hpp"
#include "igq/simd/monomial_kernels.hpp"

namespace igq::algebra {

inline constexpr std::size_t kMaxVariables = simd::kLanes;

/// Raised when two polynomials (or a polynomial and a basis) live in
/// different rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector over at most kMaxVariables variables. Lanes past the
/// ring's variable count are always zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents);

  unsigned operator[](std::size_t i) const { return exps_.e[i]; }
  void set(std::size_t i, unsigned e);

  unsigned total_degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const { return kernels().divides(exps_, other.exps_); }
  bool coprime(const Monomial& other) const { return kernels().coprime(exps_, other.exps_); }
  Monomial lcm(const Monomial& other) const;
  /// Throws std::overflow_error when an exponent would exceed the lane limit.
  Monomial operator*(const Monomial& other) const;
  /// Requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;

  const simd::ExponentBlock& block() const { return exps_; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

  static const simd::MonomialKernels& kernels() { return simd::active_kernels(); }

 private:
  simd::ExponentBlock exps_{};
};

enum class OrderKind { Grevlex, Grlex, Lex, Block };

/// Term order descriptor. Block orders compare variables [0, split) by
/// weighted grevlex first and break ties with weighted grevlex on the rest.
struct TermOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t split = 0;

  static TermOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static TermOrder grlex() { return {OrderKind::Grlex, 0}; }
  static TermOrder lex() { return {OrderKind::Lex, 0}; }
  static TermOrder block(std::size_t split) { return {OrderKind::Block, split}; }

  std::string name() const;
  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ambient variable list with a grading (positive integer weight per
/// variable, default 1) and a term order. Rings are immutable and shared.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<unsigned> weights, TermOrder order);

  static RingPtr make(std::vector<std::string> names, std::vector<unsigned> weights = {},
                      TermOrder order = TermOrder::grevlex());

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  const TermOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  std::uint32_t weighted_degree(const Monomial& m) const;
  /// Sign of (a - b) in the term order; the weights passed must be the
  /// cached weighted degrees of a and b.
  int compare(const Monomial& a, std::uint32_t wa, const Monomial& b, std::uint32_t wb) const;
  int compare(const Monomial& a, const Monomial& b) const {
    return compare(a, weighted_degree(a), b, weighted_degree(b));
  }

  RingPtr with_order(TermOrder order) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> weights_;
  TermOrder order_;
  simd::ExponentBlock weight_block_{};
  simd::ExponentBlock head_weight_block_{};
  simd::LaneMask all_mask_ = 0;
  simd::LaneMask head_mask_ = 0;
  simd::LaneMask tail_mask_ = 0;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Rational coef;
  std::uint32_t weight = 0;  // cached weighted degree of mono
};

/// Multivariate polynomial over Q: terms strictly descending in the ring's
/// term order, no zero coefficients, no repeated monomials.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = Rational(1));
  /// Sorts and merges arbitrary (monomial, coefficient) pairs.
  static Polynomial from_terms(RingPtr ring, std::vector<std::pair<Monomial, Rational>> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coef; }

  Rational coefficient(const Monomial& m) const;
  /// Value of the constant term.
  Rational constant_term() const;

  unsigned total_degree() const;
  std::uint32_t weighted_degree() const;
  bool is_weighted_homogeneous() const;
  /// Sum of the terms of standard total degree d.
  Polynomial homogeneous_part(unsigned d) const;

  Polynomial monic() const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;

  /// Ring homomorphism: variable i maps to images[i]; all images share a ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Re-expresses this polynomial in `target`; var_map[i] is the target
  /// index of source variable i, or -1 for variables that must not occur.
  Polynomial rebased(RingPtr target, std::span<const int> var_map) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c) { return a.scaled(c); }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a.scaled(c); }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical text form: terms in order joined by " + ", each term written
  /// `num/den*x1^e1*...`; the zero polynomial is "0".
  std::string str() const;
  static Polynomial parse(RingPtr ring, std::string_view text);

  // Internal constructor for already-canonical term lists.
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);

 private:
  Polynomial add_scaled(const Polynomial& o, const Rational& factor) const;
  void require_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace igq::algebra
