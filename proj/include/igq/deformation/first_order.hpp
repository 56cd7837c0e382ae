#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "igq/presentations/presentation.hpp"

namespace igq::deformation {

using algebra::GroebnerBasis;
using algebra::Polynomial;
using algebra::Rational;
using algebra::RingPtr;
using presentations::QMode;

/// Small quantum cohomology of IG(2,2n): the sigma ring modulo the reduced
/// basis of the QUANTUM_I ideal. Computed once, shared read-only.
class QuantumContext {
 public:
  QuantumContext(int n, QMode mode);

  int n() const { return n_; }
  QMode mode() const { return mode_; }
  const RingPtr& ring() const { return ring_; }
  const GroebnerBasis& basis() const { return basis_; }

 private:
  int n_;
  QMode mode_;
  RingPtr ring_;
  GroebnerBasis basis_;
};

using ContextPtr = std::shared_ptr<const QuantumContext>;
ContextPtr make_context(int n, QMode mode = QMode::Specialize1);

/// Element of QH(X), always stored in normal form.
class QHElement {
 public:
  QHElement(ContextPtr ctx, const Polynomial& value);

  static QHElement zero(const ContextPtr& ctx);
  static QHElement unit(const ContextPtr& ctx);
  static QHElement q(const ContextPtr& ctx);
  /// Special class s_k, k in [0, 2n-2] (s_0 = 1).
  static QHElement sigma(const ContextPtr& ctx, int k);
  /// s_{2n-4} *0 s_1 - s_{2n-3}.
  static QHElement sigma_prime(const ContextPtr& ctx);

  const ContextPtr& context() const { return ctx_; }
  const Polynomial& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  std::string str() const { return value_.str(); }

  QHElement operator+(const QHElement& o) const;
  QHElement operator-(const QHElement& o) const;
  QHElement operator*(const Rational& c) const;

  friend bool operator==(const QHElement& a, const QHElement& b);
  friend bool operator!=(const QHElement& a, const QHElement& b) { return !(a == b); }

 private:
  void require_same(const QHElement& o) const;

  ContextPtr ctx_;
  Polynomial value_;
};

/// Small quantum product: normal form of the product. Throws on context
/// mismatch.
QHElement star0(const QHElement& x, const QHElement& y);

/// Classes for which first-order corrections are known.
struct ClassTag {
  enum class Kind { Unit, Special, Prime };
  Kind kind = Kind::Unit;
  int index = 0;  // k for Special s_k; 2n-3 for Prime

  static ClassTag unit() { return {Kind::Unit, 0}; }
  static ClassTag special(int k) { return {Kind::Special, k}; }
  static ClassTag prime(int n) { return {Kind::Prime, 2 * n - 3}; }
  std::string str() const;
  friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

/// Raised when a first-order correction would need a Gromov-Witten
/// invariant outside the tracked data.
class UntrackedCorrection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficient c with x *tau y = x *0 y + c q t + O(t^2):
///   s_i, s_j (i, j >= 1, i + j <= 2n-2) -> [i + j == 2n-2];
///   s'_{2n-3}, s_1 -> 1;  unit, anything tracked -> 0.
/// Throws UntrackedCorrection otherwise.
Rational tau_correction(int n, const ClassTag& x, const ClassTag& y);

/// Linear combination of tracked classes.
using TagDecomposition = std::vector<std::pair<Rational, ClassTag>>;

/// p0 + p1 t modulo t^2, optionally with p0 written in tracked classes.
class FirstOrderElement {
 public:
  FirstOrderElement(QHElement p0, QHElement p1, std::optional<TagDecomposition> tags = std::nullopt);

  /// Tracked class with no t-part.
  static FirstOrderElement of(const ContextPtr& ctx, const ClassTag& tag);

  const QHElement& p0() const { return p0_; }
  const QHElement& p1() const { return p1_; }
  const std::optional<TagDecomposition>& tags() const { return tags_; }

  /// Attaches a decomposition of p0; throws std::invalid_argument unless the
  /// classes sum to p0 exactly.
  FirstOrderElement retagged(TagDecomposition tags) const;

  FirstOrderElement operator+(const FirstOrderElement& o) const;
  FirstOrderElement operator-(const FirstOrderElement& o) const;
  FirstOrderElement operator*(const Rational& c) const;

 private:
  QHElement p0_;
  QHElement p1_;
  std::optional<TagDecomposition> tags_;
};

QHElement class_of(const ContextPtr& ctx, const ClassTag& tag);

/// (x0 *0 y0, x0 *0 y1 + x1 *0 y0 + correction q). Both operands need tags
/// unless one t0-part is zero; throws UntrackedCorrection otherwise.
FirstOrderElement star_tau(const FirstOrderElement& x, const FirstOrderElement& y);

struct LemmaReport {
  int n = 0;
  std::string sigma_t_coefficient;   // t-part of the low square relation
  std::string sigma_expected;        // (-1)^n q
  bool sigma_t0_zero = false;
  bool sigma_ok = false;
  std::string chain_t_coefficient;   // t-part of the determinant reduction chain
  std::string chain_t0;              // its t0-part normal form
  bool chain_ok = false;
  bool telescoping_ok = false;       // 1 + 2 sum_{i=1}^{n-2} (-1)^i == (-1)^n
  std::string high_relation_note;
  bool ok = false;
  /// Integer c with t-part of the low square relation = c q.
  long sigma_t_scalar = 0;
};

/// First-order behaviour of the relations of QH under the tau-deformation
/// (n >= 3).
LemmaReport verify_lemma_presentation(int n, QMode mode = QMode::Specialize1);

struct RegularityReport {
  int n = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
  std::size_t corank = 0;
  /// Entry of the t-column in the low square relation's row.
  long t_entry = 0;
  std::vector<std::vector<std::string>> matrix;
};

/// Linear parts in (s_1, ..., s_{2n-2}, t) of the deformed relations with
/// q = 1; corank = columns - rank.
RegularityReport regularity_corank(int n);

}  // namespace igq::deformation
