#include "igq/deformation/first_order.hpp"

#include <stdexcept>

#include "igq/algebra/linalg.hpp"

namespace igq::deformation {

using algebra::Monomial;
using presentations::Variant;

QuantumContext::QuantumContext(int n, QMode mode)
    : n_(n),
      mode_(mode),
      ring_(presentations::sigma_ring(n, mode)),
      basis_(algebra::buchberger(presentations::build_presentation({n, Variant::QuantumI, mode}))) {}

ContextPtr make_context(int n, QMode mode) { return std::make_shared<const QuantumContext>(n, mode); }

// ---------------------------------------------------------------- QHElement

QHElement::QHElement(ContextPtr ctx, const Polynomial& value)
    : ctx_(std::move(ctx)), value_(algebra::normal_form(value, ctx_->basis())) {}

QHElement QHElement::zero(const ContextPtr& ctx) { return QHElement(ctx, Polynomial(ctx->ring())); }

QHElement QHElement::unit(const ContextPtr& ctx) {
  return QHElement(ctx, Polynomial::constant(ctx->ring(), Rational(1)));
}

QHElement QHElement::q(const ContextPtr& ctx) { return QHElement(ctx, presentations::q_element(ctx->ring())); }

QHElement QHElement::sigma(const ContextPtr& ctx, int k) {
  if (k < 0 || k > 2 * ctx->n() - 2) throw std::out_of_range("special class index out of range");
  return QHElement(ctx, presentations::sigma(ctx->ring(), ctx->n(), k));
}

QHElement QHElement::sigma_prime(const ContextPtr& ctx) {
  const int n = ctx->n();
  if (n < 3) throw std::invalid_argument("s'_{2n-3} needs n >= 3");
  return star0(sigma(ctx, 2 * n - 4), sigma(ctx, 1)) - sigma(ctx, 2 * n - 3);
}

void QHElement::require_same(const QHElement& o) const {
  if (ctx_ != o.ctx_) throw std::invalid_argument("elements of different quantum rings");
}

QHElement QHElement::operator+(const QHElement& o) const {
  require_same(o);
  return QHElement(ctx_, value_ + o.value_);
}

QHElement QHElement::operator-(const QHElement& o) const {
  require_same(o);
  return QHElement(ctx_, value_ - o.value_);
}

QHElement QHElement::operator*(const Rational& c) const { return QHElement(ctx_, value_ * c); }

bool operator==(const QHElement& a, const QHElement& b) { return a.ctx_ == b.ctx_ && a.value_ == b.value_; }

QHElement star0(const QHElement& x, const QHElement& y) {
  if (x.context() != y.context()) throw std::invalid_argument("star0 across quantum rings");
  return QHElement(x.context(), x.value() * y.value());
}

// ---------------------------------------------------------------- corrections

std::string ClassTag::str() const {
  switch (kind) {
    case Kind::Unit: return "1";
    case Kind::Special: return "s" + std::to_string(index);
    case Kind::Prime: return "s'" + std::to_string(index);
  }
  return "?";
}

Rational tau_correction(int n, const ClassTag& x, const ClassTag& y) {
  using K = ClassTag::Kind;
  const int top = 2 * n - 2;
  auto valid = [&](const ClassTag& c) {
    switch (c.kind) {
      case K::Unit: return true;
      case K::Special: return c.index >= 1 && c.index <= top;
      case K::Prime: return n >= 3 && c.index == 2 * n - 3;
    }
    return false;
  };
  if (!valid(x) || !valid(y)) throw UntrackedCorrection("class outside the tracked set");
  if (x.kind == K::Unit || y.kind == K::Unit) return Rational(0);
  if (x.kind == K::Special && y.kind == K::Special) {
    if (x.index + y.index > top) {
      throw UntrackedCorrection("no 4-point data for " + x.str() + " * " + y.str());
    }
    return Rational(x.index + y.index == top ? 1 : 0);
  }
  const ClassTag& other = x.kind == K::Prime ? y : x;
  if (other.kind == K::Special && other.index == 1) return Rational(1);
  throw UntrackedCorrection("no 4-point data for " + x.str() + " * " + y.str());
}

// ---------------------------------------------------------------- first order

QHElement class_of(const ContextPtr& ctx, const ClassTag& tag) {
  switch (tag.kind) {
    case ClassTag::Kind::Unit: return QHElement::unit(ctx);
    case ClassTag::Kind::Special: return QHElement::sigma(ctx, tag.index);
    case ClassTag::Kind::Prime: return QHElement::sigma_prime(ctx);
  }
  throw std::logic_error("unknown class tag");
}

FirstOrderElement::FirstOrderElement(QHElement p0, QHElement p1, std::optional<TagDecomposition> tags)
    : p0_(std::move(p0)), p1_(std::move(p1)), tags_(std::move(tags)) {
  if (p0_.context() != p1_.context()) throw std::invalid_argument("components from different rings");
  if (tags_) *this = retagged(*tags_);
}

FirstOrderElement FirstOrderElement::of(const ContextPtr& ctx, const ClassTag& tag) {
  return FirstOrderElement(class_of(ctx, tag), QHElement::zero(ctx), TagDecomposition{{Rational(1), tag}});
}

FirstOrderElement FirstOrderElement::retagged(TagDecomposition tags) const {
  QHElement sum = QHElement::zero(p0_.context());
  for (const auto& [c, tag] : tags) sum = sum + class_of(p0_.context(), tag) * c;
  if (sum != p0_) throw std::invalid_argument("tag decomposition does not sum to the t0-part");
  FirstOrderElement out = *this;
  out.tags_ = std::move(tags);
  return out;
}

namespace {

std::optional<TagDecomposition> combine(const std::optional<TagDecomposition>& a,
                                        const std::optional<TagDecomposition>& b, const Rational& sb) {
  if (!a || !b) return std::nullopt;
  TagDecomposition out = *a;
  for (const auto& [c, tag] : *b) out.emplace_back(c * sb, tag);
  return out;
}

}  // namespace

FirstOrderElement FirstOrderElement::operator+(const FirstOrderElement& o) const {
  FirstOrderElement out(p0_ + o.p0_, p1_ + o.p1_);
  out.tags_ = combine(tags_, o.tags_, Rational(1));
  return out;
}

FirstOrderElement FirstOrderElement::operator-(const FirstOrderElement& o) const {
  FirstOrderElement out(p0_ - o.p0_, p1_ - o.p1_);
  out.tags_ = combine(tags_, o.tags_, Rational(-1));
  return out;
}

FirstOrderElement FirstOrderElement::operator*(const Rational& c) const {
  FirstOrderElement out(p0_ * c, p1_ * c);
  if (tags_) {
    TagDecomposition scaled;
    for (const auto& [k, tag] : *tags_) scaled.emplace_back(k * c, tag);
    out.tags_ = std::move(scaled);
  }
  return out;
}

FirstOrderElement star_tau(const FirstOrderElement& x, const FirstOrderElement& y) {
  const ContextPtr& ctx = x.p0().context();
  QHElement p0 = star0(x.p0(), y.p0());
  QHElement p1 = star0(x.p0(), y.p1()) + star0(x.p1(), y.p0());
  if (!x.p0().is_zero() && !y.p0().is_zero()) {
    if (!x.tags() || !y.tags()) throw UntrackedCorrection("first-order product of untagged classes");
    Rational c(0);
    for (const auto& [cx, tx] : *x.tags()) {
      for (const auto& [cy, ty] : *y.tags()) c += cx * cy * tau_correction(ctx->n(), tx, ty);
    }
    p1 = p1 + QHElement::q(ctx) * c;
  }
  return FirstOrderElement(std::move(p0), std::move(p1));
}

// ---------------------------------------------------------------- lemma

LemmaReport verify_lemma_presentation(int n, QMode mode) {
  if (n < 3) throw std::invalid_argument("the deformation lemma needs n >= 3");
  LemmaReport report;
  report.n = n;
  const ContextPtr ctx = make_context(n, mode);
  auto s = [&](int k) { return FirstOrderElement::of(ctx, k == 0 ? ClassTag::unit() : ClassTag::special(k)); };
  const long sign_n = n % 2 == 0 ? 1 : -1;

  // Low square relation with every product taken in the deformed ring.
  FirstOrderElement low = star_tau(s(n - 1), s(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    const FirstOrderElement term = star_tau(s(n - 1 + i), s(n - 1 - i)) * Rational(2);
    low = i % 2 == 0 ? low + term : low - term;
  }
  const QHElement expected = QHElement::q(ctx) * Rational(sign_n);
  report.sigma_t_coefficient = low.p1().str();
  report.sigma_expected = expected.str();
  report.sigma_t0_zero = low.p0().is_zero();
  report.sigma_ok = report.sigma_t0_zero && low.p1() == expected;
  for (long c : {-1L, 1L}) {
    if (low.p1() == QHElement::q(ctx) * Rational(c)) report.sigma_t_scalar = c;
  }

  long telescoped = 1;
  for (int i = 1; i <= n - 2; ++i) telescoped += 2 * (i % 2 == 0 ? 1 : -1);
  report.telescoping_ok = telescoped == sign_n;

  // s_{2n-4} * s_2 - (s_{2n-4} * s_1) * s_1 + s_{2n-3} * s_1 - s_{2n-2}, where
  // s_{2n-4} * s_1 is rewritten as s_{2n-3} + s'_{2n-3} before the second
  // product.
  const FirstOrderElement first = star_tau(s(2 * n - 4), s(2));
  const FirstOrderElement inner =
      star_tau(s(2 * n - 4), s(1))
          .retagged({{Rational(1), ClassTag::special(2 * n - 3)}, {Rational(1), ClassTag::prime(n)}});
  const FirstOrderElement second = star_tau(inner, s(1));
  const FirstOrderElement third = star_tau(s(2 * n - 3), s(1));
  const FirstOrderElement chain = first - second + third - s(2 * n - 2);
  report.chain_t_coefficient = chain.p1().str();
  report.chain_t0 = chain.p0().str();
  report.chain_ok = chain.p0().is_zero() && chain.p1().is_zero();

  report.high_relation_note = "O(t): recorded, not asserted";
  report.ok = report.sigma_ok && report.chain_ok && report.telescoping_ok;
  return report;
}

// ---------------------------------------------------------------- regularity

RegularityReport regularity_corank(int n) {
  RegularityReport report;
  report.n = n;
  const RingPtr ring = presentations::sigma_ring(n, QMode::Specialize1);
  const std::size_t vars = ring->size();
  report.columns = vars + 1;
  auto linear_row = [&](const Polynomial& g) {
    std::vector<Rational> row(report.columns);
    for (std::size_t v = 0; v < vars; ++v) {
      Monomial m;
      m.set(v, 1);
      row[v] = g.coefficient(m);
    }
    return row;
  };
  algebra::RationalMatrix m;
  for (int r = 3; r <= 2 * n - 2; ++r) m.push_back(linear_row(presentations::sigma_determinant(ring, n, r)));
  auto low = linear_row(presentations::sigma_square_low(ring, n));
  report.t_entry = (n + 1) % 2 == 0 ? 1 : -1;
  low[vars] = Rational(report.t_entry);
  m.push_back(low);
  const Polynomial high = presentations::sigma_square_high(ring, n) +
                          presentations::sigma(ring, n, 1) * Rational((n + 1) % 2 == 0 ? 1 : -1);
  m.push_back(linear_row(high));
  for (const auto& row : m) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(c.str());
    report.matrix.push_back(std::move(cells));
  }
  report.rank = algebra::rank(m);
  report.corank = report.columns - report.rank;
  return report;
}

}  // namespace igq::deformation
