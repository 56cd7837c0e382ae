#include "igq/algebra/univariate.hpp"

#include <stdexcept>

namespace igq::algebra {

namespace {

void require_univariate(const Polynomial& f) {
  if (f.ring()->size() != 1) throw std::invalid_argument("expected a one-variable ring");
}

void trim(DenseUnivariate& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Quotient and remainder of a by b (b nonzero).
std::pair<DenseUnivariate, DenseUnivariate> divmod(DenseUnivariate a, const DenseUnivariate& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  DenseUnivariate q(a.size() - b.size() + 1);
  const Rational inv = b.back().inverse();
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const Rational c = a[shift + b.size() - 1] * inv;
    q[shift] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

DenseUnivariate make_monic(DenseUnivariate c) {
  if (c.empty()) return c;
  const Rational inv = c.back().inverse();
  for (auto& x : c) x *= inv;
  return c;
}

DenseUnivariate gcd_dense(DenseUnivariate a, DenseUnivariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(std::move(a), b).second;
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

DenseUnivariate derivative(const DenseUnivariate& c) {
  DenseUnivariate d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * Rational(static_cast<long>(k)));
  trim(d);
  return d;
}

}  // namespace

DenseUnivariate to_dense(const Polynomial& f) {
  require_univariate(f);
  DenseUnivariate c;
  for (const auto& t : f.terms()) {
    const unsigned e = t.mono[0];
    if (c.size() <= e) c.resize(e + 1);
    c[e] = t.coef;
  }
  trim(c);
  return c;
}

Polynomial from_dense(const RingPtr& ring, const DenseUnivariate& c) {
  std::vector<std::pair<Monomial, Rational>> raw;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) raw.emplace_back(Monomial{static_cast<unsigned>(k)}, c[k]);
  }
  return Polynomial::from_terms(ring, std::move(raw));
}

Polynomial univ_gcd(const Polynomial& f, const Polynomial& g) {
  require_univariate(f);
  require_univariate(g);
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  return from_dense(f.ring(), gcd_dense(to_dense(f), to_dense(g)));
}

Polynomial squarefree_part(const Polynomial& f) {
  require_univariate(f);
  if (f.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  const DenseUnivariate c = to_dense(f);
  const DenseUnivariate g = gcd_dense(c, derivative(c));
  return from_dense(f.ring(), make_monic(divmod(c, g).first));
}

std::size_t distinct_root_count(const Polynomial& f) {
  return to_dense(squarefree_part(f)).size() - 1;
}

Polynomial univ_divide_exact(const Polynomial& f, const Polynomial& g) {
  require_univariate(f);
  require_univariate(g);
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  auto [q, r] = divmod(to_dense(f), to_dense(g));
  if (!r.empty()) throw std::domain_error("inexact univariate division");
  return from_dense(f.ring(), q);
}

}  // namespace igq::algebra
