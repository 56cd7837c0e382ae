#include "igq/algebra/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace igq::algebra {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw std::out_of_range("monomial lane out of range");
  if (e > simd::kMaxExponent) throw std::overflow_error("exponent exceeds lane limit");
  exps_.e[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::total_degree() const {
  unsigned s = 0;
  for (auto e : exps_.e) s += e;
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.e.begin(), exps_.e.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  kernels().lcm(exps_, other.exps_, out.exps_);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  if (!kernels().mul(exps_, other.exps_, out.exps_)) {
    throw std::overflow_error("monomial product exceeds exponent limit");
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  kernels().quotient(divisor.exps_, exps_, out.exps_);
  return out;
}

// ---------------------------------------------------------------- TermOrder

std::string TermOrder::name() const {
  switch (kind) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Grlex: return "grlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Block: return "block(" + std::to_string(split) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names, std::vector<unsigned> weights, TermOrder order)
    : names_(std::move(names)), weights_(std::move(weights)), order_(order) {
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("ring has more than " + std::to_string(kMaxVariables) + " variables");
  }
  if (weights_.empty()) weights_.assign(names_.size(), 1u);
  if (weights_.size() != names_.size()) throw std::invalid_argument("weight/variable count mismatch");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (weights_[i] == 0 || weights_[i] > 255) throw std::invalid_argument("weights must lie in [1,255]");
    if (names_[i].empty() || !std::isalpha(static_cast<unsigned char>(names_[i][0]))) {
      throw std::invalid_argument("variable names must start with a letter");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
    }
    weight_block_.e[i] = static_cast<std::uint16_t>(weights_[i]);
  }
  if (order_.kind == OrderKind::Block && (order_.split == 0 || order_.split >= names_.size())) {
    throw std::invalid_argument("block order split must separate two non-empty blocks");
  }
  all_mask_ = names_.empty() ? 0u : static_cast<simd::LaneMask>((1u << names_.size()) - 1u);
  head_mask_ = static_cast<simd::LaneMask>((1u << order_.split) - 1u) & all_mask_;
  tail_mask_ = all_mask_ & ~head_mask_;
  for (std::size_t i = 0; i < order_.split && i < names_.size(); ++i) {
    head_weight_block_.e[i] = weight_block_.e[i];
  }
}

RingPtr Ring::make(std::vector<std::string> names, std::vector<unsigned> weights, TermOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(weights), order);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::uint32_t Ring::weighted_degree(const Monomial& m) const {
  return Monomial::kernels().dot(m.block(), weight_block_);
}

int Ring::compare(const Monomial& a, std::uint32_t wa, const Monomial& b, std::uint32_t wb) const {
  const auto& k = Monomial::kernels();
  switch (order_.kind) {
    case OrderKind::Grevlex: {
      if (wa != wb) return wa > wb ? 1 : -1;
      const int i = k.last_difference(a.block(), b.block(), all_mask_);
      if (i < 0) return 0;
      return a[i] < b[i] ? 1 : -1;
    }
    case OrderKind::Grlex: {
      if (wa != wb) return wa > wb ? 1 : -1;
      const int i = k.first_difference(a.block(), b.block(), all_mask_);
      if (i < 0) return 0;
      return a[i] > b[i] ? 1 : -1;
    }
    case OrderKind::Lex: {
      const int i = k.first_difference(a.block(), b.block(), all_mask_);
      if (i < 0) return 0;
      return a[i] > b[i] ? 1 : -1;
    }
    case OrderKind::Block: {
      const std::uint32_t ha = k.dot(a.block(), head_weight_block_);
      const std::uint32_t hb = k.dot(b.block(), head_weight_block_);
      if (ha != hb) return ha > hb ? 1 : -1;
      int i = k.last_difference(a.block(), b.block(), head_mask_);
      if (i >= 0) return a[i] < b[i] ? 1 : -1;
      const std::uint32_t ta = wa - ha;
      const std::uint32_t tb = wb - hb;
      if (ta != tb) return ta > tb ? 1 : -1;
      i = k.last_difference(a.block(), b.block(), tail_mask_);
      if (i < 0) return 0;
      return a[i] < b[i] ? 1 : -1;
    }
  }
  return 0;
}

RingPtr Ring::with_order(TermOrder order) const { return make(names_, weights_, order); }

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial{}, c, 0});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const std::size_t i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{m, c, p.ring_->weighted_degree(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<std::pair<Monomial, Rational>> raw) {
  Polynomial p(std::move(ring));
  const Ring& r = *p.ring_;
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (auto& [m, c] : raw) {
    if (!c.is_zero()) terms.push_back(Term{m, std::move(c), r.weighted_degree(m)});
  }
  std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) {
    return r.compare(a.mono, a.weight, b.mono, b.weight) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coef += t.coef;
      if (merged.back().coef.is_zero()) merged.pop_back();
    } else {
      merged.push_back(std::move(t));
    }
  }
  p.terms_ = std::move(merged);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coef;
  }
  return Rational(0);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Rational(0);
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::uint32_t Polynomial::weighted_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.weight);
  return d;
}

bool Polynomial::is_weighted_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [this](const Term& t) { return t.weight == terms_.front().weight; });
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.total_degree() == d) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->size()) throw std::out_of_range("derivative variable out of range");
  std::vector<std::pair<Monomial, Rational>> raw;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    raw.emplace_back(m, t.coef * Rational(static_cast<long>(e)));
  }
  // Differentiation preserves the relative order of surviving terms only for
  // some orders, so re-sort.
  return from_terms(ring_, std::move(raw));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef *= c;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  const std::uint32_t w = ring_->weighted_degree(m);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coef * c, t.weight + w});
  // Multiplication by a monomial is order-preserving for every monomial order.
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->size()) throw std::invalid_argument("substitution arity mismatch");
  if (images.empty()) throw std::invalid_argument("substitution into an empty ring");
  const RingPtr& target = images.front().ring();
  for (const auto& im : images) {
    if (!same_ring(im.ring(), target)) throw RingMismatch("substitution images in different rings");
  }
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coef);
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono[i] != 0) term = term * power(i, t.mono[i]);
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::rebased(RingPtr target, std::span<const int> var_map) const {
  if (var_map.size() != ring_->size()) throw std::invalid_argument("rebase map arity mismatch");
  std::vector<std::pair<Monomial, Rational>> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] < 0) throw std::invalid_argument("variable " + ring_->names()[i] + " has no image");
      m.set(static_cast<std::size_t>(var_map[i]), t.mono[i]);
    }
    raw.emplace_back(m, t.coef);
  }
  return from_terms(std::move(target), std::move(raw));
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch("polynomials from different rings");
}

Polynomial Polynomial::add_scaled(const Polynomial& o, const Rational& factor) const {
  require_same_ring(o);
  const Ring& r = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[j];
    const int c = r.compare(a.mono, a.weight, b.mono, b.weight);
    if (c > 0) {
      out.push_back(a);
      ++i;
    } else if (c < 0) {
      out.push_back(Term{b.mono, b.coef * factor, b.weight});
      ++j;
    } else {
      Rational s = a.coef + b.coef * factor;
      if (!s.is_zero()) out.push_back(Term{a.mono, std::move(s), a.weight});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) {
    out.push_back(Term{o.terms_[j].mono, o.terms_[j].coef * factor, o.terms_[j].weight});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return *this = add_scaled(o, Rational(1)); }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this = add_scaled(o, Rational(-1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.size() < b.size()) return b * a;
  Polynomial acc(a.ring_);
  for (const auto& t : b.terms_) acc += a.times_term(t.mono, t.coef);
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coef.str();
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (t.mono[i] != 0) os << '*' << ring_->names()[i] << '^' << t.mono[i];
    }
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty polynomial text");
  if (text == "0") return Polynomial(std::move(ring));
  std::vector<std::pair<Monomial, Rational>> raw;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    std::string_view token = trim(text.substr(start, plus - start));
    if (token.empty()) throw std::invalid_argument("empty term in '" + std::string(text) + "'");
    Rational coef(1);
    Monomial mono;
    std::size_t pos = 0;
    while (pos <= token.size()) {
      std::size_t star = token.find('*', pos);
      if (star == std::string_view::npos) star = token.size();
      std::string_view factor = trim(token.substr(pos, star - pos));
      if (factor.empty()) throw std::invalid_argument("empty factor in '" + std::string(token) + "'");
      const char c0 = factor[0];
      if (std::isdigit(static_cast<unsigned char>(c0)) || c0 == '-') {
        if (pos != 0) throw std::invalid_argument("coefficient must lead the term");
        coef = Rational::parse(factor);
      } else {
        const auto caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        unsigned e = 1;
        if (caret != std::string_view::npos) {
          const std::string digits(factor.substr(caret + 1));
          if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            throw std::invalid_argument("bad exponent in '" + std::string(factor) + "'");
          }
          e = static_cast<unsigned>(std::stoul(digits));
        }
        const std::size_t v = ring->require_index(name);
        mono.set(v, mono[v] + e);
      }
      pos = star + 1;
    }
    raw.emplace_back(mono, coef);
    start = plus + 1;
  }
  return from_terms(std::move(ring), std::move(raw));
}

}  // namespace igq::algebra
