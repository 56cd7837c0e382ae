#include "igq/algebra/groebner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace igq::algebra {

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("ideal without a ring");
  for (auto& g : generators) add(std::move(g));
}

void Ideal::add(Polynomial p) {
  if (!same_ring(p.ring(), ring_)) throw RingMismatch("ideal generator from a different ring");
  generators_.push_back(std::move(p));
}

std::string Ideal::str() const {
  std::string out;
  for (const auto& g : generators_) {
    out += g.str();
    out += '\n';
  }
  return out;
}

Ideal Ideal::parse(RingPtr ring, std::string_view text) {
  Ideal out(ring);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.add(Polynomial::parse(ring, line));
  }
  return out;
}

// ---------------------------------------------------------------- reduction

namespace {

/// Reduces against a list of polynomials addressed through their leading
/// exponent blocks. Only leading-monomial divisibility drives the search, so
/// the same routine serves finished bases and Buchberger's working set.
class Reducer {
 public:
  explicit Reducer(const Ring& ring) : ring_(ring) {}

  void add(const Polynomial* p) {
    polys_.push_back(p);
    leads_.push_back(p->leading_monomial().block());
  }

  void clear() {
    polys_.clear();
    leads_.clear();
  }

  /// Full reduction: every term of the result is irreducible.
  std::vector<Term> reduce(std::vector<Term> work, bool tail = true) const {
    const auto& k = Monomial::kernels();
    std::vector<Term> rem;
    std::vector<Term> next;
    std::size_t pos = 0;
    while (pos < work.size()) {
      const Term& lead = work[pos];
      const std::ptrdiff_t idx = k.find_divisor(leads_.data(), leads_.size(), lead.mono.block());
      if (idx < 0) {
        if (!tail) {
          rem.insert(rem.end(), std::make_move_iterator(work.begin() + static_cast<std::ptrdiff_t>(pos)),
                     std::make_move_iterator(work.end()));
          return rem;
        }
        rem.push_back(std::move(work[pos]));
        ++pos;
        continue;
      }
      const auto& g = polys_[static_cast<std::size_t>(idx)]->terms();
      const Monomial shift = lead.mono / g[0].mono;
      const std::uint32_t shift_w = lead.weight - g[0].weight;
      const Rational factor = -(lead.coef / g[0].coef);
      merge_scaled(work, pos + 1, g, shift, shift_w, factor, next);
      std::swap(work, next);
      pos = 0;
    }
    return rem;
  }

 private:
  // next = work[from..] + factor * shift * g[1..]
  void merge_scaled(const std::vector<Term>& work, std::size_t from, const std::vector<Term>& g,
                    const Monomial& shift, std::uint32_t shift_w, const Rational& factor,
                    std::vector<Term>& next) const {
    next.clear();
    next.reserve(work.size() - from + g.size());
    std::size_t i = from, j = 1;
    Term pending;
    auto shifted = [&](std::size_t idx) {
      return Term{g[idx].mono * shift, g[idx].coef * factor, g[idx].weight + shift_w};
    };
    bool have = false;
    while (i < work.size() && j < g.size()) {
      if (!have) {
        pending = shifted(j);
        have = true;
      }
      const int c = ring_.compare(work[i].mono, work[i].weight, pending.mono, pending.weight);
      if (c > 0) {
        next.push_back(work[i++]);
      } else if (c < 0) {
        next.push_back(std::move(pending));
        have = false;
        ++j;
      } else {
        Rational s = work[i].coef + pending.coef;
        if (!s.is_zero()) next.push_back(Term{work[i].mono, std::move(s), work[i].weight});
        ++i;
        ++j;
        have = false;
      }
    }
    for (; i < work.size(); ++i) next.push_back(work[i]);
    if (have) {
      next.push_back(std::move(pending));
      ++j;
    }
    for (; j < g.size(); ++j) next.push_back(shifted(j));
  }

  const Ring& ring_;
  std::vector<const Polynomial*> polys_;
  std::vector<simd::ExponentBlock> leads_;
};

Polynomial make_monic(const RingPtr& ring, std::vector<Term> terms) {
  if (terms.empty()) return Polynomial(ring);
  if (!terms.front().coef.is_one()) {
    const Rational inv = terms.front().coef.inverse();
    for (auto& t : terms) t.coef *= inv;
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced_elements)
    : ring_(std::move(ring)), elements_(std::move(reduced_elements)) {
  for (const auto& e : elements_) {
    if (!same_ring(e.ring(), ring_)) throw RingMismatch("basis element from a different ring");
    if (e.is_zero()) throw std::invalid_argument("zero element in a Groebner basis");
    leads_.push_back(e.leading_monomial().block());
  }
}

bool GroebnerBasis::is_unit_ideal() const {
  return elements_.size() == 1 && elements_[0].leading_monomial().is_one();
}

std::ptrdiff_t GroebnerBasis::find_reducer(const Monomial& m) const {
  return Monomial::kernels().find_divisor(leads_.data(), leads_.size(), m.block());
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring())) throw RingMismatch("normal form across rings");
  Reducer red(*gb.ring());
  for (const auto& g : gb.elements()) red.add(&g);
  return Polynomial(gb.ring(), red.reduce(f.terms()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  const Monomial l = lf.mono.lcm(lg.mono);
  return f.times_term(l / lf.mono, lf.coef.inverse()) - g.times_term(l / lg.mono, lg.coef.inverse());
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t lcm_weight;
  std::uint32_t sugar;
};

class BuchbergerState {
 public:
  explicit BuchbergerState(RingPtr ring) : ring_(std::move(ring)), reducer_(*ring_) {}

  void insert(Polynomial h, std::uint32_t sugar) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const Monomial& lh = polys_[hi].leading_monomial();

    // Candidate pairs (h, g) for active g.
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      const Monomial& lg = polys_[g].leading_monomial();
      c.push_back(Cand{g, lh.lcm(lg), lh.coprime(lg)});
    }
    // Criterion M: drop (h,g1) if another candidate's lcm divides it, unless
    // the leading monomials are coprime (kept for criterion F below).
    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b) {
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        }
        for (std::size_t b = 0; b < d.size() && keep; ++b) {
          if (d[b].lcm.divides(c[a].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[a]);
    }
    // Criterion B on the old pairs.
    std::vector<CriticalPair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        lh.lcm(polys_[p.i].leading_monomial()) != p.lcm &&
                        lh.lcm(polys_[p.j].leading_monomial()) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    // Product criterion on the new pairs.
    for (const auto& cand : d) {
      if (cand.coprime) continue;
      pairs_.push_back(make_pair(cand.g, hi, cand.lcm));
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    }
  }

  bool has_pairs() const { return !pairs_.empty(); }

  // Sugar selection for degree-compatible orders; the normal strategy
  // (smallest lcm first) otherwise, where sugar tends to drive coefficient
  // swell on elimination orders.
  CriticalPair pop_pair() {
    const bool graded = ring_->order().kind == OrderKind::Grevlex || ring_->order().kind == OrderKind::Grlex;
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs_.size(); ++a) {
      const auto& p = pairs_[a];
      const auto& q = pairs_[best];
      if (graded && p.sugar != q.sugar) {
        if (p.sugar < q.sugar) best = a;
        continue;
      }
      const int c = ring_->compare(p.lcm, p.lcm_weight, q.lcm, q.lcm_weight);
      if (c < 0 || (c == 0 && std::tie(p.j, p.i) < std::tie(q.j, q.i))) best = a;
    }
    CriticalPair out = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    return out;
  }

  /// Reduces a polynomial modulo the active elements; returns the monic
  /// remainder.
  Polynomial reduce(const Polynomial& f) {
    reducer_.clear();
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g]) reducer_.add(&polys_[g]);
    }
    return make_monic(ring_, reducer_.reduce(f.terms()));
  }

  const Polynomial& poly(std::size_t i) const { return polys_[i]; }

  std::vector<Polynomial> reduced_basis() {
    std::vector<std::size_t> live;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g]) live.push_back(g);
    }
    reducer_.clear();
    for (auto g : live) reducer_.add(&polys_[g]);
    std::vector<Polynomial> out;
    out.reserve(live.size());
    for (auto g : live) {
      const auto& terms = polys_[g].terms();
      std::vector<Term> tail(terms.begin() + 1, terms.end());
      std::vector<Term> reduced = reducer_.reduce(std::move(tail));
      reduced.insert(reduced.begin(), terms.front());
      out.push_back(make_monic(ring_, std::move(reduced)));
    }
    std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
      const Term& la = a.leading_term();
      const Term& lb = b.leading_term();
      return ring_->compare(la.mono, la.weight, lb.mono, lb.weight) > 0;
    });
    return out;
  }

  std::uint32_t sugar(std::size_t i) const { return sugar_[i]; }

 private:
  CriticalPair make_pair(std::size_t i, std::size_t j, const Monomial& l) {
    const std::uint32_t lw = ring_->weighted_degree(l);
    const std::uint32_t si = sugar_[i] + lw - polys_[i].leading_term().weight;
    const std::uint32_t sj = sugar_[j] + lw - polys_[j].leading_term().weight;
    return CriticalPair{i, j, l, lw, std::max(si, sj)};
  }

  RingPtr ring_;
  Reducer reducer_;
  std::vector<Polynomial> polys_;
  std::vector<std::uint32_t> sugar_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) return GroebnerBasis(ring, {});
  // Insert small leading monomials first; the result does not depend on it,
  // but fewer elements get superseded along the way.
  std::sort(gens.begin(), gens.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    const Term& la = a.leading_term();
    const Term& lb = b.leading_term();
    const int c = ring->compare(la.mono, la.weight, lb.mono, lb.weight);
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });

  BuchbergerState state(ring);
  for (const auto& g : gens) {
    Polynomial h = state.reduce(g);
    if (h.is_zero()) continue;
    if (h.leading_monomial().is_one()) return GroebnerBasis(ring, {Polynomial::constant(ring, Rational(1))});
    state.insert(std::move(h), g.weighted_degree());
  }
  while (state.has_pairs()) {
    const CriticalPair p = state.pop_pair();
    Polynomial h = state.reduce(s_polynomial(state.poly(p.i), state.poly(p.j)));
    if (h.is_zero()) continue;
    if (h.leading_monomial().is_one()) return GroebnerBasis(ring, {Polynomial::constant(ring, Rational(1))});
    const std::uint32_t sugar = std::max(p.sugar, h.weighted_degree());
    state.insert(std::move(h), sugar);
  }
  return GroebnerBasis(ring, state.reduced_basis());
}

GroebnerBasis buchberger(const Ideal& ideal, TermOrder order) {
  if (ideal.ring()->order() == order) return buchberger(ideal);
  const RingPtr target = ideal.ring()->with_order(order);
  std::vector<int> identity(ideal.ring()->size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  Ideal moved(target);
  for (const auto& g : ideal.generators()) moved.add(g.rebased(target, identity));
  return buchberger(moved);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (!normal_form(s_polynomial(el[i], el[j]), gb).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- quotient

bool is_zero_dimensional(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->size();
  std::vector<bool> pure(n, false);
  for (const auto& e : gb.elements()) {
    const Monomial& m = e.leading_monomial();
    if (m.is_one()) return true;
    int var = -1;
    bool single = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      if (var >= 0) single = false;
      var = static_cast<int>(i);
    }
    if (single && var >= 0) pure[static_cast<std::size_t>(var)] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

std::optional<std::vector<Monomial>> quotient_basis(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) return std::nullopt;
  std::vector<Monomial> out;
  if (gb.is_unit_ideal()) return out;
  const std::size_t n = gb.ring()->size();
  // Depth-first over exponent vectors built variable by variable; every
  // prefix of a standard monomial is standard, so pruning is exact.
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial{}, 0}};
  while (!stack.empty()) {
    auto [m, from] = stack.back();
    stack.pop_back();
    out.push_back(m);
    for (std::size_t v = from; v < n; ++v) {
      Monomial next = m;
      next.set(v, m[v] + 1);
      if (gb.find_reducer(next) < 0) stack.emplace_back(next, v);
    }
  }
  const Ring& r = *gb.ring();
  std::sort(out.begin(), out.end(), [&r](const Monomial& a, const Monomial& b) { return r.compare(a, b) < 0; });
  return out;
}

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& gb) {
  auto basis = quotient_basis(gb);
  if (!basis) return std::nullopt;
  return basis->size();
}

std::vector<Rational> quotient_coordinates(const Polynomial& nf, const std::vector<Monomial>& basis) {
  std::vector<Rational> out(basis.size());
  const Ring& r = *nf.ring();
  for (const auto& t : nf.terms()) {
    // basis is ascending in the term order
    auto it = std::lower_bound(basis.begin(), basis.end(), t.mono,
                               [&r](const Monomial& a, const Monomial& b) { return r.compare(a, b) < 0; });
    if (it == basis.end() || *it != t.mono) throw std::invalid_argument("term outside the standard basis");
    out[static_cast<std::size_t>(it - basis.begin())] = t.coef;
  }
  return out;
}

Polynomial minimal_polynomial(const Polynomial& f, const GroebnerBasis& gb, const RingPtr& target) {
  if (target->size() != 1) throw std::invalid_argument("minimal polynomial needs a one-variable ring");
  const auto basis = quotient_basis(gb);
  if (!basis) throw std::invalid_argument("minimal polynomial over a non-zero-dimensional ideal");

  // Echelon rows over the coordinates, each remembering which combination of
  // powers of f produced it.
  struct Row {
    std::size_t pivot;
    std::vector<Rational> coords;
    std::vector<Rational> combo;
  };
  std::vector<Row> rows;
  Polynomial power = normal_form(Polynomial::constant(f.ring(), Rational(1)), gb);
  const Polynomial fn = normal_form(f, gb);
  for (std::size_t k = 0; k <= basis->size(); ++k) {
    if (k > 0) power = normal_form(power * fn, gb);
    std::vector<Rational> v = quotient_coordinates(power, *basis);
    std::vector<Rational> combo(k + 1);
    combo[k] = Rational(1);
    for (const auto& row : rows) {
      if (v[row.pivot].is_zero()) continue;
      const Rational c = v[row.pivot] / row.coords[row.pivot];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * row.coords[i];
      for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] -= c * row.combo[i];
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
    if (nz == v.end()) {
      std::vector<std::pair<Monomial, Rational>> raw;
      for (std::size_t i = 0; i < combo.size(); ++i) {
        if (!combo[i].is_zero()) raw.emplace_back(Monomial{static_cast<unsigned>(i)}, combo[i]);
      }
      return Polynomial::from_terms(target, std::move(raw)).monic();
    }
    rows.push_back(Row{static_cast<std::size_t>(nz - v.begin()), std::move(v), std::move(combo)});
  }
  throw std::logic_error("no linear dependency among powers within the quotient dimension");
}

// ---------------------------------------------------------------- ideal ops

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const RingPtr& ring = a.ring();
  Polynomial rest = a;
  std::vector<std::pair<Monomial, Rational>> quot;
  const Term& lb = b.leading_term();
  while (!rest.is_zero()) {
    const Term& lr = rest.leading_term();
    if (!lb.mono.divides(lr.mono)) throw std::domain_error("inexact polynomial division");
    const Monomial m = lr.mono / lb.mono;
    const Rational c = lr.coef / lb.coef;
    quot.emplace_back(m, c);
    rest -= b.times_term(m, c);
  }
  return Polynomial::from_terms(ring, std::move(quot));
}

namespace {

std::string fresh_name(const Ring& ring, const std::string& base) {
  std::string name = base;
  for (int i = 0; ring.index_of(name); ++i) name = base + std::to_string(i);
  return name;
}

}  // namespace

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  const RingPtr& ring = ideal.ring();
  if (f.is_constant()) return ideal;
  if (ring->size() + 1 > kMaxVariables) throw std::invalid_argument("no room for the auxiliary variable");

  std::vector<std::string> names{fresh_name(*ring, "t")};
  std::vector<unsigned> weights{1};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  weights.insert(weights.end(), ring->weights().begin(), ring->weights().end());
  const RingPtr ext = Ring::make(names, weights, TermOrder::block(1));

  std::vector<int> up(ring->size());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i + 1);
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one = Polynomial::constant(ext, Rational(1));

  Ideal j(ext);
  for (const auto& g : ideal.generators()) j.add(t * g.rebased(ext, up));
  j.add((one - t) * f.rebased(ext, up));
  const GroebnerBasis gb = buchberger(j);

  std::vector<int> down(ext->size(), -1);
  for (std::size_t i = 1; i < down.size(); ++i) down[i] = static_cast<int>(i - 1);
  Ideal out(ring);
  for (const auto& e : gb.elements()) {
    if (e.leading_monomial()[0] != 0) continue;
    out.add(divide_exact(e.rebased(ring, down), f));
  }
  return out;
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  GroebnerBasis current = buchberger(ideal);
  const auto dim = quotient_dimension(current);
  const std::size_t bound = dim ? *dim + 1 : 64;
  for (std::size_t step = 0; step < bound; ++step) {
    GroebnerBasis next = buchberger(colon(current.ideal(), f));
    if (next == current) return current.ideal();
    current = std::move(next);
  }
  throw std::runtime_error("saturation did not stabilize within " + std::to_string(bound) + " steps");
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep) {
  const RingPtr& ring = ideal.ring();
  if (keep.empty()) throw std::invalid_argument("eliminate needs at least one kept variable");
  std::vector<bool> kept(ring->size(), false);
  for (const auto& name : keep) kept[ring->require_index(name)] = true;

  std::vector<std::string> elim_names, kept_names, names;
  std::vector<unsigned> elim_w, kept_w, weights;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    (kept[i] ? kept_names : elim_names).push_back(ring->names()[i]);
    (kept[i] ? kept_w : elim_w).push_back(ring->weights()[i]);
  }
  const RingPtr target = Ring::make(kept_names, kept_w, TermOrder::grevlex());
  std::vector<int> to_target(ring->size(), -1);
  for (std::size_t i = 0, k = 0; i < ring->size(); ++i) {
    if (kept[i]) to_target[i] = static_cast<int>(k++);
  }
  if (elim_names.empty()) {
    Ideal out(target);
    for (const auto& g : ideal.generators()) out.add(g.rebased(target, to_target));
    return out;
  }

  names = elim_names;
  names.insert(names.end(), kept_names.begin(), kept_names.end());
  weights = elim_w;
  weights.insert(weights.end(), kept_w.begin(), kept_w.end());
  const RingPtr blocked = Ring::make(names, weights, TermOrder::block(elim_names.size()));
  std::vector<int> to_blocked(ring->size());
  for (std::size_t i = 0, e = 0, k = elim_names.size(); i < ring->size(); ++i) {
    to_blocked[i] = static_cast<int>(kept[i] ? k++ : e++);
  }
  Ideal moved(blocked);
  for (const auto& g : ideal.generators()) moved.add(g.rebased(blocked, to_blocked));
  const GroebnerBasis gb = buchberger(moved);

  std::vector<int> back(blocked->size(), -1);
  for (std::size_t k = 0; k < kept_names.size(); ++k) back[elim_names.size() + k] = static_cast<int>(k);
  Ideal out(target);
  const simd::LaneMask head = static_cast<simd::LaneMask>((1u << elim_names.size()) - 1u);
  for (const auto& e : gb.elements()) {
    const Monomial& lm = e.leading_monomial();
    bool uses_head = false;
    for (std::size_t i = 0; i < 32 && ((head >> i) != 0); ++i) {
      if (((head >> i) & 1u) && lm[i] != 0) uses_head = true;
    }
    if (!uses_head) out.add(e.rebased(target, back));
  }
  return out;
}

}  // namespace igq::algebra
