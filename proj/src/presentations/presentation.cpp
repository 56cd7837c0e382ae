#include "igq/presentations/presentation.hpp"

#include <stdexcept>

namespace igq::presentations {

using algebra::Monomial;
using algebra::Ring;

namespace {

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("IG(2,2n) needs n >= 2");
  // 2n-2 sigma variables plus q and one auxiliary variable must fit the lanes.
  if (2 * n > static_cast<int>(algebra::kMaxVariables)) throw std::invalid_argument("n too large");
}

Polynomial ab_var(const RingPtr& ring, const std::string& name) { return Polynomial::variable(ring, name); }

// Coefficients of the II-identity, one per power x^{2j}, j = 1..n.
std::vector<Polynomial> presentation_two(const RingPtr& ring, int n, bool quantum, const Rational& q_scale) {
  const Polynomial a1 = ab_var(ring, "a1");
  const Polynomial a2 = ab_var(ring, "a2");
  const Polynomial one = Polynomial::constant(ring, Rational(1));
  const Polynomial zero(ring);
  // (1 + c1 x^2 + c2 x^4) * (1 + b_1 x^2 + ... + b_{n-2} x^{2n-4}) = 1 - q a1 x^{2n}
  const Polynomial c1 = a2 * Rational(2) - a1 * a1;
  const Polynomial c2 = a2 * a2;
  auto b = [&](int i) -> Polynomial {
    if (i == 0) return one;
    if (i < 0 || i > n - 2) return zero;
    return ab_var(ring, "b" + std::to_string(i));
  };
  std::vector<Polynomial> out;
  for (int j = 1; j <= n; ++j) {
    Polynomial g = b(j) + c1 * b(j - 1) + c2 * b(j - 2);
    if (quantum && j == n) g += q_element(ring) * a1 * q_scale;
    out.push_back(g);
  }
  return out;
}

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::ClassicalI: return "CLASSICAL_I";
    case Variant::ClassicalII: return "CLASSICAL_II";
    case Variant::QuantumI: return "QUANTUM_I";
    case Variant::QuantumII: return "QUANTUM_II";
  }
  return "?";
}

bool is_quantum(Variant v) { return v == Variant::QuantumI || v == Variant::QuantumII; }
bool uses_sigma(Variant v) { return v == Variant::ClassicalI || v == Variant::QuantumI; }

RingPtr sigma_ring(int n, QMode mode) {
  require_n(n);
  std::vector<std::string> names;
  std::vector<unsigned> weights;
  for (int i = 1; i <= 2 * n - 2; ++i) {
    names.push_back("s" + std::to_string(i));
    weights.push_back(static_cast<unsigned>(i));
  }
  if (mode == QMode::Symbolic) {
    names.emplace_back("q");
    weights.push_back(static_cast<unsigned>(2 * n - 1));
  }
  return Ring::make(names, weights);
}

RingPtr ab_ring(int n, QMode mode) {
  require_n(n);
  std::vector<std::string> names{"a1", "a2"};
  std::vector<unsigned> weights{1, 2};
  for (int i = 1; i <= n - 2; ++i) {
    names.push_back("b" + std::to_string(i));
    weights.push_back(static_cast<unsigned>(2 * i));
  }
  if (mode == QMode::Symbolic) {
    names.emplace_back("q");
    weights.push_back(static_cast<unsigned>(2 * n - 1));
  }
  return Ring::make(names, weights);
}

RingPtr presentation_ring(const PresentationSpec& spec) {
  // Classical rings never carry q.
  const QMode mode = is_quantum(spec.variant) ? spec.q_mode : QMode::Specialize1;
  return uses_sigma(spec.variant) ? sigma_ring(spec.n, mode) : ab_ring(spec.n, mode);
}

Polynomial q_element(const RingPtr& ring) {
  if (ring->index_of("q")) return Polynomial::variable(ring, "q");
  return Polynomial::constant(ring, Rational(1));
}

Polynomial sigma(const RingPtr& ring, int n, int k) {
  if (k == 0) return Polynomial::constant(ring, Rational(1));
  if (k < 0 || k > 2 * n - 2) return Polynomial(ring);
  return Polynomial::variable(ring, static_cast<std::size_t>(k - 1));
}

Polynomial sigma_determinant(const RingPtr& ring, int n, int r) {
  // Toeplitz determinant det(s_{1+j-i}) via the recurrence
  // D_r = sum_{k=1}^{r} (-1)^{k-1} s_k D_{r-k}, D_0 = 1.
  std::vector<Polynomial> d{Polynomial::constant(ring, Rational(1))};
  for (int m = 1; m <= r; ++m) {
    Polynomial acc(ring);
    for (int k = 1; k <= m; ++k) {
      const Polynomial term = sigma(ring, n, k) * d[static_cast<std::size_t>(m - k)];
      if (k % 2 == 1) acc += term; else acc -= term;
    }
    d.push_back(acc);
  }
  return d.back();
}

Polynomial sigma_square_low(const RingPtr& ring, int n) {
  Polynomial out = sigma(ring, n, n - 1) * sigma(ring, n, n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const Polynomial t = sigma(ring, n, n - 1 + i) * sigma(ring, n, n - 1 - i) * Rational(2);
    if (i % 2 == 0) out += t; else out -= t;
  }
  return out;
}

Polynomial sigma_square_high(const RingPtr& ring, int n) {
  Polynomial out = sigma(ring, n, n) * sigma(ring, n, n);
  for (int i = 1; i <= n - 2; ++i) {
    const Polynomial t = sigma(ring, n, n + i) * sigma(ring, n, n - i) * Rational(2);
    if (i % 2 == 0) out += t; else out -= t;
  }
  return out;
}

Ideal build_presentation(const PresentationSpec& spec, const Rational& q_scale) {
  const RingPtr ring = presentation_ring(spec);
  const int n = spec.n;
  const bool quantum = is_quantum(spec.variant);
  Ideal out(ring);
  if (uses_sigma(spec.variant)) {
    for (int r = 3; r <= 2 * n - 2; ++r) out.add(sigma_determinant(ring, n, r));
    out.add(sigma_square_low(ring, n));
    Polynomial high = sigma_square_high(ring, n);
    if (quantum) {
      const Rational sign((n + 1) % 2 == 0 ? 1 : -1);
      high += q_element(ring) * sigma(ring, n, 1) * (sign * q_scale);
    }
    out.add(high);
  } else {
    for (auto& g : presentation_two(ring, n, quantum, q_scale)) out.add(std::move(g));
  }
  return out;
}

Polynomial sigma_in_ab(int n, int k, const RingPtr& ab) {
  if (k < 1 || k > 2 * n - 2) throw std::out_of_range("sigma index out of range");
  const Polynomial a1 = Polynomial::variable(ab, "a1");
  const Polynomial a2 = Polynomial::variable(ab, "a2");
  auto e = [&](int j) -> Polynomial {
    switch (j) {
      case 0: return Polynomial::constant(ab, Rational(1));
      case 1: return -a1;
      case 2: return a2;
      default: return Polynomial(ab);
    }
  };
  Polynomial out(ab);
  for (int i = 0; 2 * i <= k; ++i) {
    if (i > n - 2) break;
    const Polynomial b = i == 0 ? Polynomial::constant(ab, Rational(1))
                                : Polynomial::variable(ab, "b" + std::to_string(i));
    out += b * e(k - 2 * i);
  }
  return out;
}

std::string dump_header(const PresentationSpec& spec) {
  const RingPtr ring = presentation_ring(spec);
  std::string q = !is_quantum(spec.variant) ? "0" : (spec.q_mode == QMode::Symbolic ? "symbolic" : "1");
  std::string out = "# IG(2," + std::to_string(2 * spec.n) + ") variant=" + variant_name(spec.variant) +
                    " q=" + q + "\n# vars";
  for (std::size_t i = 0; i < ring->size(); ++i) {
    out += ' ' + ring->names()[i] + ':' + std::to_string(ring->weights()[i]);
  }
  out += "\n# order " + ring->order().name() + "\n";
  return out;
}

}  // namespace igq::presentations
