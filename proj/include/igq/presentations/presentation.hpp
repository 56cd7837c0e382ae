#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "igq/algebra/groebner.hpp"

namespace igq::presentations {

using algebra::Ideal;
using algebra::Polynomial;
using algebra::Rational;
using algebra::RingPtr;

enum class Variant { ClassicalI, ClassicalII, QuantumI, QuantumII };
enum class QMode { Specialize1, Symbolic };

struct PresentationSpec {
  int n = 2;
  Variant variant = Variant::QuantumI;
  QMode q_mode = QMode::Specialize1;
};

std::string variant_name(Variant v);
bool is_quantum(Variant v);
bool uses_sigma(Variant v);

/// s1..s_{2n-2} with deg s_i = i; a trailing q of degree 2n-1 in symbolic mode.
RingPtr sigma_ring(int n, QMode mode);
/// a1, a2, b1..b_{n-2} with degrees 1, 2, 2i; trailing q in symbolic mode.
RingPtr ab_ring(int n, QMode mode);
RingPtr presentation_ring(const PresentationSpec& spec);

/// Generators exactly as displayed: the determinants for r in [3, 2n-2] and
/// the two square relations for the I-variants, or the coefficients of
/// x^2, ..., x^{2n} for the II-variants. `q_scale` multiplies the quantum
/// term (used by the sign search); ignored for classical variants.
Ideal build_presentation(const PresentationSpec& spec, const Rational& q_scale = Rational(1));

/// det(s_{1+j-i})_{1<=i,j<=r} in a sigma ring (s_0 = 1, s_k = 0 outside range).
Polynomial sigma_determinant(const RingPtr& ring, int n, int r);
/// s_{n-1}^2 + 2 sum_{i=1}^{n-1} (-1)^i s_{n-1+i} s_{n-1-i}.
Polynomial sigma_square_low(const RingPtr& ring, int n);
/// s_n^2 + 2 sum_{i=1}^{n-2} (-1)^i s_{n+i} s_{n-i}, without the quantum term.
Polynomial sigma_square_high(const RingPtr& ring, int n);
/// The class s_k in a sigma ring: 1 for k = 0, 0 outside [0, 2n-2].
Polynomial sigma(const RingPtr& ring, int n, int k);
/// q as an element of the ring: the constant 1 when specialized.
Polynomial q_element(const RingPtr& ring);

/// Image of s_k in an a,b ring: sum_i b_i e_{k-2i}, (e_0, e_1, e_2) = (1, -a1, a2).
Polynomial sigma_in_ab(int n, int k, const RingPtr& ab);

/// `# IG(2,2n) variant=... q=...` followed by the variable list.
std::string dump_header(const PresentationSpec& spec);

}  // namespace igq::presentations
