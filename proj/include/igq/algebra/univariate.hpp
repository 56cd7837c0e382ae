#pragma once

#include <cstddef>
#include <vector>

#include "igq/algebra/polynomial.hpp"

namespace igq::algebra {

/// Dense coefficient vector, index = degree, no trailing zeros. The zero
/// polynomial is the empty vector.
using DenseUnivariate = std::vector<Rational>;

DenseUnivariate to_dense(const Polynomial& f);
Polynomial from_dense(const RingPtr& ring, const DenseUnivariate& c);

/// Monic gcd in a one-variable ring. Throws std::domain_error for gcd(0, 0).
Polynomial univ_gcd(const Polynomial& f, const Polynomial& g);
/// f / gcd(f, f'), monic. Throws std::domain_error for f = 0.
Polynomial squarefree_part(const Polynomial& f);
/// Number of distinct roots over an algebraic closure. Throws for f = 0.
std::size_t distinct_root_count(const Polynomial& f);
/// Exact quotient in one variable; throws std::domain_error on a remainder.
Polynomial univ_divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace igq::algebra
