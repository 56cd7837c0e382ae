#pragma once

#include <cstddef>
#include <vector>

#include "igq/algebra/rational.hpp"

namespace igq::algebra {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact rank over Q by Gaussian elimination. Rows may be empty only when
/// the matrix has no rows at all.
std::size_t rank(RationalMatrix m);

}  // namespace igq::algebra
