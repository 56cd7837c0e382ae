#include "igq/algebra/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace igq::algebra {

std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      const Rational f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace igq::algebra
