#include "igq/simd/monomial_kernels.hpp"

namespace igq::simd {

namespace {

bool divides(const ExponentBlock& a, const ExponentBlock& b) {
  for (std::size_t i = 0; i < kLanes; ++i) {
    if (a.e[i] > b.e[i]) return false;
  }
  return true;
}

void lcm(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out) {
  for (std::size_t i = 0; i < kLanes; ++i) out.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
}

bool mul(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out) {
  bool ok = true;
  for (std::size_t i = 0; i < kLanes; ++i) {
    const std::uint32_t s = std::uint32_t{a.e[i]} + b.e[i];
    ok = ok && s <= kMaxExponent;
    out.e[i] = static_cast<std::uint16_t>(s);
  }
  return ok;
}

void quotient(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out) {
  for (std::size_t i = 0; i < kLanes; ++i) out.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
}

bool coprime(const ExponentBlock& a, const ExponentBlock& b) {
  for (std::size_t i = 0; i < kLanes; ++i) {
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  }
  return true;
}

std::uint32_t dot(const ExponentBlock& a, const ExponentBlock& w) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < kLanes; ++i) s += std::uint32_t{a.e[i]} * w.e[i];
  return s;
}

int first_difference(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask) {
  for (std::size_t i = 0; i < kLanes; ++i) {
    if (((mask >> i) & 1u) && a.e[i] != b.e[i]) return static_cast<int>(i);
  }
  return -1;
}

int last_difference(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask) {
  for (std::size_t i = kLanes; i-- > 0;) {
    if (((mask >> i) & 1u) && a.e[i] != b.e[i]) return static_cast<int>(i);
  }
  return -1;
}

std::ptrdiff_t find_divisor(const ExponentBlock* blocks, std::size_t count, const ExponentBlock& m) {
  for (std::size_t j = 0; j < count; ++j) {
    if (divides(blocks[j], m)) return static_cast<std::ptrdiff_t>(j);
  }
  return -1;
}

constexpr MonomialKernels kScalar{
    "scalar", divides, lcm, mul, quotient, coprime, dot, first_difference, last_difference,
    find_divisor};

}  // namespace

const MonomialKernels& scalar_kernels() { return kScalar; }

}  // namespace igq::simd
