#include "igq/simd/monomial_kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#define IGQ_HAVE_NEON_PATH 1
#include <arm_neon.h>
#else
#define IGQ_HAVE_NEON_PATH 0
#endif

namespace igq::simd {

#if IGQ_HAVE_NEON_PATH

namespace {

struct Pair {
  uint16x8_t lo;
  uint16x8_t hi;
};

inline Pair load(const ExponentBlock& b) { return {vld1q_u16(b.e.data()), vld1q_u16(b.e.data() + 8)}; }

inline void store(ExponentBlock& b, const Pair& p) {
  vst1q_u16(b.e.data(), p.lo);
  vst1q_u16(b.e.data() + 8, p.hi);
}

inline bool divides_v(const Pair& a, const Pair& b) {
  const uint16x8_t le = vandq_u16(vcleq_u16(a.lo, b.lo), vcleq_u16(a.hi, b.hi));
  return vminvq_u16(le) == 0xFFFF;
}

bool divides(const ExponentBlock& a, const ExponentBlock& b) { return divides_v(load(a), load(b)); }

void lcm(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out) {
  const Pair x = load(a), y = load(b);
  store(out, {vmaxq_u16(x.lo, y.lo), vmaxq_u16(x.hi, y.hi)});
}

bool mul(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out) {
  const Pair x = load(a), y = load(b);
  const Pair s{vaddq_u16(x.lo, y.lo), vaddq_u16(x.hi, y.hi)};
  store(out, s);
  return vmaxvq_u16(vmaxq_u16(s.lo, s.hi)) <= kMaxExponent;
}

void quotient(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out) {
  const Pair x = load(a), y = load(b);
  store(out, {vsubq_u16(y.lo, x.lo), vsubq_u16(y.hi, x.hi)});
}

bool coprime(const ExponentBlock& a, const ExponentBlock& b) {
  const Pair x = load(a), y = load(b);
  return vmaxvq_u16(vmaxq_u16(vminq_u16(x.lo, y.lo), vminq_u16(x.hi, y.hi))) == 0;
}

std::uint32_t dot(const ExponentBlock& a, const ExponentBlock& w) {
  const Pair x = load(a), y = load(w);
  uint32x4_t acc = vmull_u16(vget_low_u16(x.lo), vget_low_u16(y.lo));
  acc = vmlal_u16(acc, vget_high_u16(x.lo), vget_high_u16(y.lo));
  acc = vmlal_u16(acc, vget_low_u16(x.hi), vget_low_u16(y.hi));
  acc = vmlal_u16(acc, vget_high_u16(x.hi), vget_high_u16(y.hi));
  return vaddvq_u32(acc);
}

std::uint32_t diff_lanes(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask) {
  const Pair x = load(a), y = load(b);
  alignas(16) std::uint16_t eq[kLanes];
  vst1q_u16(eq, vceqq_u16(x.lo, y.lo));
  vst1q_u16(eq + 8, vceqq_u16(x.hi, y.hi));
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < kLanes; ++i) bits |= (eq[i] == 0 ? 1u : 0u) << i;
  return bits & mask;
}

int first_difference(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask) {
  const std::uint32_t d = diff_lanes(a, b, mask);
  return d == 0 ? -1 : __builtin_ctz(d);
}

int last_difference(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask) {
  const std::uint32_t d = diff_lanes(a, b, mask);
  return d == 0 ? -1 : 31 - __builtin_clz(d);
}

std::ptrdiff_t find_divisor(const ExponentBlock* blocks, std::size_t count, const ExponentBlock& m) {
  const Pair mv = load(m);
  for (std::size_t j = 0; j < count; ++j) {
    if (divides_v(load(blocks[j]), mv)) return static_cast<std::ptrdiff_t>(j);
  }
  return -1;
}

constexpr MonomialKernels kNeon{
    "neon", divides, lcm, mul, quotient, coprime, dot, first_difference, last_difference,
    find_divisor};

}  // namespace

const MonomialKernels* neon_kernels() { return &kNeon; }

#else

const MonomialKernels* neon_kernels() { return nullptr; }

#endif

}  // namespace igq::simd
