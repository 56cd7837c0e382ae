#include "igq/simd/monomial_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define IGQ_HAVE_AVX2_PATH 1
#include <immintrin.h>
#else
#define IGQ_HAVE_AVX2_PATH 0
#endif

namespace igq::simd {

#if IGQ_HAVE_AVX2_PATH

// Functions carry target attributes instead of compiling this file with
// -mavx2, so no AVX2 code can leak into inline symbols shared with other
// translation units.
#define IGQ_AVX2 __attribute__((target("avx2"), always_inline)) inline
#define IGQ_AVX2_FN __attribute__((target("avx2")))

namespace {

IGQ_AVX2 __m256i load(const ExponentBlock& b) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(b.e.data()));
}

IGQ_AVX2 void store(ExponentBlock& b, __m256i v) {
  _mm256_store_si256(reinterpret_cast<__m256i*>(b.e.data()), v);
}

// Lane mask (one bit per 16-bit lane) to byte mask as produced by movemask_epi8.
inline std::uint32_t lanes_to_bytes(LaneMask mask) {
  std::uint32_t x = mask & 0xFFFFu;
  x = (x | (x << 8)) & 0x00FF00FFu;
  x = (x | (x << 4)) & 0x0F0F0F0Fu;
  x = (x | (x << 2)) & 0x33333333u;
  x = (x | (x << 1)) & 0x55555555u;
  return x | (x << 1);
}

IGQ_AVX2 bool divides_v(__m256i a, __m256i b) {
  const __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(a, b), b);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(eq)) == 0xFFFFFFFFu;
}

IGQ_AVX2_FN bool divides(const ExponentBlock& a, const ExponentBlock& b) {
  return divides_v(load(a), load(b));
}

IGQ_AVX2_FN void lcm(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out) {
  store(out, _mm256_max_epu16(load(a), load(b)));
}

IGQ_AVX2_FN bool mul(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out) {
  const __m256i s = _mm256_add_epi16(load(a), load(b));
  store(out, s);
  return _mm256_testz_si256(s, _mm256_set1_epi16(static_cast<short>(0x8000))) != 0;
}

IGQ_AVX2_FN void quotient(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out) {
  store(out, _mm256_sub_epi16(load(b), load(a)));
}

IGQ_AVX2_FN bool coprime(const ExponentBlock& a, const ExponentBlock& b) {
  const __m256i m = _mm256_min_epu16(load(a), load(b));
  return _mm256_testz_si256(m, m) != 0;
}

IGQ_AVX2_FN std::uint32_t dot(const ExponentBlock& a, const ExponentBlock& w) {
  const __m256i prod = _mm256_madd_epi16(load(a), load(w));
  const __m128i lo = _mm256_castsi256_si128(prod);
  const __m128i hi = _mm256_extracti128_si256(prod, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0x4E));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0xB1));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

IGQ_AVX2 std::uint32_t diff_bytes(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask) {
  const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(load(a), load(b))));
  return ~eq & lanes_to_bytes(mask);
}

IGQ_AVX2_FN int first_difference(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask) {
  const std::uint32_t d = diff_bytes(a, b, mask);
  return d == 0 ? -1 : __builtin_ctz(d) / 2;
}

IGQ_AVX2_FN int last_difference(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask) {
  const std::uint32_t d = diff_bytes(a, b, mask);
  return d == 0 ? -1 : (31 - __builtin_clz(d)) / 2;
}

IGQ_AVX2_FN std::ptrdiff_t find_divisor(const ExponentBlock* blocks, std::size_t count,
                                        const ExponentBlock& m) {
  const __m256i mv = load(m);
  for (std::size_t j = 0; j < count; ++j) {
    if (divides_v(load(blocks[j]), mv)) return static_cast<std::ptrdiff_t>(j);
  }
  return -1;
}

constexpr MonomialKernels kAvx2{
    "avx2", divides, lcm, mul, quotient, coprime, dot, first_difference, last_difference,
    find_divisor};

}  // namespace

const MonomialKernels* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2") != 0;
  return supported ? &kAvx2 : nullptr;
}

#else

const MonomialKernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace igq::simd
