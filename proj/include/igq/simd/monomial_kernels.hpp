#pragma once

// Exponent-vector kernels used by the polynomial and Groebner layers.
//
// A monomial is a fixed block of 16 unsigned 16-bit exponents (one 256-bit
// register). Every kernel has a scalar reference implementation; vector
// variants (AVX2 on x86-64, NEON on AArch64) are selected once at runtime and
// must agree bit-for-bit with the scalar path.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace igq::simd {

inline constexpr std::size_t kLanes = 16;
/// Exponents stay below 2^15 so that signed 16-bit multiply-add is exact.
inline constexpr std::uint16_t kMaxExponent = 0x7FFF;

struct alignas(32) ExponentBlock {
  std::array<std::uint16_t, kLanes> e{};

  friend bool operator==(const ExponentBlock& a, const ExponentBlock& b) { return a.e == b.e; }
  friend bool operator!=(const ExponentBlock& a, const ExponentBlock& b) { return a.e != b.e; }
};

/// Bit i set selects lane i.
using LaneMask = std::uint32_t;
inline constexpr LaneMask kAllLanes = 0xFFFFu;

struct MonomialKernels {
  std::string_view name;
  /// a divides b (a_i <= b_i for every lane).
  bool (*divides)(const ExponentBlock& a, const ExponentBlock& b);
  void (*lcm)(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out);
  /// out = a + b; returns false when any lane would exceed kMaxExponent.
  bool (*mul)(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out);
  /// out = b - a; caller guarantees a divides b.
  void (*quotient)(const ExponentBlock& a, const ExponentBlock& b, ExponentBlock& out);
  bool (*coprime)(const ExponentBlock& a, const ExponentBlock& b);
  std::uint32_t (*dot)(const ExponentBlock& a, const ExponentBlock& weights);
  /// Lowest / highest lane index inside `mask` where a and b differ, or -1.
  int (*first_difference)(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask);
  int (*last_difference)(const ExponentBlock& a, const ExponentBlock& b, LaneMask mask);
  /// Index of the first block in [blocks, blocks + count) dividing m, or -1.
  std::ptrdiff_t (*find_divisor)(const ExponentBlock* blocks, std::size_t count,
                                 const ExponentBlock& m);
};

const MonomialKernels& scalar_kernels();
/// nullptr when the variant was not compiled in or the CPU lacks support.
const MonomialKernels* avx2_kernels();
const MonomialKernels* neon_kernels();

/// All variants usable on this machine, scalar first.
std::vector<const MonomialKernels*> available_kernels();

/// Runtime-selected kernel table (widest supported variant).
const MonomialKernels& active_kernels();

}  // namespace igq::simd
