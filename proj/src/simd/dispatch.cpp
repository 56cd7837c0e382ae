#include "igq/simd/monomial_kernels.hpp"

namespace igq::simd {

std::vector<const MonomialKernels*> available_kernels() {
  std::vector<const MonomialKernels*> out{&scalar_kernels()};
  if (const auto* k = avx2_kernels()) out.push_back(k);
  if (const auto* k = neon_kernels()) out.push_back(k);
  return out;
}

const MonomialKernels& active_kernels() {
  static const MonomialKernels& selected = [] () -> const MonomialKernels& {
    if (const auto* k = avx2_kernels()) return *k;
    if (const auto* k = neon_kernels()) return *k;
    return scalar_kernels();
  }();
  return selected;
}

}  // namespace igq::simd
