#include <doctest.h>

#include <random>

#include "igq/simd/monomial_kernels.hpp"

using namespace igq::simd;

namespace {

ExponentBlock random_block(std::mt19937& rng, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> d(0, max_exp);
  ExponentBlock b;
  for (auto& e : b.e) e = static_cast<std::uint16_t>(d(rng));
  return b;
}

ExponentBlock bumped(std::mt19937& rng, ExponentBlock b) {
  std::uniform_int_distribution<unsigned> d(0, 2);
  for (auto& e : b.e) e = static_cast<std::uint16_t>(e + d(rng));
  return b;
}

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("scalar kernel is always available and listed first") {
    auto all = available_kernels();
    REQUIRE(!all.empty());
    CHECK(all.front() == &scalar_kernels());
    MESSAGE("active kernel: " << active_kernels().name);
  }

  TEST_CASE("every vector variant agrees with the scalar reference") {
    const MonomialKernels& ref = scalar_kernels();
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<LaneMask> mask_dist(0, kAllLanes);
    for (const MonomialKernels* k : available_kernels()) {
      CAPTURE(k->name);
      for (int trial = 0; trial < 4000; ++trial) {
        const unsigned max_exp = trial % 3 == 0 ? 3 : (trial % 3 == 1 ? 40 : kMaxExponent / 2);
        ExponentBlock a = random_block(rng, max_exp);
        ExponentBlock b = trial % 2 ? bumped(rng, a) : random_block(rng, max_exp);
        const LaneMask mask = mask_dist(rng);

        CHECK(k->divides(a, b) == ref.divides(a, b));
        CHECK(k->coprime(a, b) == ref.coprime(a, b));
        ExponentBlock x, y;
        k->lcm(a, b, x);
        ref.lcm(a, b, y);
        CHECK(x == y);
        CHECK(k->mul(a, b, x) == ref.mul(a, b, y));
        CHECK(x == y);
        if (ref.divides(a, b)) {
          k->quotient(a, b, x);
          ref.quotient(a, b, y);
          CHECK(x == y);
        }
        ExponentBlock w = random_block(rng, 255);
        if (max_exp <= 40) CHECK(k->dot(a, w) == ref.dot(a, w));
        CHECK(k->first_difference(a, b, mask) == ref.first_difference(a, b, mask));
        CHECK(k->last_difference(a, b, mask) == ref.last_difference(a, b, mask));
      }
    }
  }

  TEST_CASE("find_divisor agrees across variants") {
    std::mt19937 rng(7);
    std::vector<ExponentBlock> blocks;
    for (int i = 0; i < 37; ++i) blocks.push_back(random_block(rng, 4));
    for (const MonomialKernels* k : available_kernels()) {
      CAPTURE(k->name);
      for (int t = 0; t < 500; ++t) {
        ExponentBlock m = random_block(rng, 6);
        CHECK(k->find_divisor(blocks.data(), blocks.size(), m) ==
              scalar_kernels().find_divisor(blocks.data(), blocks.size(), m));
      }
    }
  }

  TEST_CASE("overflow is reported by mul") {
    ExponentBlock a, b, out;
    a.e[3] = kMaxExponent;
    b.e[3] = 1;
    for (const MonomialKernels* k : available_kernels()) CHECK_FALSE(k->mul(a, b, out));
  }
}
