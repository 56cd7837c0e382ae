#include <doctest.h>

#include <random>

#include "igq/unfolding/milnor.hpp"

using namespace igq::unfolding;
using igq::algebra::Ring;

TEST_SUITE("unfolding") {
  TEST_CASE("Milnor algebras") {
    auto x = Ring::make({"x"});
    GermData cubic = milnor_data(Polynomial::parse(x, "1*x^3"));
    CHECK(cubic.milnor_number == 2u);
    CHECK(cubic.corank == 1u);
    CHECK(cubic.basis_text == std::vector<std::string>{"1/1", "1/1*x^1"});

    auto xy = Ring::make({"x", "y"});
    GermData morse = milnor_data(Polynomial::parse(xy, "1*x^2 + 1*y^2"));
    CHECK(morse.milnor_number == 1u);
    CHECK(morse.corank == 0u);
    CHECK(classify_germ(morse) == "A_1");

    for (unsigned m = 2; m <= 9; ++m) {
      GermData g = milnor_data(Polynomial::variable(x, 0).pow(m));
      CHECK(g.milnor_number == m - 1);
      CHECK(g.corank == (m == 2 ? 0u : 1u));
    }

    CHECK_THROWS_AS(milnor_data(Polynomial::parse(xy, "1*x^2")), NonIsolatedSingularity);
    CHECK_THROWS(milnor_data(Polynomial::parse(x, "1*x^2 + 1")));
  }

  TEST_CASE("labels") {
    CHECK(classify_corank1(2) == "A_2");
    CHECK(classify_corank1(1) == "A_1");
    CHECK_THROWS(classify_corank1(0));
    auto xyz = Ring::make({"x", "y", "z"});
    GermData d4 = milnor_data(Polynomial::parse(xyz, "1*x^3 + 1*y^3 + 1*z^3"));
    CHECK(d4.corank == 3u);
    CHECK_THROWS(classify_germ(d4));
  }

  TEST_CASE("Hessian corank is invariant under unimodular changes of variables") {
    auto xy = Ring::make({"x", "y"});
    const Polynomial x = Polynomial::variable(xy, 0), y = Polynomial::variable(xy, 1);
    const std::vector<Polynomial> germs = {x.pow(2) + y.pow(3), x.pow(2) + y.pow(2), x.pow(3) + y.pow(4),
                                           x * y + y.pow(5), x.pow(2) * y + y.pow(4)};
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> d(-3, 3);
    for (const Polynomial& f : germs) {
      const GermData base = milnor_data(f);
      for (int t = 0; t < 10; ++t) {
        // Product of elementary integer matrices: determinant 1.
        const int a = d(rng), b = d(rng);
        std::vector<Polynomial> images = {x + y.scaled(a), y};
        std::vector<Polynomial> second = {x, y + x.scaled(b)};
        Polynomial g = f.substitute(images).substitute(second);
        const GermData moved = milnor_data(g);
        CHECK(moved.corank == base.corank);
        CHECK(moved.milnor_number == base.milnor_number);
      }
    }
  }

  TEST_CASE("quantum factor matches A_{n-1}") {
    for (int n = 3; n <= 4; ++n) {
      QuantumFactorMatch m = match_quantum_factor(n);
      CHECK(m.ok);
      CHECK(m.label == "A_" + std::to_string(n - 1));
      CHECK(m.tangent_dim == 1u);
      CHECK(m.local_length == static_cast<std::size_t>(n - 1));
    }
    QuantumFactorMatch two = match_quantum_factor(2);
    CHECK(two.ok);
    CHECK(two.label == "A_1");
    CHECK(two.local_length == 1u);
  }
}
