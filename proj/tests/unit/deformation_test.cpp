#include <doctest.h>

#include <random>

#include "igq/deformation/first_order.hpp"

using namespace igq::deformation;

namespace {

QHElement random_element(const ContextPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<int> k(0, 2 * ctx->n() - 2);
  QHElement x = QHElement::zero(ctx);
  for (int i = 0; i < 3; ++i)
    x = x + star0(QHElement::sigma(ctx, k(rng)), QHElement::sigma(ctx, k(rng))) * Rational(c(rng));
  return x;
}

FirstOrderElement tracked(const ContextPtr& ctx, int k) {
  return FirstOrderElement::of(ctx, k == 0 ? ClassTag::unit() : ClassTag::special(k));
}

}  // namespace

TEST_SUITE("deformation") {
  TEST_CASE("small quantum product is a commutative associative unital product") {
    std::mt19937 rng(29);
    for (int n = 2; n <= 4; ++n) {
      auto ctx = make_context(n);
      for (int t = 0; t < 8; ++t) {
        QHElement x = random_element(ctx, rng), y = random_element(ctx, rng), z = random_element(ctx, rng);
        CHECK(star0(QHElement::unit(ctx), x) == x);
        CHECK(star0(x, y) == star0(y, x));
        CHECK(star0(star0(x, y), z) == star0(x, star0(y, z)));
      }
    }
  }

  TEST_CASE("mixing contexts is an error") {
    auto a = make_context(3);
    auto b = make_context(4);
    CHECK_THROWS(star0(QHElement::unit(a), QHElement::unit(b)));
  }

  TEST_CASE("the extra class has pure degree 2n-3") {
    for (int n = 3; n <= 5; ++n) {
      auto ctx = make_context(n, QMode::Symbolic);
      QHElement p = QHElement::sigma_prime(ctx);
      CHECK_FALSE(p.is_zero());
      CHECK(p.value().is_weighted_homogeneous());
      CHECK(p.value().weighted_degree() == static_cast<std::uint32_t>(2 * n - 3));
    }
  }

  TEST_CASE("correction table") {
    const int n = 4;
    CHECK(tau_correction(n, ClassTag::special(n - 1), ClassTag::special(n - 1)) == Rational(1));
    CHECK(tau_correction(n, ClassTag::special(1), ClassTag::special(2)) == Rational(0));
    CHECK(tau_correction(n, ClassTag::unit(), ClassTag::special(3)) == Rational(0));
    CHECK(tau_correction(n, ClassTag::prime(n), ClassTag::special(1)) == Rational(1));
    CHECK(tau_correction(n, ClassTag::special(1), ClassTag::prime(n)) == Rational(1));
    CHECK_THROWS_AS(tau_correction(n, ClassTag::prime(n), ClassTag::special(2)), UntrackedCorrection);
    CHECK_THROWS_AS(tau_correction(n, ClassTag::special(5), ClassTag::special(5)), UntrackedCorrection);
  }

  TEST_CASE("first-order products") {
    const int n = 4;
    auto ctx = make_context(n);
    auto x = star_tau(tracked(ctx, 1), tracked(ctx, 2));
    CHECK(x.p0() == star0(QHElement::sigma(ctx, 1), QHElement::sigma(ctx, 2)));
    CHECK(x.p1().is_zero());

    auto y = star_tau(tracked(ctx, 2 * n - 3), tracked(ctx, 1));
    CHECK(y.p1() == QHElement::q(ctx));

    auto u = star_tau(tracked(ctx, 3), tracked(ctx, 0));
    CHECK(u.p0() == QHElement::sigma(ctx, 3));
    CHECK(u.p1().is_zero());

    for (int i = 1; i <= 2 * n - 3; ++i)
      for (int j = 1; i + j <= 2 * n - 2; ++j) {
        auto a = star_tau(tracked(ctx, i), tracked(ctx, j));
        auto b = star_tau(tracked(ctx, j), tracked(ctx, i));
        CHECK(a.p0() == b.p0());
        CHECK(a.p1() == b.p1());
      }

    auto sum = tracked(ctx, 1) + tracked(ctx, 2);
    auto lhs = star_tau(sum, tracked(ctx, 3));
    auto rhs = star_tau(tracked(ctx, 1), tracked(ctx, 3)) + star_tau(tracked(ctx, 2), tracked(ctx, 3));
    CHECK(lhs.p0() == rhs.p0());
    CHECK(lhs.p1() == rhs.p1());

    FirstOrderElement untagged(QHElement::sigma(ctx, 1), QHElement::zero(ctx));
    CHECK_THROWS_AS(star_tau(untagged, tracked(ctx, 1)), UntrackedCorrection);
    CHECK_THROWS(tracked(ctx, 1).retagged({{Rational(1), ClassTag::special(2)}}));
  }

  TEST_CASE("deformed relations") {
    for (int n = 3; n <= 5; ++n) {
      auto r = verify_lemma_presentation(n);
      CAPTURE(n);
      CHECK(r.ok);
      CHECK(r.sigma_t_scalar == (n % 2 == 0 ? 1 : -1));
      CHECK(r.chain_t_coefficient == "0");
      CHECK(r.chain_t0 == "0");
      CHECK(r.telescoping_ok);
      CHECK(regularity_corank(n).t_entry == -r.sigma_t_scalar);
    }
    CHECK_THROWS(verify_lemma_presentation(2));
  }

  TEST_CASE("t-coefficients are degree-shifted multiples of q in symbolic mode") {
    for (int n = 3; n <= 5; ++n) {
      auto ctx = make_context(n, QMode::Symbolic);
      FirstOrderElement low = star_tau(tracked(ctx, n - 1), tracked(ctx, n - 1));
      for (int i = 1; i <= n - 1; ++i) {
        auto term = star_tau(tracked(ctx, n - 1 + i), tracked(ctx, n - 1 - i)) * Rational(2);
        low = i % 2 == 0 ? low + term : low - term;
      }
      CAPTURE(n);
      REQUIRE_FALSE(low.p1().is_zero());
      CHECK(low.p1().value().is_weighted_homogeneous());
      CHECK(low.p1().value().weighted_degree() == static_cast<std::uint32_t>((2 * n - 2) + 1));
      CHECK(verify_lemma_presentation(n, QMode::Symbolic).ok);
    }
  }

  TEST_CASE("regularity corank") {
    for (int n = 2; n <= 6; ++n) {
      auto r = regularity_corank(n);
      CAPTURE(n);
      CHECK(r.corank == 1u);
      CHECK(r.columns == static_cast<std::size_t>(2 * n - 1));
      CHECK(r.matrix.size() == static_cast<std::size_t>(2 * n - 2));
    }
  }
}
