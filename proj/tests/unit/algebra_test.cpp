#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "igq/algebra/groebner.hpp"
#include "igq/algebra/linalg.hpp"
#include "igq/algebra/univariate.hpp"
#include "igq/presentations/presentation.hpp"

using namespace igq::algebra;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return Polynomial::parse(r, s); }

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, unsigned max_deg, int terms) {
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<std::pair<Monomial, Rational>> t;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < r->size(); ++v) m.set(v, e(rng));
    t.emplace_back(m, Rational(c(rng)));
  }
  return Polynomial::from_terms(r, std::move(t));
}

std::vector<Ideal> property_ideals() {
  std::vector<Ideal> out;
  auto xy = Ring::make({"x", "y", "z"});
  out.push_back(Ideal(xy, {P(xy, "1*x^2 + -1*y*z"), P(xy, "1*y^2 + -1*x*z + 1*z"), P(xy, "1*z^3 + -1*x")}));
  using namespace igq::presentations;
  for (int n = 2; n <= 4; ++n)
    for (Variant v : {Variant::ClassicalI, Variant::ClassicalII, Variant::QuantumI, Variant::QuantumII})
      out.push_back(build_presentation({n, v, QMode::Specialize1}));
  return out;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7").str() == "-7/1");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS(Rational(0).inverse());
  }

  TEST_CASE("exact beyond machine words") {
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000000007);
    Rational back = big;
    for (int i = 0; i < 40; ++i) back /= Rational(1000000007);
    CHECK(back.is_one());
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("text round trip") {
    auto r = Ring::make({"x", "y"});
    Polynomial f = P(r, "3/2*x^2*y + -1*y^3 + 7");
    CHECK(Polynomial::parse(r, f.str()) == f);
    CHECK(P(r, "0").str() == "0");
    CHECK_THROWS(Polynomial::parse(r, "2*w"));
  }

  TEST_CASE("arithmetic identities") {
    auto r = Ring::make({"x", "y", "z"});
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
      Polynomial f = random_poly(r, rng, 3, 5), g = random_poly(r, rng, 3, 5), h = random_poly(r, rng, 2, 4);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f * g == g * f);
      CHECK((f - f).is_zero());
      CHECK((f * g).derivative(0) == f.derivative(0) * g + f * g.derivative(0));
    }
  }

  TEST_CASE("substitution is a ring map") {
    auto r = Ring::make({"x", "y"});
    Polynomial f = P(r, "1*x^2 + -2*x*y"), g = P(r, "1*y + 1");
    std::vector<Polynomial> images = {P(r, "1*x + 1*y"), P(r, "1*x*y")};
    CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
  }

  TEST_CASE("ring mismatch is an error") {
    auto r = Ring::make({"x"});
    auto s = Ring::make({"y"});
    CHECK_THROWS(Polynomial::variable(r, 0) + Polynomial::variable(s, 0));
  }
}

TEST_SUITE("groebner") {
  TEST_CASE("small bases") {
    auto r = Ring::make({"x", "y"});
    auto gb = buchberger(Ideal(r, {P(r, "1*x^2 + -1*y"), P(r, "1*y")}));
    REQUIRE(gb.size() == 2);
    CHECK(gb.elements()[0] == P(r, "1*x^2"));
    CHECK(gb.elements()[1] == P(r, "1*y"));

    auto principal = buchberger(Ideal(r, {P(r, "3*x*y + 6*y^2")}));
    REQUIRE(principal.size() == 1);
    CHECK(principal.elements()[0] == P(r, "1*x*y + 2*y^2"));

    CHECK(quotient_dimension(buchberger(Ideal(r, {P(r, "1*x^2"), P(r, "1*y^3")}))) == 6u);
    CHECK_FALSE(quotient_dimension(buchberger(Ideal(r, {P(r, "1*x^2")}))).has_value());
    CHECK(normal_form(Polynomial::constant(r, 1), buchberger(Ideal(r, {P(r, "1*x")}))) ==
          Polynomial::constant(r, 1));
    CHECK(buchberger(Ideal(r, {P(r, "1*x + 1"), P(r, "1*x")})).is_unit_ideal());
  }

  TEST_CASE("basis is independent of generator order") {
    std::mt19937 rng(11);
    for (const Ideal& I : property_ideals()) {
      const GroebnerBasis ref = buchberger(I);
      std::vector<Polynomial> gens = I.generators();
      for (int s = 0; s < 10; ++s) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(buchberger(Ideal(I.ring(), gens)) == ref);
      }
    }
  }

  TEST_CASE("Buchberger criterion and reducedness") {
    for (const Ideal& I : property_ideals()) {
      const GroebnerBasis gb = buchberger(I);
      CHECK(satisfies_buchberger_criterion(gb));
      for (std::size_t i = 0; i < gb.size(); ++i) {
        CHECK(gb.elements()[i].leading_coefficient().is_one());
        for (const Term& t : gb.elements()[i].terms())
          for (std::size_t j = 0; j < gb.size(); ++j)
            if (j != i) CHECK_FALSE(gb.elements()[j].leading_monomial().divides(t.mono));
      }
      for (const Polynomial& g : I.generators()) CHECK(normal_form(g, gb).is_zero());
    }
  }

  TEST_CASE("normal form is idempotent, linear and multiplicative") {
    std::mt19937 rng(5);
    for (const Ideal& I : property_ideals()) {
      const GroebnerBasis gb = buchberger(I);
      for (int t = 0; t < 5; ++t) {
        Polynomial f = random_poly(I.ring(), rng, 3, 4), g = random_poly(I.ring(), rng, 3, 4);
        const Polynomial nf = normal_form(f, gb), ng = normal_form(g, gb);
        CHECK(normal_form(nf, gb) == nf);
        CHECK(normal_form(f + g.scaled(Rational(2, 3)), gb) == nf + ng.scaled(Rational(2, 3)));
        CHECK(normal_form(f * g, gb) == normal_form(nf * ng, gb));
      }
    }
  }

  TEST_CASE("quotient dimension does not depend on the graded order") {
    for (const Ideal& I : property_ideals()) {
      auto a = quotient_dimension(buchberger(I, TermOrder::grevlex()));
      auto b = quotient_dimension(buchberger(I, TermOrder::grlex()));
      CHECK(a == b);
    }
  }

  TEST_CASE("colon and saturation") {
    auto r = Ring::make({"x", "y"});
    Ideal I(r, {P(r, "1*x^2*y")});
    CHECK(buchberger(colon(I, Polynomial::constant(r, 1))) == buchberger(I));
    Ideal sat = saturate(I, P(r, "1*y"));
    CHECK(buchberger(sat) == buchberger(Ideal(r, {P(r, "1*x^2")})));
    CHECK(buchberger(colon(sat, P(r, "1*y"))) == buchberger(sat));

    Ideal J(r, {P(r, "1*x^3 + -1*x"), P(r, "1*y^2 + -1*x*y")});
    Ideal sJ = saturate(J, P(r, "1*x"));
    CHECK(buchberger(colon(sJ, P(r, "1*x"))) == buchberger(sJ));
  }

  TEST_CASE("elimination") {
    auto r = Ring::make({"y", "x"});
    Ideal e = eliminate(Ideal(r, {P(r, "1*y + -1*x^2"), P(r, "1*y^2 + -3")}), {"x"});
    REQUIRE(e.generators().size() == 1);
    CHECK(e.generators()[0].str() == "1/1*x^4 + -3/1");

    auto s = Ring::make({"x", "y"});
    Ideal lin = eliminate(Ideal(s, {P(s, "1*x + -1"), P(s, "1*y + -2")}), {"y"});
    REQUIRE(lin.generators().size() == 1);
    CHECK(lin.generators()[0].str() == "1/1*y^1 + -2/1");

    Ideal all = eliminate(Ideal(s, {P(s, "1*x^2 + -1*y"), P(s, "1*y^2 + -1")}), {"x", "y"});
    CHECK(buchberger(all) == buchberger(Ideal(s, {P(s, "1*x^2 + -1*y"), P(s, "1*y^2 + -1")})));
  }

  TEST_CASE("minimal polynomial matches elimination of w - f") {
    auto r = Ring::make({"x", "y"});
    Ideal I(r, {P(r, "1*x^2 + -2"), P(r, "1*y^2 + -1*x")});
    auto w = Ring::make({"w"});
    Polynomial f = P(r, "1*x + 3*y");
    Polynomial mp = minimal_polynomial(f, buchberger(I), w);

    auto big = Ring::make({"x", "y", "w"});
    std::vector<int> map = {0, 1};
    Ideal J(big, {I.generators()[0].rebased(big, map), I.generators()[1].rebased(big, map),
                  P(big, "1*w + -1*x + -3*y")});
    Ideal e = eliminate(J, {"w"});
    REQUIRE(e.generators().size() == 1);
    CHECK(e.generators()[0].str() == mp.str());
    CHECK(mp.total_degree() == 4u);
  }

  TEST_CASE("exact division") {
    auto r = Ring::make({"x", "y"});
    CHECK(divide_exact(P(r, "1*x^2 + -1*y^2"), P(r, "1*x + 1*y")) == P(r, "1*x + -1*y"));
    CHECK_THROWS_AS(divide_exact(P(r, "1*x^2 + 1"), P(r, "1*x")), std::domain_error);
  }

  TEST_CASE("ideal text round trip") {
    auto r = Ring::make({"x", "y"});
    Ideal I(r, {P(r, "1*x^2 + -1/3*y"), P(r, "2*y^3")});
    Ideal back = Ideal::parse(r, "# comment\n" + I.str());
    REQUIRE(back.generators().size() == 2);
    CHECK(back.generators()[0] == I.generators()[0]);
    CHECK(back.generators()[1] == I.generators()[1]);
  }
}

TEST_SUITE("univariate") {
  TEST_CASE("gcd and squarefree part") {
    auto r = Ring::make({"z"});
    CHECK(univ_gcd(P(r, "1*z^2 + -1"), P(r, "1*z + -1")) == P(r, "1*z + -1"));
    CHECK(distinct_root_count(P(r, "1*z^4 + -2*z^2 + 1")) == 2u);
    CHECK_THROWS_AS(univ_gcd(Polynomial(r), Polynomial(r)), std::domain_error);
    CHECK_THROWS_AS(distinct_root_count(Polynomial(r)), std::domain_error);
    CHECK(distinct_root_count(P(r, "5")) == 0u);
  }

  TEST_CASE("squarefree part properties on random products") {
    auto r = Ring::make({"z"});
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> root(-6, 6), mult(1, 3);
    for (int t = 0; t < 25; ++t) {
      Polynomial f = Polynomial::constant(r, 1);
      std::set<int> roots;
      for (int i = 0; i < 4; ++i) {
        int a = root(rng);
        roots.insert(a);
        f *= (Polynomial::variable(r, 0) - Polynomial::constant(r, a)).pow(mult(rng));
      }
      Polynomial s = squarefree_part(f);
      CHECK(distinct_root_count(f) == roots.size());
      CHECK_NOTHROW(univ_divide_exact(f, s));
      CHECK(univ_gcd(s, s.derivative(0)).is_constant());
    }
  }

  TEST_CASE("the substitution polynomial at n = 2") {
    auto r = Ring::make({"z"});
    Polynomial z = Polynomial::variable(r, 0);
    Polynomial f = (z.pow(4) - z).pow(4) - z.pow(4);
    CHECK(distinct_root_count(f) == 10u);
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("rank") {
    RationalMatrix m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(rank(m) == 2u);
    CHECK(rank(RationalMatrix{}) == 0u);
  }
}
