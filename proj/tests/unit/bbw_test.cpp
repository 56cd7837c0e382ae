#include <doctest.h>

#include <random>

#include "igq/bbw/collections.hpp"

using namespace igq::bbw;

namespace {

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

// Semistandard tableaux of shape lambda with entries in 1..m, by brute force.
std::int64_t count_tableaux(const std::vector<int>& lambda, int m) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) t[r].assign(lambda[r], 0);
  std::int64_t count = 0;
  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      t[r][c] = v;
      self(self, idx + 1);
    }
  };
  fill(fill, 0);
  return count;
}

std::vector<Space> all_spaces() {
  return {Space::grassmannian(4), Space::grassmannian(5), Space::grassmannian(6), Space::grassmannian(7),
          Space::grassmannian(8), Space::isotropic(2),    Space::isotropic(3),    Space::isotropic(4)};
}

BundleSum single(int sym, int twist) { return BundleSum({{sym, twist, 1, 0}}); }

}  // namespace

TEST_SUITE("bbw") {
  TEST_CASE("space parameters") {
    CHECK(Space::grassmannian(6).dimension() == 8);
    CHECK(Space::grassmannian(6).index() == 6);
    CHECK(Space::isotropic(3).dimension() == 7);
    CHECK(Space::isotropic(3).index() == 5);
    CHECK(Space::isotropic(3).ambient_dim() == 6);
    CHECK_THROWS(Space::grassmannian(3));
    CHECK_THROWS(Space::isotropic(1));
  }

  TEST_CASE("GL Weyl dimension equals the tableau count") {
    for (int m = 2; m <= 5; ++m)
      for (const std::vector<int>& shape : std::vector<std::vector<int>>{
               {1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2, 1}, {4, 2}, {2, 1, 1}}) {
        if (static_cast<int>(shape.size()) > m) continue;
        std::vector<int> lambda = shape;
        lambda.resize(m, 0);
        CAPTURE(m);
        CHECK(gl_dimension(lambda) == count_tableaux(shape, m));
      }
  }

  TEST_CASE("Sp Weyl dimension on known representations") {
    for (int k = 1; k <= 5; ++k) {
      std::vector<int> lambda(k, 0);
      CHECK(sp_dimension(lambda) == 1);
      for (int a = 1; a <= 5; ++a) {
        lambda[0] = a;
        CHECK(sp_dimension(lambda) == binomial(2 * k + a - 1, a));
      }
      if (k >= 2) {
        std::vector<int> wedge(k, 0);
        wedge[0] = wedge[1] = 1;
        CHECK(sp_dimension(wedge) == binomial(2 * k, 2) - 1);
      }
    }
  }

  TEST_CASE("operational length equals the root count") {
    std::mt19937 rng(41);
    for (int k = 1; k <= 6; ++k) {
      std::uniform_int_distribution<int> d(-9, 9);
      for (int t = 0; t < 300; ++t) {
        std::vector<int> v(k);
        for (int& x : v) x = d(rng);
        bool regular = true;
        for (int i = 0; i < k; ++i) {
          if (v[i] == 0) regular = false;
          for (int j = i + 1; j < k; ++j)
            if (std::abs(v[i]) == std::abs(v[j])) regular = false;
        }
        if (!regular) continue;
        CHECK(sp_sort_length(v) == sp_inversion_length(v));
      }
    }
  }

  TEST_CASE("Borel-Weil: S^m U* has only global sections") {
    for (const Space& s : all_spaces())
      for (int m = 0; m <= 6; ++m) {
        CohomologyResult h = bundle_cohomology(s, m, 0);
        CAPTURE(s.name());
        REQUIRE_FALSE(h.vanishes);
        CHECK(h.degree == 0);
        CHECK(h.rep_dimension == binomial(s.ambient_dim() + m - 1, m));
      }
  }

  TEST_CASE("single bundles") {
    CHECK(bbw_gl({0, 0, 0, 0}, 4).rep_dimension == 1);
    CHECK(bbw_gl({-1, -1, 0, 0}, 4).vanishes);
    CohomologyResult h = bbw_sp({0, -4, 0}, 3);
    CHECK_FALSE(h.vanishes);
    CHECK(h.degree == 3);
    CHECK(h.rep_dimension == 1);
    for (int k = 2; k <= 4; ++k)
      for (int j = 1; j <= 2 * k - 2; ++j) CHECK(bundle_cohomology(Space::isotropic(k), 0, -j).vanishes);
    for (const Space& s : all_spaces()) {
      CohomologyResult canon = bundle_cohomology(s, 0, -s.index());
      REQUIRE_FALSE(canon.vanishes);
      CHECK(canon.degree == s.dimension());
      CHECK(canon.rep_dimension == 1);
    }
    CHECK_THROWS(bbw_gl({0, 1, 0, 0}, 4));
    CHECK_THROWS(bbw_gl({0, 0, 0}, 4));
    CHECK_THROWS(bbw_sp({1, 0, 2}, 3));
  }

  TEST_CASE("Clebsch-Gordan") {
    CHECK(hom_bundle(0, 0, 3, 2) == single(3, 2));
    CHECK(hom_bundle(2, 0, 2, -2) == BundleSum({{4, -4, 1, 0}, {2, -3, 1, 0}, {0, -2, 1, 0}}));
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b) {
        BundleSum h = hom_bundle(a, 1, b, -2);
        CHECK(h.rank() == (a + 1) * (b + 1));
        int trivial = 0;
        for (const BundleTerm& t : hom_bundle(a, 3, a, 3).terms())
          if (t.sym == 0 && t.twist == 0) ++trivial;
        CHECK(trivial == 1);
      }
  }

  TEST_CASE("Ext between bundles") {
    auto ig6 = Space::isotropic(3);
    for (int i = 0; i <= 2; ++i) CHECK(ext_bundles(ig6, i, 0, i, 0).dims == std::map<int, std::int64_t>{{0, 1}});
    for (int k = 2; k <= 4; ++k) {
      ExtProfile e = ext_bundles(Space::isotropic(k), k - 1, 0, k - 1, 1 - k);
      CHECK(e.dims == std::map<int, std::int64_t>{{2 * k - 3, 1}});
    }
    CHECK(ext_bundles(Space::grassmannian(4), 0, 0, 0, -1).is_zero());
  }

  TEST_CASE("Serre duality for every pair in a window") {
    for (const Space& s : all_spaces())
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
          for (int d = -s.index() - 1; d <= 2; ++d) {
            CAPTURE(s.name());
            CHECK(serre_consistent(s, single(a, 0), single(b, d)));
          }
  }

  TEST_CASE("Euler number equals the alternating sum") {
    for (const Space& s : all_spaces())
      for (int d = -4; d <= 1; ++d) {
        ExtProfile e = ext_bundles(s, 2, 0, 1, d);
        std::int64_t alt = 0;
        for (const auto& [deg, dim] : e.dims) alt += deg % 2 ? -dim : dim;
        CHECK(e.euler == alt);
      }
  }

  TEST_CASE("Lefschetz collections") {
    CHECK(lefschetz_collection(Space::grassmannian(4)).size() == 6u);
    CHECK(lefschetz_collection(Space::grassmannian(5)).size() == 10u);
    for (int k = 2; k <= 4; ++k)
      CHECK(lefschetz_collection(Space::isotropic(k)).size() == static_cast<std::size_t>(2 * k * (k - 1)));
    for (const Space& s : all_spaces()) {
      CAPTURE(s.name());
      CollectionReport r = verify_collection(s);
      CHECK(r.ok());
      CHECK(r.pairs_checked == r.objects * (r.objects - 1) / 2);
    }
  }

  TEST_CASE("F-complexes") {
    for (int k = 2; k <= 4; ++k) {
      BundleSum f1 = f_complex(1, k, Side::Left);
      CHECK(f1 == BundleSum({{k - 1, -k, 1, 0}}));
      BundleSum koszul = f_complex(k, k, Side::Right);
      CHECK(koszul.terms().size() == static_cast<std::size_t>(k));
      for (const BundleTerm& t : koszul.terms()) CHECK(t.twist == 0);
      for (int i = 1; i <= k; ++i) {
        CHECK(f_complex(i, k, Side::Left).terms().size() == static_cast<std::size_t>(i));
        CHECK(f_complex(i, k, Side::Left).terms().back().hom_shift == 0);
        CHECK(f_complex(i, k, Side::Right).terms().front().hom_shift == 0);
      }
      CHECK_THROWS(f_complex(0, k, Side::Left));
      CHECK_THROWS(f_complex(k + 1, k, Side::Right));
      for (const Space& s : {Space::grassmannian(2 * k), Space::isotropic(k)})
        for (std::int64_t sum : sequence_euler_sums(s)) CHECK(sum == 0);
    }
    CHECK_THROWS(sequence_k(Space::grassmannian(5)));
  }

  TEST_CASE("Ext between F-objects") {
    ExtProfile gr = ext_f_pair(Space::grassmannian(4), 2, 1, 0, 1);
    CHECK(gr.is_zero());
    CHECK(gr.conclusive);
    ExtProfile ig32 = ext_f_pair(Space::isotropic(3), 3, 2, 0, 1);
    CHECK(ig32.conclusive);
    CHECK(ig32.dims == std::map<int, std::int64_t>{{0, 1}});
    ExtProfile ig31 = ext_f_pair(Space::isotropic(3), 3, 1, 0, 2);
    CHECK(ig31.conclusive);
    CHECK(ig31.is_zero());
    for (const Space& s : {Space::grassmannian(6), Space::isotropic(3), Space::isotropic(4)}) {
      const int k = sequence_k(s);
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
          auto src = f_complex(i, k, Side::Right).twisted(k - i);
          auto dst = f_complex(j, k, Side::Left).twisted(k - j);
          CHECK(serre_consistent(s, src, dst));
        }
    }
  }

  TEST_CASE("F_i(k-i) is right orthogonal to the A-blocks") {
    for (const Space& s : {Space::grassmannian(4), Space::grassmannian(6), Space::grassmannian(8),
                           Space::isotropic(2), Space::isotropic(3), Space::isotropic(4)}) {
      const int k = sequence_k(s);
      for (int i = 1; i <= k; ++i) {
        OrthogonalityReport r = check_f_orthogonality(s, i);
        CAPTURE(s.name());
        CAPTURE(i);
        CHECK(r.ok());
        CHECK(r.entries.size() == static_cast<std::size_t>((k - i + 1) * (k - 1)));
      }
    }
  }
}
