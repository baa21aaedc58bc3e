#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wrol/geninv.hpp"
#include "wrol/peirce.hpp"

using namespace wrol;
using wrol::test::Fp;
using wrol::test::Q;

TEST_CASE("mp_inverse examples") {
  Domain dom = Domain::gaussian_rational();
  CHECK(mp_inverse(Matrix::identity(dom, 3)) == Matrix::identity(dom, 3));
  Matrix a = Q({{"1", "1"}, {"0", "0"}});
  Matrix expected = Q({{"1/2", "0"}, {"1/2", "0"}});
  CHECK(test::oracle_is_mp(a, expected));
  CHECK(test::greville_pinv(a) == expected);
  CHECK(mp_inverse(a) == expected);
  CHECK(mp_via_star_group(a) == expected);
  CHECK(mp_inverse(Matrix(dom, 2, 3)) == Matrix(dom, 3, 2));
}

TEST_CASE("mp existence over F_5") {
  Matrix v = Fp(5, {{"1"}, {"2"}});
  CHECK(mp_exists(Matrix::identity(Domain::prime_field(5), 2)));
  CHECK_FALSE(mp_exists(v));
  CHECK_FALSE(try_mp_inverse(v).has_value());
  CHECK_THROWS_AS(mp_inverse(v), NoMPInverse);
  CHECK_THROWS_AS(mp_via_star_group(v), NoMPInverse);
  // No candidate of the right shape satisfies the Penrose equations.
  Domain f5 = Domain::prime_field(5);
  for (int x0 = 0; x0 < 5; ++x0)
    for (int x1 = 0; x1 < 5; ++x1) {
      Matrix x(f5, 1, 2, {f5.from_int(x0), f5.from_int(x1)});
      CHECK_FALSE(test::oracle_is_mp(v, x));
    }
}

TEST_CASE("group inverse") {
  Domain dom = Domain::gaussian_rational();
  CHECK(group_inverse(Matrix::identity(dom, 3)) == Matrix::identity(dom, 3));
  Matrix a = Q({{"1", "1"}, {"0", "0"}});
  Matrix proj = a * mp_inverse(a);
  CHECK(group_inverse(proj) == proj);
  Matrix nil = Q({{"0", "1"}, {"0", "0"}});
  CHECK_FALSE(group_invertible(nil));
  CHECK_THROWS_AS(group_inverse(nil), NotGroupInvertible);

  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    Matrix m = test::random_mixed_rank(dom, n, n, rng);
    bool exists = rank(m) == rank(m * m);
    CHECK(group_invertible(m) == exists);
    if (!exists) continue;
    Matrix g = group_inverse(m);
    CHECK(m * g * m == m);
    CHECK(g * m * g == g);
    CHECK(m * g == g * m);
    // Commutes with everything commuting with m.
    const Matrix gens[] = {m};
    for (const auto& c : commutant_basis(gens)) CHECK(c * g == g * c);
  }
}

TEST_CASE("penrose residuals") {
  Domain dom = Domain::gaussian_rational();
  Matrix i2 = Matrix::identity(dom, 2);
  CHECK(penrose_residuals(i2, i2).all());
  Matrix a = Q({{"1", "i"}, {"0", "2"}, {"1", "0"}});
  CHECK(penrose_residuals(a, mp_inverse(a)).all());
  auto zero = penrose_residuals(a, Matrix(dom, 2, 3));
  CHECK_FALSE(zero.eq1_holds);
  CHECK(zero.eq2_holds);
  CHECK(zero.eq3_holds);
  CHECK(zero.eq4_holds);
  CHECK_THROWS_AS(penrose_residuals(a, a), DimensionMismatch);
}

TEST_CASE("moore-penrose properties on random Q(i) matrices") {
  Domain dom = Domain::gaussian_rational();
  Rng rng(12);
  for (int t = 0; t < 150; ++t) {
    auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
    auto cols = static_cast<std::size_t>(rng.uniform(1, 4));
    Matrix a = test::random_mixed_rank(dom, rows, cols, rng);
    CHECK(mp_exists(a));
    Matrix ad = mp_inverse(a);
    CHECK(test::oracle_is_mp(a, ad));
    CHECK(ad == test::greville_pinv(a));
    CHECK(mp_inverse(ad) == a);
    CHECK(mp_inverse(star(a)) == star(ad));
    CHECK(mp_via_star_group(a) == ad);
    Matrix l = a * ad, r = ad * a;
    CHECK(is_hermitian(l));
    CHECK(is_idempotent(l));
    CHECK(is_hermitian(r));
    CHECK(is_idempotent(r));
  }
}

TEST_CASE("moore-penrose over prime fields agrees with existence") {
  Rng rng(13);
  int missing = 0;
  for (std::uint64_t p : {3ull, 5ull, 13ull}) {
    Domain dom = Domain::prime_field(p);
    for (int t = 0; t < 100; ++t) {
      auto rows = static_cast<std::size_t>(rng.uniform(1, 3));
      auto cols = static_cast<std::size_t>(rng.uniform(1, 3));
      Matrix a = test::random_mixed_rank(dom, rows, cols, rng);
      auto ad = try_mp_inverse(a);
      bool by_rank = rank(a) == rank(star(a) * a) && rank(a) == rank(a * star(a));
      CHECK(ad.has_value() == by_rank);
      if (!ad) {
        ++missing;
        continue;
      }
      CHECK(test::oracle_is_mp(a, *ad));
      CHECK(mp_via_star_group(a) == *ad);
    }
  }
  CHECK(missing > 0);
}

TEST_CASE("a = aa*b* and b* = abb* characterize b = a+") {
  Domain dom = Domain::gaussian_rational();
  Matrix i2 = Matrix::identity(dom, 2);
  CHECK(prop21_check(i2, i2));
  Matrix a = Q({{"1", "1"}, {"0", "0"}});
  Matrix x = Q({{"1", "0"}, {"-1", "0"}});
  Matrix b = sample_13_inverse(a, x);
  CHECK(is_k_inverse(a, b, {1, 3}));
  CHECK_FALSE(b == mp_inverse(a));
  CHECK_FALSE(prop21_check(a, b));

  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    auto m = static_cast<std::size_t>(rng.uniform(1, 4));
    Matrix m1 = test::random_mixed_rank(dom, n, m, rng);
    Matrix ad = mp_inverse(m1);
    CHECK(prop21_check(m1, ad));
    Matrix cand = sample_13_inverse(m1, random_matrix(dom, m, n, rng, true));
    CHECK(prop21_check(m1, cand) == (cand == ad));
  }
}

TEST_CASE("commutation with a pair") {
  Domain dom = Domain::gaussian_rational();
  Matrix a = Q({{"1", "2"}, {"i", "0"}});
  CHECK(commutes_with_pair(Matrix::scalar_identity(test::q("3/2"), 2), a));
  CHECK(commutes_with_pair(Matrix::diagonal(dom, {test::q("1"), test::q("2")}),
                           Matrix::diagonal(dom, {test::q("3"), test::q("4")})));
  Rng rng(15);
  for (int t = 0; t < 60; ++t) {
    auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    Matrix m = test::random_mixed_rank(dom, n, n, rng);
    Matrix c = sample_commutant(m, rng);
    CHECK(commutes_with_pair(c, m));
    CHECK(commutes_with_pair(c, mp_inverse(m)));
  }
  CHECK_THROWS_AS(commutes_with_pair(Matrix::identity(dom, 3), a), DimensionMismatch);
}
