#include <doctest.h>

#include <etalift/catalog.hpp>
#include <etalift/forms.hpp>
#include <etalift/hecke.hpp>
#include <etalift/lift.hpp>

#include <cstdint>
#include <random>
#include <vector>

using namespace etalift;

namespace {

// eta^3 dense on the /8 lattice straight from the alternating odd-square
// rule, independent of the eta expansion code.
FracSeries eta3_closed_form(long long max_num) {
  std::vector<mpq_class> c((size_t)max_num);
  for (long long m = 1; m * m <= max_num; m += 2) {
    long long k = (m - 1) / 2;
    c[(size_t)(m * m - 1)] = (long)((k % 2) ? -m : m);
  }
  return FracSeries(8, 1, std::move(c));
}

FracSeries random_on_coset(std::mt19937_64& rng, const HalfIntegralMeta& meta,
                           size_t steps) {
  std::uniform_int_distribution<long long> d(-9, 9);
  std::vector<mpq_class> c(steps);
  for (auto& x : c) x = mpq_class((long)d(rng));
  long long lat = meta.lattice();
  long long sr = meta.support_residue();
  long long val = lat == 24 ? sr : 3 * sr;
  return spread_compact(FracSeries(1, 0, std::move(c)), val, (int)lat);
}

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("half-integral operator fixes the eta cube") {
    // The t = 1 lift of eta^3 is sigma_1 restricted to odd divisors, an
    // eigenform with T_p eigenvalue p + 1, so T_(p^2) eta^3 must come out
    // as (-4|p)(p + 1) eta^3.
    HalfIntegralMeta meta{1, 1, 3, RealCharacter::trivial()};
    for (long long p : {3LL, 5LL, 7LL}) {
      FracSeries f = eta3_closed_form(p * p * 200);
      FracSeries tf = t_p2_eta(meta, f, p);
      auto ratio = eigen_ratio(tf, f);
      REQUIRE(ratio.has_value());
      CHECK(*ratio == (long)(kronecker(-4, p) * (p + 1)));
    }
  }

  TEST_CASE("five copies of eta give eigenvalue -6 at p = 5") {
    const LiftCase& e5 = catalog_case("eta5");
    FracSeries f = dense_form(e5, 2000);
    FracSeries tf = t_p2_eta(e5.meta, f, 5);
    auto ratio = eigen_ratio(tf, f);
    REQUIRE(ratio.has_value());
    CHECK(*ratio == -6);
  }

  TEST_CASE("operator respects the coset support") {
    HalfIntegralMeta meta{2, 1, 5, RealCharacter::trivial()};
    std::mt19937_64 rng(5);
    FracSeries f = random_on_coset(rng, meta, 3000);
    FracSeries tf = t_p2_eta(meta, f, 7);
    long long lat = meta.lattice();
    for (long long n = tf.val(); n <= tf.max_num(); ++n)
      if (((n % lat) + lat) % lat != meta.support_residue() % lat)
        CHECK(tf.at_num(n) == 0);
    CHECK_THROWS(t_p2_eta(meta, f, 2));
  }

  TEST_CASE("operators at distinct primes commute") {
    std::mt19937_64 rng(99);
    HalfIntegralMeta meta{2, 1, 5, RealCharacter::trivial()};
    FracSeries f = random_on_coset(rng, meta, 25 * 49 * 12 + 8);
    FracSeries ab = t_p2_eta(meta, t_p2_eta(meta, f, 5), 7);
    FracSeries ba = t_p2_eta(meta, t_p2_eta(meta, f, 7), 5);
    ScanReport rep = agree_on_overlap(ab, ba);
    CHECK(rep.pass);
    CHECK(rep.checked >= 10);
  }

  TEST_CASE("rescaled operator route matches the direct one") {
    const LiftCase& e5 = catalog_case("eta5");
    FracSeries f = dense_form(e5, 3000);
    RealCharacter chi = theta_side_character(e5.meta);
    for (long long p : {5LL, 7LL}) {
      FracSeries lhs = as_integral(t_p2_eta(e5.meta, f, p));
      FracSeries rhs = t_p2_theta(as_integral(f), p, e5.meta.lambda, chi);
      ScanReport rep = agree_on_overlap(lhs, rhs);
      CHECK(rep.pass);
      CHECK(rep.checked >= 50);
    }
  }

  TEST_CASE("integral operator has the classical Eisenstein eigenvalue") {
    FracSeries e4 = eisenstein_series(4, RealCharacter::trivial(),
                                      RealCharacter::trivial(), 800);
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
      FracSeries te = t_p_integral(e4, p, 4, RealCharacter::trivial());
      auto ratio = eigen_ratio(te, e4);
      REQUIRE(ratio.has_value());
      CHECK(*ratio == (long)(1 + p * p * p));
    }
  }

  TEST_CASE("eigen_ratio edge semantics") {
    FracSeries f(1, 1, {1, 2, 3, 4});
    FracSeries g(1, 1, {2, 4, 6, 8});
    auto r = eigen_ratio(g, f);
    REQUIRE(r.has_value());
    CHECK(*r == 2);

    FracSeries z(1, 1, {0, 0, 0, 0});
    auto rz = eigen_ratio(z, f);
    REQUIRE(rz.has_value());
    CHECK(*rz == 0);

    FracSeries bad(1, 1, {2, 4, 7, 8});
    CHECK(!eigen_ratio(bad, f).has_value());

    // g nonzero where f vanishes: no constant exists.
    FracSeries f0(1, 1, {1, 0, 3});
    FracSeries g0(1, 1, {2, 5, 6});
    CHECK(!eigen_ratio(g0, f0).has_value());
  }

  TEST_CASE("newform shadow detection accepts and rejects") {
    // b multiplicative with b(p^(e+1)) = b(p) b(p^e) - chi(p) p b(p^(e-1))
    // by construction, for weight 2 and principal character mod 6.
    long long k = 2;
    RealCharacter chi = RealCharacter::principal(6);
    std::vector<mpq_class> val(401);
    val[1] = 1;
    auto ppow = [&](long long p, long long ap, long long maxe) {
      std::vector<mpq_class> pw(maxe + 1);
      pw[0] = 1;
      if (maxe >= 1) pw[1] = (long)ap;
      for (long long e = 2; e <= maxe; ++e)
        pw[e] = mpq_class((long)ap) * pw[e - 1] - mpq_class((long)(chi(p) * p)) * pw[e - 2];
      return pw;
    };
    // Every prime with square inside the window needs honest local data;
    // primes >= 23 only ever appear to the first power below 400.
    std::vector<std::pair<long long, long long>> aps = {
        {2, -2}, {3, -3}, {5, 6}, {7, -16}, {11, 12}, {13, -38},
        {17, 2}, {19, -7}};
    for (long long n = 2; n <= 400; ++n) {
      mpq_class v = 1;
      long long m = n;
      for (auto [p, ap] : aps) {
        long long e = 0;
        while (m % p == 0) {
          m /= p;
          ++e;
        }
        if (e) v *= ppow(p, ap, e)[e];
      }
      if (m != 1) v = 0;  // primes outside the list: drop the index
      val[(size_t)n] = v;
    }
    std::vector<mpq_class> coeffs(val.begin() + 1, val.end());
    FracSeries g(1, 1, coeffs);
    CHECK(multiplicative_check(g).pass);
    CHECK(hecke_recursion_check(g, k, chi).pass);

    std::vector<mpq_class> broken = coeffs;
    broken[63] = broken[63] + 1;  // index 64 = 2^6 breaks the recursion
    FracSeries gb(1, 1, broken);
    CHECK(!hecke_recursion_check(gb, k, chi).pass);
    std::vector<mpq_class> nonmult = coeffs;
    nonmult[5] = nonmult[5] + 1;  // 6 = 2 * 3 breaks multiplicativity
    FracSeries gm(1, 1, nonmult);
    CHECK(!multiplicative_check(gm).pass);
  }

  TEST_CASE("forced U_p eigenvalue scanner") {
    // b(n) built to satisfy b(2n) = -eps 2^(k/2-1) b(n) with k = 4, eps = 1.
    std::vector<mpq_class> c(64);
    for (long long n = 1; n <= 64; n += 2) {
      mpq_class v = (n % 3 == 0) ? 2 : 1;
      long long m = n;
      mpq_class w = v;
      while (m <= 64) {
        c[(size_t)m - 1] = w;
        m *= 2;
        w *= -2;  // -eps p^(k/2-1) = -2
      }
    }
    FracSeries g(1, 1, c);
    CHECK(al_eigen_check(g, 2, 4, 1).pass);
    ScanReport wrong = al_eigen_check(g, 2, 4, -1);
    CHECK(!wrong.pass);
    c[1] += 1;
    FracSeries gb(1, 1, c);
    CHECK(!al_eigen_check(gb, 2, 4, 1).pass);
  }
}
