#include <doctest.h>

#include <etalift/arith.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

using namespace etalift;

namespace {

// Euler criterion at an odd prime: (a|p) = a^((p-1)/2) mod p in {-1, 0, 1}.
int legendre_oracle(long long a, long long p) {
  long long e = (p - 1) / 2;
  long long base = a % p;
  if (base < 0) base += p;
  if (base == 0) return 0;
  long long acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

const std::vector<long long> kOddPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                                           37, 41, 43, 47, 53, 59, 61, 67};

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("kronecker matches the Euler criterion at odd primes") {
    for (long long p : kOddPrimes)
      for (long long a = -2 * p; a <= 2 * p; ++a)
        CHECK(kronecker(a, p) == legendre_oracle(a, p));
  }

  TEST_CASE("kronecker special bottoms") {
    for (long long a = -40; a <= 40; ++a) CHECK(kronecker(a, 1) == 1);
    // (a|2) depends on a mod 8: 0 on evens, +1 at 1, 7 and -1 at 3, 5.
    CHECK(kronecker(1, 2) == 1);
    CHECK(kronecker(7, 2) == 1);
    CHECK(kronecker(3, 2) == -1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(4, 2) == 0);
    CHECK(kronecker(-1, 2) == 1);
  }

  TEST_CASE("kronecker is multiplicative in the bottom argument") {
    for (long long a = -30; a <= 30; ++a)
      for (long long m = 1; m <= 20; ++m)
        for (long long n = 1; n <= 20; ++n)
          CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
  }

  TEST_CASE("top-negation rule for odd bottoms") {
    // (-a|b) = (-1|b)(a|b) and (-1|b) depends on b mod 4.
    for (long long b = 1; b <= 99; b += 2) {
      int sign = (b % 4 == 1) ? 1 : -1;
      CHECK(kronecker(-1, b) == sign);
      for (long long a = 1; a <= 30; ++a)
        CHECK(kronecker(-a, b) == sign * kronecker(a, b));
    }
  }

  TEST_CASE("real characters evaluate through the symbol") {
    RealCharacter j7 = RealCharacter::jacobi_bottom(7);
    for (long long n = -20; n <= 20; ++n) CHECK(j7(n) == kronecker(n, 7));

    RealCharacter k12 = RealCharacter::kron_top(12);
    for (long long n = 1; n <= 60; ++n) {
      CHECK(k12(n) == kronecker(12, n));
      if (n % 2 == 0 || n % 3 == 0) CHECK(k12(n) == 0);
    }

    RealCharacter p6 = RealCharacter::principal(6);
    for (long long n = 1; n <= 60; ++n)
      CHECK(p6(n) == (std::gcd(n, 6L) == 1 ? 1 : 0));
  }

  TEST_CASE("character product multiplies values pointwise") {
    RealCharacter a = RealCharacter::jacobi_bottom(5);
    RealCharacter b = RealCharacter::kron_top(-4);
    RealCharacter ab = a.times(b);
    for (long long n = 1; n <= 200; ++n) CHECK(ab(n) == a(n) * b(n));
  }

  TEST_CASE("quarter roots form a group") {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Root4 p = Root4(i) * Root4(j);
        CHECK(p == Root4((i + j) % 4));
      }
    CHECK(Root4(3).inverse() == Root4(1));
    CHECK(Root4(1).pow(-1) == Root4(3));
    CHECK(Root4(2).pow(5) == Root4(2));
  }

  TEST_CASE("epsilon_d picks 1 or i by the class of d mod 4") {
    for (long long d = -199; d <= 199; d += 2) {
      long long m = ((d % 4) + 4) % 4;
      CHECK(epsilon_d(d) == (m == 1 ? Root4(0) : Root4(1)));
      // epsilon_d^2 = (-1|d).
      Root4 sq = epsilon_d(d) * epsilon_d(d);
      CHECK(sq == (kronecker(-1, d) == 1 ? Root4(0) : Root4(2)));
    }
  }

  TEST_CASE("involution signs at 2 and 3 from the closed forms") {
    // r = 5, trivial: eps_2 = -(8|5) = 1, eps_3 = -(12|5) = 1.
    EpsilonPair e5 = atkin_lehner_signs(5, RealCharacter::trivial());
    CHECK(e5.eps2 == 1);
    CHECK(e5.eps3 == 1);
    // r = 7, psi = (.|5): both signs computed in the lifted weight 10 case.
    EpsilonPair e7 = atkin_lehner_signs(7, RealCharacter::jacobi_bottom(5));
    CHECK(e7.eps2 == 1);
    CHECK(e7.eps3 == -1);
    // r = 23, psi = principal(11): the level 66 pair.
    EpsilonPair e23 = atkin_lehner_signs(23, RealCharacter::principal(11));
    CHECK(e23.eps2 == -1);
    CHECK(e23.eps3 == -1);
    CHECK(epsilon_p(2, 5, RealCharacter::trivial()) == e5.eps2);
    CHECK(epsilon_p(3, 5, RealCharacter::trivial()) == e5.eps3);
  }

  TEST_CASE("suitability against a direct restatement of the conditions") {
    auto order2 = [](long long ell) {
      long long o = 1, v = 2 % ell;
      while (v != 1) {
        v = v * 2 % ell;
        ++o;
      }
      return o;
    };
    auto brute = [&](long long k, long long ell) {
      if (k < 2 || k % 2 || ell < 5) return false;
      if (k > ell - 1) return false;
      long long o = order2(ell);
      auto pw = [&](long long e) {
        e %= o;
        long long acc = 1, b = 2 % ell;
        while (e) {
          if (e & 1) acc = acc * b % ell;
          b = b * b % ell;
          e >>= 1;
        }
        return acc;
      };
      if (pw(k - 1) == 2 % ell) return false;
      if (pw(k - 1) == pw(o - 1)) return false;  // 2^(k-1) = 2^(-1)
      if (k == (ell + 1) / 2 || k == (ell + 3) / 2) return false;
      long long g1 = std::gcd(ell - 1, k - 1), g2 = std::gcd(ell + 1, k - 1);
      if ((ell - 1) / g1 < 6 || (ell + 1) / g2 < 6) return false;
      return true;
    };
    std::vector<long long> primes;
    for (long long q = 5; q <= 100; ++q) {
      bool pr = true;
      for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) pr = false;
      if (pr) primes.push_back(q);
    }
    for (long long k = 2; k <= 20; k += 2)
      for (long long ell : primes)
        CHECK(is_suitable_numeric(k, ell) == brute(k, ell));
    CHECK(is_suitable_numeric(6, 13));
  }

  TEST_CASE("hasse exponent by direct search") {
    for (long long ell = 3; ell <= 500; ell += 2) {
      bool pr = true;
      for (long long d = 3; d * d <= ell; d += 2)
        if (ell % d == 0) pr = false;
      if (!pr) continue;
      long long found = 0, v = 2 % ell, target = ell - 2;
      for (long long a = 1; a <= 2 * ell && !found; ++a) {
        if (v == target) found = a;
        v = v * 2 % ell;
      }
      auto got = hasse_exponent(ell);
      if (found) {
        REQUIRE(got.has_value());
        CHECK(*got == found);
      } else {
        CHECK(!got.has_value());
      }
    }
  }
}
