#include "etalift/arith.hpp"

#include <numbers>
#include <stdexcept>
#include <utility>

#include "etalift/util.hpp"

namespace etalift {

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int s = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) s = -s;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int t = 0;
    while (n % 2 == 0) { n /= 2; ++t; }
    long long am8 = ((a % 8) + 8) % 8;
    if ((t & 1) && (am8 == 3 || am8 == 5)) s = -s;
  }
  // Jacobi (a|n) for odd n > 0.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) s = -s;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) s = -s;
    a %= n;
  }
  return n == 1 ? s : 0;
}

RealCharacter::RealCharacter(long long disc, long long modulus)
    : disc_(disc), modulus_(modulus) {
  if (modulus <= 0) throw std::invalid_argument("RealCharacter: modulus must be positive");
  long long dm4 = ((disc % 4) + 4) % 4;
  if (dm4 == 2 || dm4 == 3)
    throw std::invalid_argument("RealCharacter: disc must be 0 or 1 mod 4");
  // Periodicity needs every prime of disc to divide the modulus.
  long long d = disc < 0 ? -disc : disc;
  for (auto& [p, e] : factorize((uint64_t)d)) {
    (void)e;
    if (modulus % (long long)p != 0)
      throw std::invalid_argument("RealCharacter: disc prime not dividing modulus");
  }
}

int RealCharacter::operator()(long long n) const {
  if (gcdll(n, modulus_) != 1) return 0;
  return kronecker(disc_, n);
}

RealCharacter RealCharacter::times(const RealCharacter& other) const {
  long long g = gcdll(modulus_, other.modulus_);
  return RealCharacter(disc_ * other.disc_, modulus_ / g * other.modulus_);
}

RealCharacter RealCharacter::kron_top(long long disc) {
  long long d = disc < 0 ? -disc : disc;
  return RealCharacter(disc, d == 0 ? 1 : d);
}

RealCharacter RealCharacter::kron_top(long long disc, long long modulus) {
  return RealCharacter(disc, modulus);
}

RealCharacter RealCharacter::jacobi_bottom(long long t) {
  if (t <= 0 || t % 2 == 0)
    throw std::invalid_argument("jacobi_bottom: t must be odd and positive");
  long long tstar = (t % 4 == 1) ? t : -t;
  return RealCharacter(tstar, t);
}

std::complex<double> Root4::value() const {
  switch (e) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Root4 epsilon_d(long long d) {
  if (d % 2 == 0) throw std::invalid_argument("epsilon_d: d must be odd");
  long long dm4 = ((d % 4) + 4) % 4;
  return Root4(dm4 == 1 ? 0 : 1);
}

EpsilonPair atkin_lehner_signs(long long r, const RealCharacter& psi) {
  if (r % 2 == 0) throw std::invalid_argument("atkin_lehner_signs: r must be odd");
  long long g = gcdll(r, 3);
  EpsilonPair out;
  out.eps2 = -psi(2) * kronecker(8, r / g);
  if (r % 3 != 0) out.eps3 = -psi(3) * kronecker(12, r);
  return out;
}

int epsilon_p(long long p, long long r, const RealCharacter& psi) {
  if (p != 2 && p != 3) throw std::invalid_argument("epsilon_p: p must be 2 or 3");
  if (gcdll(r, 6) != 1) throw std::invalid_argument("epsilon_p: requires gcd(r,6)=1");
  return -psi(p) * kronecker(4 * p, r);
}

bool is_suitable_numeric(long long k, long long ell) {
  if (ell < 5 || k < 2 || k % 2 != 0)
    throw std::invalid_argument("is_suitable_numeric: need even k >= 2 and prime ell >= 5");
  if (k > ell - 1) return false;
  uint64_t t = powmod(2, (uint64_t)(k - 1), (uint64_t)ell);
  if (t == 2 || t == invmod(2, (uint64_t)ell)) return false;
  if (k == (ell + 1) / 2 || k == (ell + 3) / 2) return false;
  if ((ell + 1) / gcdll(ell + 1, k - 1) < 6) return false;
  if ((ell - 1) / gcdll(ell - 1, k - 1) < 6) return false;
  return true;
}

std::optional<long long> hasse_exponent(long long ell) {
  if (ell < 3 || ell % 2 == 0)
    throw std::invalid_argument("hasse_exponent: ell must be an odd prime");
  // ord_ell(2) by stripping prime factors from ell - 1.
  uint64_t d = (uint64_t)(ell - 1);
  for (auto& [p, e] : factorize((uint64_t)(ell - 1))) {
    (void)e;
    while (d % p == 0 && powmod(2, d / p, (uint64_t)ell) == 1) d /= p;
  }
  // 2^a = -2 means 2^(a-1) = -1, possible iff the order is even; the single
  // element of order 2 in <2> is then 2^(ord/2) = -1.
  if (d % 2 != 0) return std::nullopt;
  return (long long)(d / 2 + 1);
}

}  // namespace etalift
