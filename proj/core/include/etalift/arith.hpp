#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace etalift {

// Kronecker symbol (a|b) for all integer pairs, with the extensions
//   (a|0)  = 1 if a = +-1, else 0
//   (a|-1) = 1 if a >= 0, else -1
//   (a|2)  = 0 for even a, +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8).
int kronecker(long long a, long long b);

// Real Dirichlet character as a Kronecker kernel: chi(n) = 0 when
// gcd(n, modulus) > 1, else kronecker(disc, n).  disc must be 0 or 1 mod 4
// and its prime support must divide the modulus, which is what makes the
// evaluation periodic with period `modulus`.
class RealCharacter {
 public:
  RealCharacter(long long disc, long long modulus);

  int operator()(long long n) const;
  long long disc() const { return disc_; }
  long long modulus() const { return modulus_; }
  int parity() const { return disc_ < 0 ? -1 : 1; }  // chi(-1)
  bool is_trivial() const { return modulus_ == 1; }

  // Pointwise product; discriminants multiply, moduli combine by lcm.
  RealCharacter times(const RealCharacter& other) const;

  static RealCharacter trivial() { return RealCharacter(1, 1); }
  static RealCharacter principal(long long modulus) { return RealCharacter(1, modulus); }
  // chi = kronecker(disc, .) with the natural modulus |disc| (or the given one).
  static RealCharacter kron_top(long long disc);
  static RealCharacter kron_top(long long disc, long long modulus);
  // Jacobi symbol with fixed bottom t (odd, positive): chi(n) = (n|t),
  // realised as the Kronecker kernel of t* = (-1)^((t-1)/2) t.
  static RealCharacter jacobi_bottom(long long t);

  bool operator==(const RealCharacter& o) const {
    return disc_ == o.disc_ && modulus_ == o.modulus_;
  }

 private:
  long long disc_;
  long long modulus_;
};

// Exact fourth root of unity i^e.
struct Root4 {
  int e = 0;  // exponent mod 4

  Root4() = default;
  explicit Root4(int exponent) : e(((exponent % 4) + 4) % 4) {}
  Root4 operator*(const Root4& o) const { return Root4(e + o.e); }
  Root4 inverse() const { return Root4(-e); }
  Root4 pow(long long k) const { return Root4((int)(((long long)e * (k % 4)) % 4)); }
  std::complex<double> value() const;
  bool operator==(const Root4& o) const { return e == o.e; }
};

// eps_d for odd d: 1 when d = 1 (mod 4), i when d = 3 (mod 4).
Root4 epsilon_d(long long d);

// Signs attached to the weight-(r/2) eta-power multiplier with character psi:
//   eps2 = -psi(2) * (8 | r / gcd(r,3))
//   eps3 = -psi(3) * (12 | r), absent when 3 | r.
struct EpsilonPair {
  int eps2;
  std::optional<int> eps3;
};

EpsilonPair atkin_lehner_signs(long long r, const RealCharacter& psi);

// Single-prime form -psi(p) * (4p | r), valid for p in {2,3} when gcd(r,6)=1.
int epsilon_p(long long p, long long r, const RealCharacter& psi);

// Numeric suitability of an even weight k for the prime ell (>= 5):
//   (1) k <= ell - 1
//   (2) 2^(k-1) != 2^(+-1)  (mod ell)
//   (3) k not in {(ell+1)/2, (ell+3)/2}
//   (4) (ell+1)/gcd(ell+1, k-1) >= 6 and (ell-1)/gcd(ell-1, k-1) >= 6.
bool is_suitable_numeric(long long k, long long ell);

// Least a >= 1 with 2^a = -2 (mod ell) for odd prime ell, or nullopt when -2
// is not a power of 2.  Such a exists iff ord_ell(2) is even, in which case
// the least solution is ord/2 + 1.
std::optional<long long> hasse_exponent(long long ell);

}  // namespace etalift
