#pragma once

#include <optional>

#include "etalift/arith.hpp"
#include "etalift/series.hpp"

namespace etalift {

// Description of a half-integral weight space S_{lambda+1/2}(N, psi nu^r):
// weight lambda + 1/2, level N, character psi mod N, eta-multiplier power r
// (odd; only the class of r mod 24 matters).  Expansions live on the /24
// lattice supported on n = r (mod 24) when gcd(r,6) = 1, or on the /8
// lattice supported on n = r/3 (mod 8) when r = 3 mod 6.
struct HalfIntegralMeta {
  long long lambda = 1;
  long long level = 1;
  long long r = 1;
  RealCharacter psi = RealCharacter::trivial();

  // r reduced to [1, 23], odd by construction.
  long long r_mod24() const;
  // 24 when gcd(r,6) = 1, 8 when 3 | r; even r is an error.
  int lattice() const;
  // The residue class of the exponent numerators: r mod 24, or r/3 mod 8.
  long long support_residue() const;
  // Space is nonzero only when psi(-1) = (-1|r)(-1)^lambda.
  bool space_nontrivial() const;
  // Throws unless every nonzero coefficient of f sits on the supported
  // class of the expected lattice.
  void check_support(const FracSeries& f) const;
};

// T_{p^2} on S_{lambda+1/2}(N, psi nu^r).  Output coefficient at n is
//   a(p^2 n) + (-1|p)^((r-1)/2) (Sn|p) psi(p) p^(lambda-1) a(n)
//   + psi(p)^2 p^(2 lambda - 1) a(n/p^2)
// with S = 12 on the /24 lattice (requires p >= 5) and S = 1 on the /8
// lattice (requires p >= 3); a(n/p^2) = 0 unless p^2 | n.  The window
// shrinks to [ceil(val/p^2), floor(max/p^2)].
FracSeries t_p2_eta(const HalfIntegralMeta& meta, const FracSeries& f, long long p);

// T_{p^2} on an integral-exponent form in a theta-multiplier space with
// character psi_theta: middle term (-1|p)^lambda (n|p) psi_theta(p) p^(lambda-1).
FracSeries t_p2_theta(const FracSeries& g, long long p, long long lambda,
                      const RealCharacter& psi_theta);

// Integral weight k with character chi: b(n) -> b(pn) + chi(p) p^(k-1) b(n/p).
FracSeries t_p_integral(const FracSeries& f, long long p, long long k,
                        const RealCharacter& chi);

// Outcome of a coefficientwise relation scan.
struct ScanReport {
  bool pass = true;
  long long first_violation = 0;  // index n of the first failed relation
  long long checked = 0;          // number of relations tested

  explicit operator bool() const { return pass; }
};

// Checks b(pn) = -eps p^(k/2-1) b(n) for every n with pn inside the window
// (the U_p eigenvalue forced on a p-newform of even weight k by the
// Atkin-Lehner sign eps).  A zero series passes vacuously.
ScanReport al_eigen_check(const FracSeries& g, long long p, long long k, int eps);

// The constant c with g = c f on the window where both are determined, or
// nullopt when no such constant exists (or f vanishes there).
std::optional<mpq_class> eigen_ratio(const FracSeries& g, const FracSeries& f);

}  // namespace etalift
