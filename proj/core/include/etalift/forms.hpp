#pragma once

#include <string>
#include <vector>

#include "etalift/series.hpp"

namespace etalift {

// One factor eta(arg * z)^pow of an eta quotient.
struct EtaFactor {
  long long arg = 1;
  int pow = 1;
};

struct EtaQuotient {
  std::vector<EtaFactor> factors;

  // Sum of the powers; the weight of the quotient is half this.
  long long weight2() const;
  // Sum of arg * pow: the exponent numerator of the leading term on the
  // denominator-24 lattice.  All exponent numerators are congruent to this
  // value modulo 24.
  long long val24() const;
  long long arg_lcm() const;

  // Accepts factors separated by whitespace or '*', each "A" or "A^B" with
  // A >= 1 and integer B (negative allowed): "1^5", "1^2 2^2 3^2 6^2",
  // "13 1^2", "1^12 5^-1".
  static EtaQuotient parse(const std::string& text);
  std::string str() const;
};

// Compact expansion: entry k of the result (denom 1, valuation 0) is the
// coefficient of q^((val24 + 24 k) / 24).  `steps` entries are produced.
FracSeries eta_compact(const EtaQuotient& eq, size_t steps);
ModSeries eta_compact_mod(const EtaQuotient& eq, uint64_t modulus, size_t steps);

// Dense expansion on the denominator-24 lattice: valuation val24, precision
// 24 (steps - 1) + 1 numerator slots, with the gaps filled by zeros.
FracSeries expand_eta_quotient(const EtaQuotient& eq, size_t steps);

// theta(z) = 1 + 2 sum q^(n^2), dense integral exponents, `prec` slots.
FracSeries theta_series(size_t prec);

// --- colored Frobenius partitions ---

// rm(n) counts Z^(m-1) lattice points of the positive quadratic form
// ((x1+..+x_{m-1})^2 + x1^2+..+x_{m-1}^2)/2 = n, the numerator of the
// m-colored generating function.  Depth-first enumeration with per-level
// quadratic range bounds; returns rm(0..nmax).
std::vector<long long> rm_counts(int m, size_t nmax);

// Single value with a hard guard; throws past n = 10^5.
long long rm_count(int m, long long n);

// Weight-k Eisenstein series a(n) = sum_{d|n} psi(n/d) phi(d) d^(k-1) for
// n >= 1, a(0) left 0.  Requires psi(-1) phi(-1) = (-1)^k; throws otherwise.
FracSeries eisenstein_series(long long k, const RealCharacter& psi,
                             const RealCharacter& phi, size_t prec);

// The m = 5 numerator A5 = sum r5(n) q^n satisfies
// r5 = c0 [n=0] + c1 sum_{d|n} chi5(d) d + c2 sum_{d|n} chi5(n/d) d with
// chi5 the quadratic character of conductor 5.
struct A5Fit {
  long long c0, c1, c2;
};

// rm_counts(5, nmax).
std::vector<long long> a5_by_enumeration(size_t nmax);

// Solves for (c0, c1, c2) from small enumerated counts and confirms the
// divisor-sum formula on n <= 40; throws if the fit fails.
A5Fit fit_a5();

// Divisor-sum values r5(0..nterms-1) via sieving, as a series.
FracSeries a5_series(size_t nterms);
ModSeries a5_series_mod(uint64_t modulus, size_t nterms);

// Enumerates up to nmax and compares with the divisor-sum sieve; true iff
// they agree everywhere.
bool validate_a5(size_t nmax);

// sum cphi5(n) q^n = A5 / E^5 where E is the Euler product.  The exact
// version runs five sparse long divisions; the modular one inverts E^5 by
// Newton iteration and is the one to use at large precision.
FracSeries cphi5_series(size_t nterms);
ModSeries cphi5_series_mod(uint64_t modulus, size_t nterms);

// m-colored counts: m = 1 is the partition function, m = 5 goes through the
// fitted divisor formula, 2 <= m <= 8 runs the lattice enumeration for the
// numerator (precision capped at 10^4 + 1 there).
FracSeries cphi_series(int m, size_t prec);
ModSeries cphi_series_mod(int m, uint64_t modulus, size_t prec);

// A rational combination of eta quotients supported on one coset of 24Z.
struct EtaTerm {
  mpq_class coeff;
  EtaQuotient eq;
};

// Minimal val24 over the terms; throws unless all val24 agree mod 24.
long long eta_sum_val24(const std::vector<EtaTerm>& terms);

// Compact expansion of sum_i coeff_i eta_i: entry k holds the coefficient of
// q^((v + 24 k)/24) with v = eta_sum_val24(terms).
FracSeries eta_sum_compact(const std::vector<EtaTerm>& terms, size_t steps);
ModSeries eta_sum_compact_mod(const std::vector<EtaTerm>& terms,
                              uint64_t modulus, size_t steps);

// Inflate a compact expansion (denom 1, valuation 0, entry k at exponent
// (val24 + 24 k)/24) onto the dense denominator-`denom` lattice.  Requires
// val24 * denom divisible by 24.
FracSeries spread_compact(const FracSeries& compact, long long val24, int denom);

// Compact q^e E(q)^(24 e) reduced mod ell (ell prime): valuation e, `steps`
// integral coefficients.  Uses E(q)^ell = E(q^ell) mod ell on the base-ell
// digits of 24 e, so the cost stays a handful of small powerings.
ModSeries delta_power_mod(uint64_t ell, long long e, size_t steps);

}  // namespace etalift
