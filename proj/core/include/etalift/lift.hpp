#pragma once

#include <vector>

#include "etalift/arith.hpp"
#include "etalift/hecke.hpp"
#include "etalift/series.hpp"

namespace etalift {

// Output of the eta-side lift S_t: an integral-exponent series together
// with the bookkeeping of the target space.
struct LiftResult {
  FracSeries coeffs = FracSeries(1, 1, {});
  long long target_weight = 0;  // 2 lambda
  long long target_level = 0;   // 6N on the /24 lattice, 2N on /8
  EpsilonPair eps{};
  HalfIntegralMeta meta{};
  long long t = 1;
  // t on the supported class (t = r mod 24 resp. t = r/3 mod 8).  When
  // false the computed coefficients come out identically zero; the formula
  // is still evaluated honestly.
  bool admissible = false;
};

// S_t of F = sum a(n) q^(n/D):
//   b(n) = sum_{jk=n} psi(j) (j|t) j^(lambda-1) S(k) a(t k^2),
// S = (12|.) on the /24 lattice, (-4|.) on /8.  Output valuation 1 with
// floor(sqrt(max_num/t)) coefficients.  t must be squarefree and positive.
LiftResult shimura_lift(const HalfIntegralMeta& meta, const FracSeries& f, long long t);

// Standard lift Sh_t of an integral-exponent form G in a theta-multiplier
// space with character psi_theta:
//   c(n) = sum_{jk=n} psi_theta(j) (-1|j)^lambda (t|j) j^(lambda-1) a(t k^2).
FracSeries classical_shimura_lift(const FracSeries& g, long long t, long long lambda,
                                  const RealCharacter& psi_theta);

// Reinterprets exponent numerators as integral exponents (the coefficient
// array of F is already dense on numerators, so F|V_D is a relabeling).
FracSeries as_integral(const FracSeries& f);

// Character of the theta-multiplier space holding F|V_24 resp. F|V_8:
// psi (-4|.)^(lambda + (r-1)/2), times (12|.) on the /24 lattice.
RealCharacter theta_side_character(const HalfIntegralMeta& meta);

// max |c(n) - S(n) b(n)| over n <= cap, where b = S_t(F), c = Sh_t(F|V) and
// S is (12|.) resp. (-4|.); exactly zero when the two lift routes agree.
mpq_class compare_lifts(const HalfIntegralMeta& meta, const FracSeries& f,
                        long long t, long long cap);

// S_t(T_{p^2} F) = S(p) T_p S_t(F) with T_p at weight 2 lambda and the
// principal character mod N, compared on the common window.
ScanReport equivariance_check(const HalfIntegralMeta& meta, const FracSeries& f,
                              long long t, long long p);

// T_{p^2} F = S(p) a(p) F for each listed prime, with a(p) read off the
// given newform expansion.  first_violation reports the failing p.
ScanReport eigen_relation_check(const HalfIntegralMeta& meta, const FracSeries& f,
                                const FracSeries& newform,
                                const std::vector<long long>& primes);

// S_1(F|V_t) = S(t) S_t(F)|V_t, with S_1 taken in the transported space
// (level N t, character psi (.|t), multiplier power r t).
ScanReport v_intertwine_check(const HalfIntegralMeta& meta, const FracSeries& f,
                              long long t);

// Coefficientwise equality where both series are determined (indices below
// a valuation count as zero); first_violation is the failing index.
ScanReport agree_on_overlap(const FracSeries& a, const FracSeries& b);
bool is_zero_series(const FracSeries& a);

// b(1) b(mn) = b(m) b(n) over coprime pairs with mn inside the window.
ScanReport multiplicative_check(const FracSeries& g);

// Newform recursion at prime powers, normalized by b(1):
//   b(1) b(p^(j+1)) = b(p) b(p^j) - chi(p) p^(k-1) b(1) b(p^(j-1)).
ScanReport hecke_recursion_check(const FracSeries& g, long long k,
                                 const RealCharacter& chi);

}  // namespace etalift
