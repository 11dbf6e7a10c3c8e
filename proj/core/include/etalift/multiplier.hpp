#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "etalift/arith.hpp"
#include "etalift/forms.hpp"
#include "etalift/series.hpp"

namespace etalift {

struct GL2Int {
  long long a = 1, b = 0, c = 0, d = 1;
  long long det() const { return a * d - b * c; }
  GL2Int operator*(const GL2Int& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  GL2Int operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const GL2Int&) const = default;
};

// 24th root of unity, stored as the exponent of e(1/24).
class Root24 {
 public:
  explicit Root24(long long e = 0) : e_((int)(((e % 24) + 24) % 24)) {}
  int exponent() const { return e_; }
  Root24 operator*(const Root24& o) const { return Root24(e_ + o.e_); }
  Root24 inverse() const { return Root24(-e_); }
  Root24 pow(long long k) const { return Root24(e_ * (k % 24)); }
  std::complex<double> value() const;
  bool operator==(const Root24&) const = default;

 private:
  int e_;
};

Root24 root24_from_root4(const Root4& r);

// Eta multiplier: eta(g z) = nu_eta(g) (c z + d)^(1/2) eta(z), principal
// square root, valid for every g in SL2(Z) with c != 0.  For c = 0, d < 0
// the factor convention is (-1)^(1/2) = -i.  Requires det 1.
Root24 nu_eta(const GL2Int& g);

// Theta multiplier on Gamma0(4): kronecker(c,d) * epsilon_d^(-1), as an
// exponent of e(1/24) (so always a 4th root of unity).  Requires det 1 and
// 4 | c.
Root24 nu_theta(const GL2Int& g);

// Truncated q-expansion with double coefficients for numeric evaluation:
// F(z) = sum_k c[k] e(z (num0 + stride k) / denom).
struct QExpansion {
  std::vector<double> c;
  long long num0 = 0;
  long long stride = 1;
  int denom = 1;
};

QExpansion qexp_from_series(const FracSeries& f);
// Compact coefficient vector plus explicit exponent arithmetic.
QExpansion qexp_from_compact(const FracSeries& compact, long long num0,
                             long long stride, int denom);

// Terms needed so the tail of a q-expansion at height stride/(denom*c_abs)
// stays below ~1e-14 for polynomially bounded coefficients.
size_t qexp_terms_for(long long c_abs, long long stride, int denom);

// Compensated evaluation; throws if the truncation tail is not negligible.
std::complex<double> eval_q_expansion(const QExpansion& f, std::complex<double> z);

// |F(g z0) - mult (c z0 + d)^weight F(z0)| at the balanced point
// z0 = (-d + i sgn c) / c, where both z0 and g z0 have height 1/|c| and
// |c z0 + d| = 1.  Requires c != 0.
double transform_residual(const QExpansion& F, const GL2Int& g,
                          std::complex<double> mult, double weight);

// Random elements of Gamma0(N): c = +-N k with 1 <= k <= kmax, d coprime to
// c with |d| <= dmax, completed via the extended gcd and reduced so
// |a| <= |c|/2.  Deterministic in the seed.
std::vector<GL2Int> sample_gamma0(long long N, size_t count, long long kmax,
                                  long long dmax, uint64_t seed);

struct SampleReport {
  size_t checked = 0;
  size_t failures = 0;
  bool ok() const { return checked > 0 && failures == 0; }
};

// Exact root-of-unity identity nu^r((a, t b; c/t, d)) =
// kronecker(d, t) nu^(r t)((a, b; c, d)) over random elements of Gamma0(t).
SampleReport check_nu_v_t(long long r, long long t, size_t count, uint64_t seed);

// Numeric transformation law for the image of an eta form under V_24
// (gcd(r,6) = 1, level 576 N) or V_8 (r = 3 mod 6, level 64 N): multiplier
// psi'(d) nu_theta^(2 lambda + 1), weight lambda + 1/2.  Returns the max
// residual over the sampled matrices.
double check_eta_to_theta(const EtaQuotient& eq, const RealCharacter& psi,
                          long long level, size_t samples, uint64_t seed);

// Max residual of the weight-(power/2) transformation law of eta^power with
// multiplier nu_eta^power, over random SL2(Z) elements taken with c > 0.
double check_eta_power_numeric(int power, size_t samples, uint64_t seed);

// Same for theta on Gamma0(4) at weight 1/2 with multiplier nu_theta.
double check_theta_numeric(size_t samples, uint64_t seed);

}  // namespace etalift
