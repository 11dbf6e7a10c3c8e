#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "etalift/arith.hpp"

namespace etalift {

// Truncated q-expansion with exact rational coefficients.  Exponents live on
// the lattice (1/denom)Z with denom in {1, 8, 24}: coeff index i stands for
// q^((val + i)/denom).  The array length is the precision; nothing is known
// from exponent numerator val + prec() onwards.  val may be negative.
class FracSeries {
 public:
  FracSeries(int denom, long long val, std::vector<mpq_class> coeffs);
  static FracSeries zero(int denom, long long val, size_t prec);

  int denom() const { return denom_; }
  long long val() const { return val_; }
  size_t prec() const { return c_.size(); }
  long long max_num() const { return val_ + (long long)c_.size() - 1; }
  bool empty() const { return c_.empty(); }

  const mpq_class& operator[](size_t i) const { return c_[i]; }
  mpq_class& operator[](size_t i) { return c_[i]; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  // Coefficient of q^(n/denom).  Zero below the valuation, throws past the
  // known window.
  mpq_class at_num(long long n) const;
  bool known(long long n) const { return n < val_ + (long long)c_.size(); }

  size_t nonzero_count() const;
  // Drops leading zero coefficients, raising val accordingly.
  FracSeries trimmed() const;
  // Same coefficients, shifted exponents: multiplies by q^(delta/denom).
  FracSeries shifted(long long delta) const;

 private:
  int denom_;
  long long val_;
  std::vector<mpq_class> c_;
};

// Pointwise sum on the common known window.  Denominators must match exactly
// except that denom 1 promotes to 8 or 24; 8 vs 24 is an error.
FracSeries add(const FracSeries& a, const FracSeries& b);
FracSeries scale(const FracSeries& a, const mpq_class& s);

// Cauchy product truncated to min(prec a, prec b) numerator steps (after any
// 1 -> 8/24 promotion); valuations add.  8 vs 24 is an error.
FracSeries mul(const FracSeries& a, const FracSeries& b);

// Multiplicative inverse to the input's precision.  The leading coefficient
// must be +1 or -1.
FracSeries invert(const FracSeries& a);

// a / b by long division, skipping zero coefficients of b; the workhorse for
// quotients by sparse series.  Leading coefficient of b must be +1 or -1.
FracSeries div(const FracSeries& a, const FracSeries& b);

// U_m: picks every m-th exponent numerator, q^(n/D) -> q^(n/(mD)) relabelled
// on the same lattice: output coefficient at n is input at m*n.  Precision
// contracts to roughly prec/m.
FracSeries u_operator(const FracSeries& a, long long m);

// V_m: q^(n/D) -> q^(mn/D).  Precision expands to m*prec (the gaps are known
// zeros).
FracSeries v_operator(const FracSeries& a, long long m);

// Multiplies the coefficient of q^n by chi(n).  Integral exponents only.
FracSeries twist(const FracSeries& a, const RealCharacter& chi);
// Same but acting on exponent numerators, for fractional-exponent series;
// the caller owns the interpretation.
FracSeries twist_numerator(const FracSeries& a, const RealCharacter& chi);

// prod_{n>=1} (1 - q^n) to the given precision via the pentagonal number
// theorem; denom 1, valuation 0.
FracSeries euler_product(size_t prec);

// Moves a series onto a different exponent lattice.  Upscaling (1 -> 8/24)
// always works; downscaling (24 -> 8, or anything -> 1) requires every
// nonzero coefficient to sit on the coarser lattice and throws otherwise.
FracSeries rescale_denom(const FracSeries& a, int new_denom);

// Truncated q-expansion with coefficients in Z modulo a word-sized prime
// power.  Same exponent conventions as FracSeries.
class ModSeries {
 public:
  ModSeries(uint64_t modulus, int denom, long long val, std::vector<uint64_t> coeffs);
  static ModSeries zero(uint64_t modulus, int denom, long long val, size_t prec);

  uint64_t modulus() const { return mod_; }
  int denom() const { return denom_; }
  long long val() const { return val_; }
  size_t prec() const { return c_.size(); }
  long long max_num() const { return val_ + (long long)c_.size() - 1; }
  bool empty() const { return c_.empty(); }

  uint64_t operator[](size_t i) const { return c_[i]; }
  uint64_t& operator[](size_t i) { return c_[i]; }
  const std::vector<uint64_t>& coeffs() const { return c_; }

  uint64_t at_num(long long n) const;
  bool known(long long n) const { return n < val_ + (long long)c_.size(); }

  size_t nonzero_count() const;
  ModSeries trimmed() const;
  ModSeries shifted(long long delta) const;

 private:
  uint64_t mod_;
  int denom_;
  long long val_;
  std::vector<uint64_t> c_;
};

// Reduction of an exact series: every coefficient denominator must be
// invertible modulo the target modulus.
ModSeries reduce_mod(const FracSeries& a, uint64_t modulus);

ModSeries add(const ModSeries& a, const ModSeries& b);
ModSeries scale(const ModSeries& a, uint64_t s);

// Truncated product.  Small or sparse products run schoolbook with zero
// skipping; otherwise transform-based convolution with CRT reconstruction
// (see ntt.hpp for the exactness bound).
ModSeries mul(const ModSeries& a, const ModSeries& b);

// Inverse to the input's precision; leading coefficient must be invertible.
// Newton iteration over transform products for large dense inputs, direct
// recurrence otherwise.
ModSeries invert(const ModSeries& a);
ModSeries div(const ModSeries& a, const ModSeries& b);

ModSeries u_operator(const ModSeries& a, long long m);
ModSeries v_operator(const ModSeries& a, long long m);
ModSeries twist(const ModSeries& a, const RealCharacter& chi);
ModSeries twist_numerator(const ModSeries& a, const RealCharacter& chi);
ModSeries euler_product_mod(uint64_t modulus, size_t prec);
ModSeries rescale_denom(const ModSeries& a, int new_denom);

// a^e truncated to the first `prec` coefficient slots, binary powering.
// The exact version squares dense operands and is only meant for small
// precision; the modular one rides the transform-based multiply.
FracSeries pow_trunc(const FracSeries& a, unsigned long long e, size_t prec);
ModSeries pow_trunc(const ModSeries& a, unsigned long long e, size_t prec);

long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

}  // namespace etalift
