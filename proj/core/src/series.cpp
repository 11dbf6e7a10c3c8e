#include "etalift/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "etalift/ntt.hpp"
#include "etalift/util.hpp"

namespace etalift {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

namespace {

void check_denom(int d) {
  if (d != 1 && d != 8 && d != 24)
    throw std::invalid_argument("series: denom must be 1, 8 or 24");
}

// Common exponent lattice for binary ops: equal denominators pass through,
// denom 1 promotes to the other side, 8 vs 24 is a hard error.
int common_denom(int da, int db) {
  if (da == db) return da;
  if (da == 1) return db;
  if (db == 1) return da;
  throw std::invalid_argument("series: cannot mix denom 8 and denom 24 lattices");
}

}  // namespace

FracSeries::FracSeries(int denom, long long val, std::vector<mpq_class> coeffs)
    : denom_(denom), val_(val), c_(std::move(coeffs)) {
  check_denom(denom);
}

FracSeries FracSeries::zero(int denom, long long val, size_t prec) {
  return FracSeries(denom, val, std::vector<mpq_class>(prec, mpq_class(0)));
}

mpq_class FracSeries::at_num(long long n) const {
  if (n < val_) return mpq_class(0);
  if (!known(n)) throw std::out_of_range("FracSeries::at_num: beyond precision");
  return c_[(size_t)(n - val_)];
}

size_t FracSeries::nonzero_count() const {
  size_t k = 0;
  for (const auto& x : c_)
    if (x != 0) ++k;
  return k;
}

FracSeries FracSeries::trimmed() const {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  return FracSeries(denom_, val_ + (long long)lead,
                    std::vector<mpq_class>(c_.begin() + lead, c_.end()));
}

FracSeries FracSeries::shifted(long long delta) const {
  return FracSeries(denom_, val_ + delta, c_);
}

// Spreads a series onto a finer lattice: factor f = new denom / old denom.
// The gaps are known zeros, and so are the f-1 slots past the old window,
// which is why the precision comes out as f * prec exactly.
static FracSeries promote_frac(const FracSeries& a, int target) {
  int f = target / a.denom();
  if (f == 1) return a;
  std::vector<mpq_class> c((size_t)a.prec() * f, mpq_class(0));
  for (size_t i = 0; i < a.prec(); ++i)
    if (a[i] != 0) c[i * f] = a[i];
  return FracSeries(target, a.val() * f, std::move(c));
}

FracSeries add(const FracSeries& a0, const FracSeries& b0) {
  int d = common_denom(a0.denom(), b0.denom());
  FracSeries a = promote_frac(a0, d), b = promote_frac(b0, d);
  long long v = std::min(a.val(), b.val());
  long long hi = std::min(a.max_num(), b.max_num());
  if (a.empty() || b.empty() || hi < v)
    return FracSeries(d, v, {});
  std::vector<mpq_class> c((size_t)(hi - v + 1));
  for (long long n = v; n <= hi; ++n)
    c[(size_t)(n - v)] = a.at_num(n) + b.at_num(n);
  return FracSeries(d, v, std::move(c));
}

FracSeries scale(const FracSeries& a, const mpq_class& s) {
  std::vector<mpq_class> c(a.coeffs());
  for (auto& x : c) x *= s;
  return FracSeries(a.denom(), a.val(), std::move(c));
}

FracSeries mul(const FracSeries& a0, const FracSeries& b0) {
  int d = common_denom(a0.denom(), b0.denom());
  FracSeries a = promote_frac(a0, d), b = promote_frac(b0, d);
  long long v = a.val() + b.val();
  size_t L = std::min(a.prec(), b.prec());
  if (a.empty() || b.empty())
    return FracSeries(d, v, {});
  // Iterate over the sparser factor's support; pentagonal-type factors with
  // +-1 entries reduce to pure additions.
  const FracSeries& s = a.nonzero_count() <= b.nonzero_count() ? a : b;
  const FracSeries& t = (&s == &a) ? b : a;
  std::vector<mpq_class> c(L, mpq_class(0));
  for (size_t i = 0; i < std::min(s.prec(), L); ++i) {
    const mpq_class& si = s[i];
    if (si == 0) continue;
    size_t jmax = std::min(t.prec(), L - i);
    if (si == 1) {
      for (size_t j = 0; j < jmax; ++j)
        if (t[j] != 0) c[i + j] += t[j];
    } else if (si == -1) {
      for (size_t j = 0; j < jmax; ++j)
        if (t[j] != 0) c[i + j] -= t[j];
    } else {
      for (size_t j = 0; j < jmax; ++j)
        if (t[j] != 0) c[i + j] += si * t[j];
    }
  }
  return FracSeries(d, v, std::move(c));
}

FracSeries invert(const FracSeries& a) {
  if (a.empty()) throw std::invalid_argument("invert: empty series");
  if (a[0] != 1 && a[0] != -1)
    throw std::invalid_argument("invert: leading coefficient must be +1 or -1");
  size_t P = a.prec();
  std::vector<size_t> tail;
  for (size_t j = 1; j < P; ++j)
    if (a[j] != 0) tail.push_back(j);
  std::vector<mpq_class> b(P, mpq_class(0));
  b[0] = a[0];
  mpq_class acc;
  for (size_t k = 1; k < P; ++k) {
    acc = 0;
    for (size_t j : tail) {
      if (j > k) break;
      acc += a[j] * b[k - j];
    }
    b[k] = -acc * a[0];
  }
  return FracSeries(a.denom(), -a.val(), std::move(b));
}

FracSeries div(const FracSeries& a0, const FracSeries& b0) {
  int d = common_denom(a0.denom(), b0.denom());
  FracSeries a = promote_frac(a0, d), b = promote_frac(b0, d);
  if (b.empty()) throw std::invalid_argument("div: empty divisor");
  if (b[0] != 1 && b[0] != -1)
    throw std::invalid_argument("div: leading divisor coefficient must be +1 or -1");
  size_t L = std::min(a.prec(), b.prec());
  std::vector<size_t> tail;
  for (size_t j = 1; j < std::min(b.prec(), L); ++j)
    if (b[j] != 0) tail.push_back(j);
  std::vector<mpq_class> c(L, mpq_class(0));
  mpq_class acc;
  for (size_t k = 0; k < L; ++k) {
    acc = a[k];
    for (size_t j : tail) {
      if (j > k) break;
      acc -= b[j] * c[k - j];
    }
    c[k] = acc * b[0];
  }
  return FracSeries(d, a.val() - b.val(), std::move(c));
}

FracSeries u_operator(const FracSeries& a, long long m) {
  if (m < 1) throw std::invalid_argument("u_operator: m must be >= 1");
  long long v = ceil_div(a.val(), m);
  long long last = floor_div(a.max_num(), m);
  if (a.empty() || last < v) return FracSeries(a.denom(), v, {});
  std::vector<mpq_class> c((size_t)(last - v + 1));
  for (long long n = v; n <= last; ++n)
    c[(size_t)(n - v)] = a.at_num(m * n);
  return FracSeries(a.denom(), v, std::move(c));
}

FracSeries v_operator(const FracSeries& a, long long m) {
  if (m < 1) throw std::invalid_argument("v_operator: m must be >= 1");
  std::vector<mpq_class> c((size_t)a.prec() * (size_t)m, mpq_class(0));
  for (size_t i = 0; i < a.prec(); ++i)
    if (a[i] != 0) c[i * (size_t)m] = a[i];
  return FracSeries(a.denom(), a.val() * m, std::move(c));
}

FracSeries twist(const FracSeries& a, const RealCharacter& chi) {
  if (a.denom() != 1)
    throw std::invalid_argument("twist: integral exponents required; use twist_numerator");
  return twist_numerator(a, chi);
}

FracSeries twist_numerator(const FracSeries& a, const RealCharacter& chi) {
  std::vector<mpq_class> c(a.prec());
  for (size_t i = 0; i < a.prec(); ++i) {
    int e = chi(a.val() + (long long)i);
    if (e == 1) c[i] = a[i];
    else if (e == -1) c[i] = -a[i];
  }
  return FracSeries(a.denom(), a.val(), std::move(c));
}

FracSeries euler_product(size_t prec) {
  std::vector<mpq_class> c(prec, mpq_class(0));
  if (prec > 0) c[0] = 1;
  for (long long k = 1;; ++k) {
    long long g1 = k * (3 * k - 1) / 2;
    long long g2 = k * (3 * k + 1) / 2;
    if (g1 >= (long long)prec) break;
    int s = (k & 1) ? -1 : 1;
    c[(size_t)g1] += s;
    if (g2 < (long long)prec) c[(size_t)g2] += s;
  }
  return FracSeries(1, 0, std::move(c));
}

FracSeries rescale_denom(const FracSeries& a, int new_denom) {
  check_denom(new_denom);
  if (new_denom == a.denom()) return a;
  if (new_denom % a.denom() == 0) return promote_frac(a, new_denom);
  int f = a.denom() / new_denom;
  long long v = ceil_div(a.val(), f);
  long long last = floor_div(a.max_num(), f);
  for (size_t i = 0; i < a.prec(); ++i)
    if (a[i] != 0 && (a.val() + (long long)i) % f != 0)
      throw std::domain_error("rescale_denom: support not on the coarser lattice");
  if (a.empty() || last < v) return FracSeries(new_denom, v, {});
  std::vector<mpq_class> c((size_t)(last - v + 1));
  for (long long n = v; n <= last; ++n)
    c[(size_t)(n - v)] = a.at_num(f * n);
  return FracSeries(new_denom, v, std::move(c));
}

// --- modular series ---

ModSeries::ModSeries(uint64_t modulus, int denom, long long val,
                     std::vector<uint64_t> coeffs)
    : mod_(modulus), denom_(denom), val_(val), c_(std::move(coeffs)) {
  check_denom(denom);
  if (modulus < 2) throw std::invalid_argument("ModSeries: modulus must be >= 2");
  for (auto& x : c_)
    if (x >= mod_) x %= mod_;
}

ModSeries ModSeries::zero(uint64_t modulus, int denom, long long val, size_t prec) {
  return ModSeries(modulus, denom, val, std::vector<uint64_t>(prec, 0));
}

uint64_t ModSeries::at_num(long long n) const {
  if (n < val_) return 0;
  if (!known(n)) throw std::out_of_range("ModSeries::at_num: beyond precision");
  return c_[(size_t)(n - val_)];
}

size_t ModSeries::nonzero_count() const {
  size_t k = 0;
  for (auto x : c_)
    if (x) ++k;
  return k;
}

ModSeries ModSeries::trimmed() const {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  return ModSeries(mod_, denom_, val_ + (long long)lead,
                   std::vector<uint64_t>(c_.begin() + lead, c_.end()));
}

ModSeries ModSeries::shifted(long long delta) const {
  return ModSeries(mod_, denom_, val_ + delta, c_);
}

ModSeries reduce_mod(const FracSeries& a, uint64_t modulus) {
  std::vector<uint64_t> c(a.prec());
  for (size_t i = 0; i < a.prec(); ++i) {
    const mpq_class& q = a[i];
    uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), modulus);
    uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), modulus);
    if (gcdll((long long)den, (long long)modulus) != 1)
      throw std::domain_error("reduce_mod: coefficient denominator shares a factor with modulus");
    c[i] = (uint64_t)((unsigned __int128)num * invmod(den, modulus) % modulus);
  }
  return ModSeries(modulus, a.denom(), a.val(), std::move(c));
}

namespace {

ModSeries promote_modseries(const ModSeries& a, int target) {
  int f = target / a.denom();
  if (f == 1) return a;
  std::vector<uint64_t> c((size_t)a.prec() * f, 0);
  for (size_t i = 0; i < a.prec(); ++i)
    if (a[i]) c[i * f] = a[i];
  return ModSeries(a.modulus(), target, a.val() * f, std::move(c));
}

void check_same_mod(const ModSeries& a, const ModSeries& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("modular series: mismatched moduli");
}

}  // namespace

ModSeries add(const ModSeries& a0, const ModSeries& b0) {
  check_same_mod(a0, b0);
  int d = common_denom(a0.denom(), b0.denom());
  ModSeries a = promote_modseries(a0, d), b = promote_modseries(b0, d);
  uint64_t m = a.modulus();
  long long v = std::min(a.val(), b.val());
  long long hi = std::min(a.max_num(), b.max_num());
  if (a.empty() || b.empty() || hi < v) return ModSeries(m, d, v, {});
  std::vector<uint64_t> c((size_t)(hi - v + 1));
  for (long long n = v; n <= hi; ++n) {
    uint64_t s = a.at_num(n) + b.at_num(n);
    c[(size_t)(n - v)] = s >= m ? s - m : s;
  }
  return ModSeries(m, d, v, std::move(c));
}

ModSeries scale(const ModSeries& a, uint64_t s) {
  s %= a.modulus();
  std::vector<uint64_t> c(a.coeffs());
  for (auto& x : c) x = (uint64_t)((unsigned __int128)x * s % a.modulus());
  return ModSeries(a.modulus(), a.denom(), a.val(), std::move(c));
}

ModSeries mul(const ModSeries& a0, const ModSeries& b0) {
  check_same_mod(a0, b0);
  int d = common_denom(a0.denom(), b0.denom());
  ModSeries a = promote_modseries(a0, d), b = promote_modseries(b0, d);
  const uint64_t m = a.modulus();
  long long v = a.val() + b.val();
  size_t L = std::min(a.prec(), b.prec());
  if (a.empty() || b.empty()) return ModSeries(m, d, v, {});
  if (L >= (size_t(1) << 14)) {
    auto c = ntt::convolve_mod(a.coeffs(), b.coeffs(), m, L);
    return ModSeries(m, d, v, std::move(c));
  }
  const ModSeries& s = a.nonzero_count() <= b.nonzero_count() ? a : b;
  const ModSeries& t = (&s == &a) ? b : a;
  std::vector<uint64_t> c(L, 0);
  for (size_t i = 0; i < std::min(s.prec(), L); ++i) {
    uint64_t si = s[i];
    if (!si) continue;
    size_t jmax = std::min(t.prec(), L - i);
    for (size_t j = 0; j < jmax; ++j) {
      if (!t[j]) continue;
      uint64_t add = (uint64_t)((unsigned __int128)si * t[j] % m);
      uint64_t r = c[i + j] + add;
      c[i + j] = r >= m ? r - m : r;
    }
  }
  return ModSeries(m, d, v, std::move(c));
}

namespace {

// Direct inversion recurrence, O(prec * nnz).
std::vector<uint64_t> invert_slow(const std::vector<uint64_t>& a, uint64_t m) {
  size_t P = a.size();
  uint64_t a0inv = invmod(a[0], m);
  std::vector<size_t> tail;
  for (size_t j = 1; j < P; ++j)
    if (a[j]) tail.push_back(j);
  std::vector<uint64_t> b(P, 0);
  b[0] = a0inv;
  for (size_t k = 1; k < P; ++k) {
    unsigned __int128 acc = 0;
    for (size_t j : tail) {
      if (j > k) break;
      acc += (unsigned __int128)a[j] * b[k - j];
      if (acc >> 120) acc %= m;
    }
    uint64_t s = (uint64_t)(acc % m);
    b[k] = (uint64_t)((unsigned __int128)(s ? m - s : 0) * a0inv % m);
  }
  return b;
}

// Newton iteration x -> x(2 - ax), doubling the valid precision each step.
std::vector<uint64_t> invert_newton(const std::vector<uint64_t>& a, uint64_t m) {
  size_t P = a.size();
  std::vector<uint64_t> x{invmod(a[0], m)};
  while (x.size() < P) {
    size_t np = std::min(x.size() * 2, P);
    std::vector<uint64_t> ahead(a.begin(), a.begin() + np);
    auto ax = ntt::convolve_mod(ahead, x, m, np);
    ax[0] = (2 % m + m - ax[0]) % m;
    for (size_t k = 1; k < np; ++k) ax[k] = ax[k] ? m - ax[k] : 0;
    x = ntt::convolve_mod(x, ax, m, np);
  }
  return x;
}

}  // namespace

ModSeries invert(const ModSeries& a) {
  if (a.empty()) throw std::invalid_argument("invert: empty series");
  if (gcdll((long long)a[0], (long long)a.modulus()) != 1)
    throw std::invalid_argument("invert: leading coefficient not invertible");
  size_t P = a.prec();
  bool sparse = a.nonzero_count() * P <= (size_t(1) << 27);
  auto b = (P < (size_t(1) << 14) || sparse) ? invert_slow(a.coeffs(), a.modulus())
                                             : invert_newton(a.coeffs(), a.modulus());
  return ModSeries(a.modulus(), a.denom(), -a.val(), std::move(b));
}

ModSeries div(const ModSeries& a, const ModSeries& b) {
  return mul(a, invert(b));
}

ModSeries u_operator(const ModSeries& a, long long m) {
  if (m < 1) throw std::invalid_argument("u_operator: m must be >= 1");
  long long v = ceil_div(a.val(), m);
  long long last = floor_div(a.max_num(), m);
  if (a.empty() || last < v) return ModSeries(a.modulus(), a.denom(), v, {});
  std::vector<uint64_t> c((size_t)(last - v + 1));
  for (long long n = v; n <= last; ++n)
    c[(size_t)(n - v)] = a.at_num(m * n);
  return ModSeries(a.modulus(), a.denom(), v, std::move(c));
}

ModSeries v_operator(const ModSeries& a, long long m) {
  if (m < 1) throw std::invalid_argument("v_operator: m must be >= 1");
  std::vector<uint64_t> c((size_t)a.prec() * (size_t)m, 0);
  for (size_t i = 0; i < a.prec(); ++i)
    if (a[i]) c[i * (size_t)m] = a[i];
  return ModSeries(a.modulus(), a.denom(), a.val() * m, std::move(c));
}

ModSeries twist(const ModSeries& a, const RealCharacter& chi) {
  if (a.denom() != 1)
    throw std::invalid_argument("twist: integral exponents required; use twist_numerator");
  return twist_numerator(a, chi);
}

ModSeries twist_numerator(const ModSeries& a, const RealCharacter& chi) {
  std::vector<uint64_t> c(a.prec(), 0);
  for (size_t i = 0; i < a.prec(); ++i) {
    if (!a[i]) continue;
    int e = chi(a.val() + (long long)i);
    if (e == 1) c[i] = a[i];
    else if (e == -1) c[i] = a.modulus() - a[i];
  }
  return ModSeries(a.modulus(), a.denom(), a.val(), std::move(c));
}

ModSeries euler_product_mod(uint64_t modulus, size_t prec) {
  std::vector<uint64_t> c(prec, 0);
  if (prec > 0) c[0] = 1 % modulus;
  for (long long k = 1;; ++k) {
    long long g1 = k * (3 * k - 1) / 2;
    long long g2 = k * (3 * k + 1) / 2;
    if (g1 >= (long long)prec) break;
    uint64_t s = (k & 1) ? modulus - 1 : 1;
    c[(size_t)g1] = (c[(size_t)g1] + s) % modulus;
    if (g2 < (long long)prec) c[(size_t)g2] = (c[(size_t)g2] + s) % modulus;
  }
  return ModSeries(modulus, 1, 0, std::move(c));
}

FracSeries pow_trunc(const FracSeries& a, unsigned long long e, size_t prec) {
  std::vector<mpq_class> one(prec, mpq_class(0));
  if (prec > 0) one[0] = 1;
  FracSeries acc(a.denom(), 0, std::move(one));
  FracSeries base(a.denom(), a.val(),
                  std::vector<mpq_class>(a.coeffs().begin(),
                                         a.coeffs().begin() +
                                             (long long)std::min(a.prec(), prec)));
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

ModSeries pow_trunc(const ModSeries& a, unsigned long long e, size_t prec) {
  std::vector<uint64_t> one(prec, 0);
  if (prec > 0) one[0] = 1 % a.modulus();
  ModSeries acc(a.modulus(), a.denom(), 0, std::move(one));
  ModSeries base(a.modulus(), a.denom(), a.val(),
                 std::vector<uint64_t>(a.coeffs().begin(),
                                       a.coeffs().begin() +
                                           (long long)std::min(a.prec(), prec)));
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

ModSeries rescale_denom(const ModSeries& a, int new_denom) {
  check_denom(new_denom);
  if (new_denom == a.denom()) return a;
  if (new_denom % a.denom() == 0) return promote_modseries(a, new_denom);
  int f = a.denom() / new_denom;
  long long v = ceil_div(a.val(), f);
  long long last = floor_div(a.max_num(), f);
  for (size_t i = 0; i < a.prec(); ++i)
    if (a[i] != 0 && (a.val() + (long long)i) % f != 0)
      throw std::domain_error("rescale_denom: support not on the coarser lattice");
  if (a.empty() || last < v) return ModSeries(a.modulus(), new_denom, v, {});
  std::vector<uint64_t> c((size_t)(last - v + 1));
  for (long long n = v; n <= last; ++n)
    c[(size_t)(n - v)] = a.at_num(f * n);
  return ModSeries(a.modulus(), new_denom, v, std::move(c));
}

}  // namespace etalift
