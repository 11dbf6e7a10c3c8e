#include "etalift/forms.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "etalift/arith.hpp"
#include "etalift/util.hpp"

namespace etalift {

long long EtaQuotient::weight2() const {
  long long s = 0;
  for (const auto& f : factors) s += f.pow;
  return s;
}

long long EtaQuotient::val24() const {
  long long s = 0;
  for (const auto& f : factors) s += f.arg * f.pow;
  return s;
}

long long EtaQuotient::arg_lcm() const {
  long long l = 1;
  for (const auto& f : factors) l = std::lcm(l, f.arg);
  return l;
}

EtaQuotient EtaQuotient::parse(const std::string& text) {
  std::string spaced = text;
  for (auto& ch : spaced)
    if (ch == '*') ch = ' ';
  std::istringstream in(spaced);
  EtaQuotient eq;
  std::string tok;
  while (in >> tok) {
    EtaFactor f;
    size_t caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        f.arg = std::stoll(tok);
        f.pow = 1;
      } else {
        f.arg = std::stoll(tok.substr(0, caret));
        f.pow = std::stoi(tok.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("eta quotient: bad factor '" + tok + "'");
    }
    if (f.arg < 1) throw std::invalid_argument("eta quotient: argument must be >= 1");
    if (f.pow != 0) eq.factors.push_back(f);
  }
  if (eq.factors.empty()) throw std::invalid_argument("eta quotient: no factors");
  return eq;
}

std::string EtaQuotient::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out << ' ';
    out << factors[i].arg << '^' << factors[i].pow;
  }
  return out.str();
}

FracSeries eta_compact(const EtaQuotient& eq, size_t steps) {
  if (steps == 0) return FracSeries(1, 0, {});
  std::vector<mpq_class> one(steps, mpq_class(0));
  one[0] = 1;
  FracSeries acc(1, 0, std::move(one));
  for (const auto& f : eq.factors) {
    FracSeries es = v_operator(euler_product((steps + f.arg - 1) / f.arg), f.arg);
    for (int i = 0; i < std::abs(f.pow); ++i)
      acc = f.pow > 0 ? mul(acc, es) : div(acc, es);
  }
  return acc;
}

ModSeries eta_compact_mod(const EtaQuotient& eq, uint64_t modulus, size_t steps) {
  if (steps == 0) return ModSeries(modulus, 1, 0, {});
  std::vector<uint64_t> one(steps, 0);
  one[0] = 1 % modulus;
  ModSeries acc(modulus, 1, 0, std::move(one));
  for (const auto& f : eq.factors) {
    ModSeries es =
        v_operator(euler_product_mod(modulus, (steps + f.arg - 1) / f.arg), f.arg);
    ModSeries p = pow_trunc(es, (unsigned long long)std::abs(f.pow), steps);
    acc = f.pow > 0 ? mul(acc, p) : mul(acc, invert(p));
  }
  return acc;
}

FracSeries expand_eta_quotient(const EtaQuotient& eq, size_t steps) {
  FracSeries cpt = eta_compact(eq, steps);
  if (steps == 0) return FracSeries(24, eq.val24(), {});
  std::vector<mpq_class> c((steps - 1) * 24 + 1, mpq_class(0));
  for (size_t k = 0; k < steps; ++k)
    if (cpt[k] != 0) c[24 * k] = cpt[k];
  return FracSeries(24, eq.val24(), std::move(c));
}

FracSeries theta_series(size_t prec) {
  std::vector<mpq_class> c(prec, mpq_class(0));
  if (prec > 0) c[0] = 1;
  for (long long n = 1; (size_t)(n * n) < prec; ++n) c[(size_t)(n * n)] = 2;
  return FracSeries(1, 0, std::move(c));
}

// --- 5-colored Frobenius partitions ---

namespace {

// chi5(n) = kronecker(5, n), period 5.
constexpr int kChi5[5] = {0, 1, -1, -1, 1};

// Divisor sums S1(n) = sum_{d|n} chi5(d) d and S2(n) = sum_{d|n} chi5(n/d) d
// for n = 0..nmax (both 0 at n = 0).
void sieve_s1_s2(size_t nmax, std::vector<long long>& s1, std::vector<long long>& s2) {
  s1.assign(nmax + 1, 0);
  s2.assign(nmax + 1, 0);
  for (size_t d = 1; d <= nmax; ++d) {
    int ch = kChi5[d % 5];
    if (ch == 0) continue;
    for (size_t n = d; n <= nmax; n += d) {
      s1[n] += ch > 0 ? (long long)d : -(long long)d;
      s2[n] += ch > 0 ? (long long)(n / d) : -(long long)(n / d);
    }
  }
}

// Largest-x / smallest-x integer range for the next enumeration variable,
// from (m+2) x^2 + 2 s x + (s^2 - (m+1)(cap - t)) <= 0 where m variables
// remain after x and cap = 2 nmax.  Returns false when the range is empty.
bool level_range(long long s, long long t, long long m, long long cap,
                 long long& lo, long long& hi) {
  long long A = m + 2;
  long long disc4 = (m + 1) * ((m + 2) * (cap - t) - s * s);
  if (disc4 < 0) return false;
  double rt = std::sqrt((double)disc4);
  lo = (long long)std::floor((-(double)s - rt) / (double)A) - 2;
  hi = (long long)std::ceil((-(double)s + rt) / (double)A) + 2;
  auto ok = [&](long long x) {
    return A * x * x + 2 * s * x + (s * s - (m + 1) * (cap - t)) <= 0;
  };
  while (lo <= hi && !ok(lo)) ++lo;
  while (hi >= lo && !ok(hi)) --hi;
  return lo <= hi;
}

// One enumeration level; `left` variables remain after the one chosen here.
void rm_dfs(long long s, long long t, long long left, long long cap,
            std::vector<long long>& r) {
  long long lo, hi;
  if (!level_range(s, t, left, cap, lo, hi)) return;
  if (left == 0) {
    for (long long x = lo; x <= hi; ++x) {
      long long ss = s + x, tt = t + x * x;
      // ss^2 + tt is always even, so the shift below is exact.
      long long q = (ss * ss + tt) >> 1;
      if (q < (long long)r.size()) ++r[(size_t)q];
    }
    return;
  }
  for (long long x = lo; x <= hi; ++x)
    rm_dfs(s + x, t + x * x, left - 1, cap, r);
}

}  // namespace

std::vector<long long> rm_counts(int m, size_t nmax) {
  if (m < 1 || m > 16) throw std::invalid_argument("rm_counts: m out of range");
  std::vector<long long> r(nmax + 1, 0);
  if (m == 1) {
    r[0] = 1;
    return r;
  }
  rm_dfs(0, 0, m - 2, 2 * (long long)nmax, r);
  return r;
}

long long rm_count(int m, long long n) {
  if (n < 0) return 0;
  if (n > 100000)
    throw std::invalid_argument("rm_count: single values are capped at n = 10^5");
  return rm_counts(m, (size_t)n)[(size_t)n];
}

FracSeries eisenstein_series(long long k, const RealCharacter& psi,
                             const RealCharacter& phi, size_t prec) {
  if (psi.parity() * phi.parity() != (k % 2 ? -1 : 1))
    throw std::invalid_argument(
        "eisenstein_series: character parity conflicts with the weight");
  std::vector<mpq_class> c(prec);
  for (long long d = 1; d < (long long)prec; ++d) {
    int pd = phi(d);
    if (pd == 0) continue;
    mpz_class dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), (unsigned long)d, (unsigned long)(k - 1));
    for (long long n = d; n < (long long)prec; n += d) {
      int s = pd * psi(n / d);
      if (s > 0) c[(size_t)n] += dk;
      else if (s < 0) c[(size_t)n] -= dk;
    }
  }
  return FracSeries(1, 0, std::move(c));
}

std::vector<long long> a5_by_enumeration(size_t nmax) { return rm_counts(5, nmax); }

A5Fit fit_a5() {
  const size_t kCheck = 40;
  std::vector<long long> r = a5_by_enumeration(kCheck);
  std::vector<long long> s1, s2;
  sieve_s1_s2(kCheck, s1, s2);
  A5Fit fit{};
  fit.c0 = r[0];
  // 2x2 exact solve from n = 1, 2.
  long long det = s1[1] * s2[2] - s1[2] * s2[1];
  if (det == 0) throw std::runtime_error("a5 fit: singular system");
  long long n1 = r[1] * s2[2] - r[2] * s2[1];
  long long n2 = s1[1] * r[2] - s1[2] * r[1];
  if (n1 % det != 0 || n2 % det != 0)
    throw std::runtime_error("a5 fit: non-integral solution");
  fit.c1 = n1 / det;
  fit.c2 = n2 / det;
  for (size_t n = 0; n <= kCheck; ++n) {
    long long pred = (n == 0 ? fit.c0 : 0) + fit.c1 * s1[n] + fit.c2 * s2[n];
    if (pred != r[n]) throw std::runtime_error("a5 fit: formula fails at n=" + std::to_string(n));
  }
  return fit;
}

namespace {

std::vector<long long> a5_values(size_t nterms) {
  A5Fit fit = fit_a5();
  if (nterms == 0) return {};
  std::vector<long long> s1, s2;
  sieve_s1_s2(nterms - 1, s1, s2);
  std::vector<long long> r(nterms);
  r[0] = fit.c0;
  for (size_t n = 1; n < nterms; ++n) r[n] = fit.c1 * s1[n] + fit.c2 * s2[n];
  return r;
}

}  // namespace

FracSeries a5_series(size_t nterms) {
  auto r = a5_values(nterms);
  std::vector<mpq_class> c(nterms);
  for (size_t n = 0; n < nterms; ++n) c[n] = (long)r[n];
  return FracSeries(1, 0, std::move(c));
}

ModSeries a5_series_mod(uint64_t modulus, size_t nterms) {
  auto r = a5_values(nterms);
  std::vector<uint64_t> c(nterms);
  for (size_t n = 0; n < nterms; ++n) {
    long long v = r[n] % (long long)modulus;
    if (v < 0) v += (long long)modulus;
    c[n] = (uint64_t)v;
  }
  return ModSeries(modulus, 1, 0, std::move(c));
}

bool validate_a5(size_t nmax) {
  auto enumerated = a5_by_enumeration(nmax);
  auto fitted = a5_values(nmax + 1);
  for (size_t n = 0; n <= nmax; ++n)
    if (enumerated[n] != fitted[n]) return false;
  return true;
}

FracSeries cphi5_series(size_t nterms) {
  FracSeries acc = a5_series(nterms);
  FracSeries e = euler_product(nterms);
  for (int i = 0; i < 5; ++i) acc = div(acc, e);
  return acc;
}

ModSeries cphi5_series_mod(uint64_t modulus, size_t nterms) {
  ModSeries a5 = a5_series_mod(modulus, nterms);
  ModSeries einv = invert(euler_product_mod(modulus, nterms));
  return mul(a5, pow_trunc(einv, 5, nterms));
}

namespace {

void check_cphi_args(int m, size_t prec) {
  if (m < 2 || m > 8)
    throw std::invalid_argument("cphi: enumeration handles 2 <= m <= 8 only");
  if (prec > 10001)
    throw std::invalid_argument("cphi: enumeration precision capped at 10^4 + 1");
}

}  // namespace

FracSeries cphi_series(int m, size_t prec) {
  if (prec == 0) return FracSeries(1, 0, {});
  if (m == 1) return invert(euler_product(prec));
  if (m == 5) return cphi5_series(prec);
  check_cphi_args(m, prec);
  auto r = rm_counts(m, prec - 1);
  std::vector<mpq_class> c(prec);
  for (size_t n = 0; n < prec; ++n) c[n] = (long)r[n];
  FracSeries acc(1, 0, std::move(c));
  FracSeries e = euler_product(prec);
  for (int i = 0; i < m; ++i) acc = div(acc, e);
  return acc;
}

ModSeries cphi_series_mod(int m, uint64_t modulus, size_t prec) {
  if (prec == 0) return ModSeries(modulus, 1, 0, {});
  if (m == 1) return invert(euler_product_mod(modulus, prec));
  if (m == 5) return cphi5_series_mod(modulus, prec);
  check_cphi_args(m, prec);
  auto r = rm_counts(m, prec - 1);
  std::vector<uint64_t> c(prec);
  for (size_t n = 0; n < prec; ++n) {
    long long v = r[n] % (long long)modulus;
    if (v < 0) v += (long long)modulus;
    c[n] = (uint64_t)v;
  }
  ModSeries acc(modulus, 1, 0, std::move(c));
  ModSeries einv = invert(euler_product_mod(modulus, prec));
  return mul(acc, pow_trunc(einv, (unsigned long long)m, prec));
}

long long eta_sum_val24(const std::vector<EtaTerm>& terms) {
  if (terms.empty()) throw std::invalid_argument("eta_sum_val24: empty sum");
  long long v = terms[0].eq.val24();
  for (const auto& t : terms) {
    long long w = t.eq.val24();
    if ((w - v) % 24 != 0)
      throw std::invalid_argument("eta_sum_val24: mixed cosets mod 24");
    if (w < v) v = w;
  }
  return v;
}

FracSeries eta_sum_compact(const std::vector<EtaTerm>& terms, size_t steps) {
  long long v = eta_sum_val24(terms);
  std::vector<mpq_class> c(steps);
  for (const auto& t : terms) {
    size_t shift = (size_t)((t.eq.val24() - v) / 24);
    if (shift >= steps) continue;
    FracSeries part = eta_compact(t.eq, steps - shift);
    for (size_t i = 0; i < part.prec(); ++i)
      if (part[i] != 0) c[i + shift] += t.coeff * part[i];
  }
  return FracSeries(1, 0, std::move(c));
}

ModSeries eta_sum_compact_mod(const std::vector<EtaTerm>& terms,
                              uint64_t modulus, size_t steps) {
  long long v = eta_sum_val24(terms);
  std::vector<uint64_t> c(steps, 0);
  for (const auto& t : terms) {
    size_t shift = (size_t)((t.eq.val24() - v) / 24);
    if (shift >= steps) continue;
    uint64_t num = mpz_fdiv_ui(t.coeff.get_num().get_mpz_t(), modulus);
    uint64_t den = mpz_fdiv_ui(t.coeff.get_den().get_mpz_t(), modulus);
    uint64_t scalar =
        (uint64_t)(((unsigned __int128)num * invmod(den, modulus)) % modulus);
    if (scalar == 0) continue;
    ModSeries part = eta_compact_mod(t.eq, modulus, steps - shift);
    for (size_t i = 0; i < part.prec(); ++i) {
      if (!part[i]) continue;
      uint64_t term =
          (uint64_t)(((unsigned __int128)part[i] * scalar) % modulus);
      c[i + shift] = (c[i + shift] + term) % modulus;
    }
  }
  return ModSeries(modulus, 1, 0, std::move(c));
}

FracSeries spread_compact(const FracSeries& compact, long long val24, int denom) {
  if (compact.denom() != 1 || compact.val() != 0)
    throw std::invalid_argument("spread_compact: expects a compact expansion");
  if ((val24 * denom) % 24 != 0)
    throw std::invalid_argument("spread_compact: valuation off the target lattice");
  long long v = val24 * denom / 24;
  size_t n = compact.prec();
  if (n == 0) return FracSeries(denom, v, {});
  std::vector<mpq_class> c((n - 1) * (size_t)denom + 1);
  for (size_t k = 0; k < n; ++k)
    if (compact[k] != 0) c[k * (size_t)denom] = compact[k];
  return FracSeries(denom, v, std::move(c));
}

ModSeries delta_power_mod(uint64_t ell, long long e, size_t steps) {
  if (e < 0) throw std::invalid_argument("delta_power_mod: negative exponent");
  if (steps == 0) return ModSeries(ell, 1, e, {});
  std::vector<uint64_t> one(steps, 0);
  one[0] = 1 % ell;
  ModSeries acc(ell, 1, 0, std::move(one));
  // E^(24 e) = prod_j E(q^(ell^j))^(d_j) mod ell, with d_j the base-ell
  // digits of 24 e.
  long long rem = 24 * e;
  long long power = 1;
  while (rem > 0) {
    long long digit = rem % (long long)ell;
    rem /= (long long)ell;
    if (digit > 0) {
      ModSeries ej = v_operator(
          euler_product_mod(ell, (steps + (size_t)power - 1) / (size_t)power),
          power);
      acc = mul(acc, pow_trunc(ej, (unsigned long long)digit, steps));
    }
    power *= (long long)ell;
  }
  return ModSeries(ell, 1, e, std::vector<uint64_t>(acc.coeffs()));
}

}  // namespace etalift
