#include "etalift/hecke.hpp"

#include <numeric>
#include <stdexcept>

namespace etalift {

namespace {

mpz_class zpow(long long b, long long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)b, (unsigned long)e);
  return r;
}

}  // namespace

long long HalfIntegralMeta::r_mod24() const {
  long long m = ((r % 24) + 24) % 24;
  if (m % 2 == 0) throw std::invalid_argument("meta: r must be odd");
  return m;
}

int HalfIntegralMeta::lattice() const { return r_mod24() % 3 == 0 ? 8 : 24; }

long long HalfIntegralMeta::support_residue() const {
  long long m = r_mod24();
  return m % 3 == 0 ? m / 3 : m;
}

bool HalfIntegralMeta::space_nontrivial() const {
  int rhs = kronecker(-1, r_mod24()) * (lambda % 2 ? -1 : 1);
  return psi.parity() == rhs;
}

void HalfIntegralMeta::check_support(const FracSeries& f) const {
  int lat = lattice();
  if (f.denom() != lat)
    throw std::invalid_argument("meta: series lattice mismatch");
  long long res = support_residue();
  for (size_t i = 0; i < f.prec(); ++i) {
    if (f[i] == 0) continue;
    long long n = f.val() + (long long)i;
    if (((n % lat) + lat) % lat != res)
      throw std::invalid_argument("meta: coefficient off the supported class");
  }
}

FracSeries t_p2_eta(const HalfIntegralMeta& meta, const FracSeries& f, long long p) {
  int lat = meta.lattice();
  if (lat == 24 && p < 5)
    throw std::invalid_argument("t_p2_eta: p >= 5 required on the /24 lattice");
  if (lat == 8 && p < 3)
    throw std::invalid_argument("t_p2_eta: p >= 3 required on the /8 lattice");
  meta.check_support(f);

  // (-1|p)^((r-1)/2): only the parity of (r-1)/2 matters.
  int sign = ((meta.r_mod24() - 1) / 2) % 2 ? kronecker(-1, p) : 1;
  int psip = meta.psi(p);
  mpz_class p_lm1 = zpow(p, meta.lambda - 1);
  mpz_class p_2lm1 = zpow(p, 2 * meta.lambda - 1);
  const long long pp = p * p;

  long long lo = ceil_div(f.val(), pp);
  long long hi = floor_div(f.max_num(), pp);
  if (hi < lo) return FracSeries::zero(lat, lo, 0);
  std::vector<mpq_class> out;
  out.reserve((size_t)(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n) {
    mpq_class acc = f.at_num(pp * n);
    if (psip != 0) {
      int sym = lat == 24 ? kronecker(12 * n, p) : kronecker(n, p);
      int s = sign * sym * psip;
      if (s != 0) {
        mpq_class mid = f.at_num(n) * p_lm1;
        if (s > 0) acc += mid; else acc -= mid;
      }
      if (n % pp == 0) acc += f.at_num(n / pp) * p_2lm1;  // psi(p)^2 = 1 here
    }
    out.push_back(acc);
  }
  return FracSeries(lat, lo, std::move(out));
}

FracSeries t_p2_theta(const FracSeries& g, long long p, long long lambda,
                      const RealCharacter& psi_theta) {
  if (g.denom() != 1)
    throw std::invalid_argument("t_p2_theta: integral exponents required");
  int sign = lambda % 2 ? kronecker(-1, p) : 1;
  int psip = psi_theta(p);
  mpz_class p_lm1 = zpow(p, lambda - 1);
  mpz_class p_2lm1 = zpow(p, 2 * lambda - 1);
  const long long pp = p * p;

  long long lo = ceil_div(g.val(), pp);
  long long hi = floor_div(g.max_num(), pp);
  if (hi < lo) return FracSeries::zero(1, lo, 0);
  std::vector<mpq_class> out;
  out.reserve((size_t)(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n) {
    mpq_class acc = g.at_num(pp * n);
    if (psip != 0) {
      int s = sign * kronecker(n, p) * psip;
      if (s != 0) {
        mpq_class mid = g.at_num(n) * p_lm1;
        if (s > 0) acc += mid; else acc -= mid;
      }
      if (n % pp == 0) acc += g.at_num(n / pp) * p_2lm1;
    }
    out.push_back(acc);
  }
  return FracSeries(1, lo, std::move(out));
}

FracSeries t_p_integral(const FracSeries& f, long long p, long long k,
                        const RealCharacter& chi) {
  if (f.denom() != 1)
    throw std::invalid_argument("t_p_integral: integral exponents required");
  int chip = chi(p);
  mpz_class p_km1 = zpow(p, k - 1);

  long long lo = ceil_div(f.val(), p);
  long long hi = floor_div(f.max_num(), p);
  if (hi < lo) return FracSeries::zero(1, lo, 0);
  std::vector<mpq_class> out;
  out.reserve((size_t)(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n) {
    mpq_class acc = f.at_num(p * n);
    if (chip != 0 && n % p == 0) {
      mpq_class low = f.at_num(n / p) * p_km1;
      if (chip > 0) acc += low; else acc -= low;
    }
    out.push_back(acc);
  }
  return FracSeries(1, lo, std::move(out));
}

ScanReport al_eigen_check(const FracSeries& g, long long p, long long k, int eps) {
  if (g.denom() != 1)
    throw std::invalid_argument("al_eigen_check: integral exponents required");
  if (k % 2 != 0 || k < 2)
    throw std::invalid_argument("al_eigen_check: even weight >= 2 required");
  mpq_class mult = mpq_class(-eps) * zpow(p, k / 2 - 1);
  ScanReport rep;
  long long hi = floor_div(g.max_num(), p);
  for (long long n = 1; n <= hi; ++n) {
    ++rep.checked;
    if (g.at_num(p * n) != mult * g.at_num(n)) {
      rep.pass = false;
      rep.first_violation = n;
      return rep;
    }
  }
  return rep;
}

std::optional<mpq_class> eigen_ratio(const FracSeries& g, const FracSeries& f) {
  if (g.denom() != f.denom()) return std::nullopt;
  long long lo = std::min(g.val(), f.val());
  long long hi = std::min(g.max_num(), f.max_num());
  if (hi < lo) return std::nullopt;
  std::optional<mpq_class> c;
  for (long long n = lo; n <= hi; ++n) {
    mpq_class fv = f.at_num(n);
    mpq_class gv = g.at_num(n);
    if (fv == 0) {
      if (gv != 0) return std::nullopt;
      continue;
    }
    mpq_class ratio = gv / fv;
    if (!c) c = ratio;
    else if (*c != ratio) return std::nullopt;
  }
  return c;
}

}  // namespace etalift
