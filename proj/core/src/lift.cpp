#include "etalift/lift.hpp"

#include <numeric>
#include <stdexcept>

#include "etalift/util.hpp"

namespace etalift {

namespace {

mpz_class zpow(long long b, long long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)b, (unsigned long)e);
  return r;
}

// (12|k) or (-4|k) depending on the lattice.
int lattice_symbol(int lattice, long long k) {
  return lattice == 24 ? kronecker(12, k) : kronecker(-4, k);
}

}  // namespace

LiftResult shimura_lift(const HalfIntegralMeta& meta, const FracSeries& f, long long t) {
  if (t <= 0 || !is_squarefree((uint64_t)t))
    throw std::invalid_argument("shimura_lift: t must be a squarefree positive integer");
  meta.check_support(f);
  const int lat = meta.lattice();

  LiftResult res;
  res.meta = meta;
  res.t = t;
  res.target_weight = 2 * meta.lambda;
  res.target_level = (lat == 24 ? 6 : 2) * meta.level;
  res.eps = atkin_lehner_signs(meta.r_mod24(), meta.psi);
  res.admissible = ((t - meta.support_residue()) % lat + lat) % lat == 0;

  long long maxn = f.max_num();
  long long nmax = 0;
  while ((nmax + 1) * (nmax + 1) <= maxn / t) ++nmax;
  std::vector<mpq_class> b(nmax >= 0 ? (size_t)nmax : 0);
  for (long long n = 1; n <= nmax; ++n) {
    mpq_class acc = 0;
    for (long long j = 1; j <= n; ++j) {
      if (n % j != 0) continue;
      long long k = n / j;
      int s = lattice_symbol(lat, k);
      if (s == 0) continue;
      s *= meta.psi(j) * kronecker(j, t);
      if (s == 0) continue;
      mpq_class term = f.at_num(t * k * k) * zpow(j, meta.lambda - 1);
      if (s > 0) acc += term; else acc -= term;
    }
    b[(size_t)(n - 1)] = std::move(acc);
  }
  res.coeffs = FracSeries(1, 1, std::move(b));
  return res;
}

FracSeries classical_shimura_lift(const FracSeries& g, long long t, long long lambda,
                                  const RealCharacter& psi_theta) {
  if (g.denom() != 1)
    throw std::invalid_argument("classical_shimura_lift: integral exponents required");
  if (t <= 0 || !is_squarefree((uint64_t)t))
    throw std::invalid_argument("classical_shimura_lift: t must be squarefree positive");
  long long maxn = g.max_num();
  long long nmax = 0;
  while ((nmax + 1) * (nmax + 1) <= maxn / t) ++nmax;
  std::vector<mpq_class> c(nmax >= 0 ? (size_t)nmax : 0);
  for (long long n = 1; n <= nmax; ++n) {
    mpq_class acc = 0;
    for (long long j = 1; j <= n; ++j) {
      // The lift character lives modulo the theta-side level, which is
      // divisible by 4, so even j never contributes.
      if (j % 2 == 0 || n % j != 0) continue;
      long long k = n / j;
      int s = psi_theta(j) * kronecker(t, j);
      if (lambda % 2) s *= kronecker(-1, j);
      if (s == 0) continue;
      mpq_class term = g.at_num(t * k * k) * zpow(j, lambda - 1);
      if (s > 0) acc += term; else acc -= term;
    }
    c[(size_t)(n - 1)] = std::move(acc);
  }
  return FracSeries(1, 1, std::move(c));
}

FracSeries as_integral(const FracSeries& f) {
  return FracSeries(1, f.val(), f.coeffs());
}

RealCharacter theta_side_character(const HalfIntegralMeta& meta) {
  RealCharacter chi = meta.psi;
  long long e = meta.lambda + (meta.r_mod24() - 1) / 2;
  if (e % 2) chi = chi.times(RealCharacter::kron_top(-4));
  if (meta.lattice() == 24) chi = chi.times(RealCharacter::kron_top(12));
  return chi;
}

mpq_class compare_lifts(const HalfIntegralMeta& meta, const FracSeries& f,
                        long long t, long long cap) {
  const int lat = meta.lattice();
  FracSeries b = shimura_lift(meta, f, t).coeffs;
  FracSeries c = classical_shimura_lift(as_integral(f), t, meta.lambda,
                                        theta_side_character(meta));
  RealCharacter chi = lat == 24 ? RealCharacter::kron_top(12)
                                : RealCharacter::kron_top(-4);
  FracSeries tb = twist(b, chi);
  long long hi = std::min({cap, tb.max_num(), c.max_num()});
  mpq_class worst = 0;
  for (long long n = 1; n <= hi; ++n) {
    mpq_class d = c.at_num(n) - tb.at_num(n);
    if (d < 0) d = -d;
    if (d > worst) worst = d;
  }
  return worst;
}

ScanReport equivariance_check(const HalfIntegralMeta& meta, const FracSeries& f,
                              long long t, long long p) {
  const int lat = meta.lattice();
  FracSeries lhs = shimura_lift(meta, t_p2_eta(meta, f, p), t).coeffs;
  FracSeries lifted = shimura_lift(meta, f, t).coeffs;
  FracSeries rhs = t_p_integral(lifted, p, 2 * meta.lambda,
                                RealCharacter::principal(meta.level));
  rhs = scale(rhs, mpq_class(lattice_symbol(lat, p)));
  return agree_on_overlap(lhs, rhs);
}

ScanReport eigen_relation_check(const HalfIntegralMeta& meta, const FracSeries& f,
                                const FracSeries& newform,
                                const std::vector<long long>& primes) {
  ScanReport rep;
  const int lat = meta.lattice();
  for (long long p : primes) {
    FracSeries lhs = t_p2_eta(meta, f, p);
    mpq_class factor = mpq_class(lattice_symbol(lat, p)) * newform.at_num(p);
    ScanReport one = agree_on_overlap(lhs, scale(f, factor));
    rep.checked += one.checked;
    if (!one.pass) {
      rep.pass = false;
      rep.first_violation = p;
      return rep;
    }
  }
  return rep;
}

ScanReport v_intertwine_check(const HalfIntegralMeta& meta, const FracSeries& f,
                              long long t) {
  const int lat = meta.lattice();
  HalfIntegralMeta moved = meta;
  moved.level = meta.level * t;
  moved.r = meta.r_mod24() * t;
  moved.psi = meta.psi.times(RealCharacter::jacobi_bottom(t));
  FracSeries lhs = shimura_lift(moved, v_operator(f, t), 1).coeffs;
  FracSeries rhs = v_operator(shimura_lift(meta, f, t).coeffs, t);
  rhs = scale(rhs, mpq_class(lattice_symbol(lat, t)));
  return agree_on_overlap(lhs, rhs);
}

ScanReport agree_on_overlap(const FracSeries& a, const FracSeries& b) {
  ScanReport rep;
  if (a.denom() != b.denom())
    throw std::invalid_argument("agree_on_overlap: lattice mismatch");
  long long lo = std::min(a.val(), b.val());
  long long hi = std::min(a.max_num(), b.max_num());
  for (long long n = lo; n <= hi; ++n) {
    ++rep.checked;
    if (a.at_num(n) != b.at_num(n)) {
      rep.pass = false;
      rep.first_violation = n;
      return rep;
    }
  }
  return rep;
}

bool is_zero_series(const FracSeries& a) { return a.nonzero_count() == 0; }

ScanReport multiplicative_check(const FracSeries& g) {
  if (g.denom() != 1)
    throw std::invalid_argument("multiplicative_check: integral exponents required");
  ScanReport rep;
  mpq_class b1 = g.at_num(1);
  long long hi = g.max_num();
  for (long long m = 2; m * m <= hi; ++m) {
    for (long long n = m + 1; m * n <= hi; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++rep.checked;
      if (b1 * g.at_num(m * n) != g.at_num(m) * g.at_num(n)) {
        rep.pass = false;
        rep.first_violation = m * n;
        return rep;
      }
    }
  }
  return rep;
}

ScanReport hecke_recursion_check(const FracSeries& g, long long k,
                                 const RealCharacter& chi) {
  if (g.denom() != 1)
    throw std::invalid_argument("hecke_recursion_check: integral exponents required");
  ScanReport rep;
  mpq_class b1 = g.at_num(1);
  long long hi = g.max_num();
  for (long long p = 2; p * p <= hi; ++p) {
    bool prime = true;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) { prime = false; break; }
    if (!prime) continue;
    mpq_class pk = mpq_class(chi(p)) * zpow(p, k - 1);
    // powers p^(j-1), p^j, p^(j+1)
    for (long long lo = 1, mid = p, top = p * p; top <= hi;
         lo = mid, mid = top, top *= p) {
      ++rep.checked;
      if (b1 * g.at_num(top) != g.at_num(p) * g.at_num(mid) - pk * b1 * g.at_num(lo)) {
        rep.pass = false;
        rep.first_violation = top;
        return rep;
      }
      if (top > hi / p) break;  // keep top*p from overflowing
    }
  }
  return rep;
}

}  // namespace etalift
