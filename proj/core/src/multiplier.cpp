#include "etalift/multiplier.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "etalift/util.hpp"

namespace etalift {

std::complex<double> Root24::value() const {
  double th = 2.0 * M_PI * (double)e_ / 24.0;
  return {std::cos(th), std::sin(th)};
}

Root24 root24_from_root4(const Root4& r) { return Root24(6LL * r.e); }

namespace {

long long mod24(long long x) { return ((x % 24) + 24) % 24; }

}  // namespace

Root24 nu_eta(const GL2Int& g) {
  if (g.det() != 1) throw std::invalid_argument("nu_eta: determinant must be 1");
  const long long c = g.c, d = g.d;
  // nu(-g) relates by a factor i; recursing once lands in c > 0, or in the
  // translation case with d > 0.
  if (c < 0 || (c == 0 && d < 0)) return Root24(6) * nu_eta(-g);
  if (c == 0) return Root24(g.b);  // a = d = 1
  long long am = mod24(g.a), bm = mod24(g.b), cm = mod24(c), dm = mod24(d);
  long long k;
  int s;
  if (c & 1) {
    s = kronecker(d, c);
    k = (am + dm) * cm - bm * dm * (cm * cm - 1) - 3 * cm;
  } else {
    s = kronecker(c, d);
    k = (am + dm) * cm - bm * dm * (cm * cm - 1) + 3 * dm - 3 - 3 * cm * dm;
  }
  return Root24(k + (s == -1 ? 12 : 0));
}

Root24 nu_theta(const GL2Int& g) {
  if (g.det() != 1) throw std::invalid_argument("nu_theta: determinant must be 1");
  if (g.c % 4 != 0) throw std::invalid_argument("nu_theta: matrix not in the level 4 group");
  // 4 | c and det 1 force d odd.
  Root24 r = root24_from_root4(epsilon_d(g.d)).inverse();
  if (kronecker(g.c, g.d) == -1) r = r * Root24(12);
  return r;
}

QExpansion qexp_from_series(const FracSeries& f) {
  QExpansion q;
  q.c.resize(f.prec());
  for (size_t k = 0; k < f.prec(); ++k) q.c[k] = f[k].get_d();
  q.num0 = f.val();
  q.stride = 1;
  q.denom = f.denom();
  return q;
}

QExpansion qexp_from_compact(const FracSeries& compact, long long num0,
                             long long stride, int denom) {
  QExpansion q;
  q.c.resize(compact.prec());
  for (size_t k = 0; k < compact.prec(); ++k) q.c[k] = compact[k].get_d();
  q.num0 = num0;
  q.stride = stride;
  q.denom = denom;
  return q;
}

size_t qexp_terms_for(long long c_abs, long long stride, int denom) {
  double per_step = 2.0 * M_PI * (double)stride / ((double)denom * (double)c_abs);
  return (size_t)std::ceil(44.0 / per_step) + 64;
}

std::complex<double> eval_q_expansion(const QExpansion& f, std::complex<double> z) {
  using cd = std::complex<double>;
  if (z.imag() <= 0) throw std::invalid_argument("eval: point must be in the upper half plane");
  const double tau = 2.0 * M_PI;
  auto expo = [&](long long num) {
    return std::exp(cd(0, 1) * z * (tau * (double)num / (double)f.denom));
  };
  cd step = expo(f.stride);
  double rho = std::abs(step);
  if (rho >= 0.99995)
    throw std::runtime_error("eval: point too close to the real line for this lattice");
  cd sum = 0, comp = 0;
  cd w = expo(f.num0);
  const size_t n = f.c.size();
  double tail_coeff = 0;
  for (size_t k = 0; k < n; ++k) {
    // Periodic refresh keeps the incremental powers from drifting.
    if (k && (k & 1023) == 0) w = expo(f.num0 + f.stride * (long long)k);
    if (f.c[k] != 0) {
      cd term = f.c[k] * w;
      cd y = term - comp;
      cd t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    if (k + (n >> 3) + 1 >= n) tail_coeff = std::max(tail_coeff, std::fabs(f.c[k]));
    w *= step;
  }
  // Geometric tail with generous headroom for polynomially growing
  // coefficients; the terms-for helper sizes expansions so this passes.
  double head = (1.0 - rho) * (1.0 - rho);
  double tail = 8.0 * tail_coeff * std::abs(w) / (head * head);
  if (tail > 1e-10 * (1.0 + std::abs(sum)))
    throw std::runtime_error("eval: truncation tail not negligible, need more terms");
  return sum;
}

double transform_residual(const QExpansion& F, const GL2Int& g,
                          std::complex<double> mult, double weight) {
  using cd = std::complex<double>;
  if (g.det() != 1) throw std::invalid_argument("transform_residual: determinant must be 1");
  if (g.c == 0) throw std::invalid_argument("transform_residual: c = 0 is a trivial check");
  double sigma = g.c > 0 ? 1.0 : -1.0;
  cd z0(-(double)g.d / (double)g.c, sigma / (double)g.c);
  cd j(0, sigma);  // c z0 + d, exactly
  cd gz = ((double)g.a * z0 + (double)g.b) / j;
  cd pred = mult * std::pow(j, weight) * eval_q_expansion(F, z0);
  cd got = eval_q_expansion(F, gz);
  return std::abs(got - pred);
}

namespace {

long long ext_gcd_ll(long long a, long long b, long long& x, long long& y) {
  long long old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * xx; old_x = xx; xx = t;
    t = old_y - q * yy; old_y = yy; yy = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  x = old_x;
  y = old_y;
  return old_r;
}

}  // namespace

std::vector<GL2Int> sample_gamma0(long long N, size_t count, long long kmax,
                                  long long dmax, uint64_t seed) {
  if (N < 1 || kmax < 1 || dmax < 1)
    throw std::invalid_argument("sample_gamma0: bad parameters");
  std::mt19937_64 rng(seed);
  std::vector<GL2Int> out;
  out.reserve(count);
  while (out.size() < count) {
    long long k = 1 + (long long)(rng() % (uint64_t)kmax);
    long long c = N * k * ((rng() & 1) ? 1 : -1);
    long long d = (long long)(rng() % (uint64_t)(2 * dmax + 1)) - dmax;
    if (std::gcd(c, d) != 1) continue;
    long long x, y;
    ext_gcd_ll(d, -c, x, y);  // x d - y c = 1
    long long a = x, b = y;
    long long m = (long long)std::llround((double)a / (double)c);
    a -= m * c;
    b -= m * d;
    GL2Int g{a, b, c, d};
    if (g.det() != 1) continue;  // defensive; the construction guarantees it
    out.push_back(g);
  }
  return out;
}

SampleReport check_nu_v_t(long long r, long long t, size_t count, uint64_t seed) {
  if (t < 1) throw std::invalid_argument("check_nu_v_t: t must be positive");
  SampleReport rep;
  auto gs = sample_gamma0(t, count, 20, 1000, seed);
  for (const auto& g : gs) {
    GL2Int gp{g.a, t * g.b, g.c / t, g.d};
    Root24 lhs = nu_eta(gp).pow(r);
    Root24 rhs = nu_eta(g).pow(r * t);
    if (kronecker(g.d, t) == -1) rhs = rhs * Root24(12);
    ++rep.checked;
    if (!(lhs == rhs)) ++rep.failures;
  }
  return rep;
}

double check_eta_to_theta(const EtaQuotient& eq, const RealCharacter& psi,
                          long long level, size_t samples, uint64_t seed) {
  long long w2 = eq.weight2();
  if (w2 < 1 || (w2 & 1) == 0)
    throw std::invalid_argument("check_eta_to_theta: odd half-integral weight required");
  long long lambda = (w2 - 1) / 2;
  long long v24 = eq.val24();
  long long r = mod24(v24);
  if ((r & 1) == 0)
    throw std::invalid_argument("check_eta_to_theta: even exponent class");
  long long epow = lambda + (r - 1) / 2;
  long long glevel, stride, num0;
  RealCharacter chi = psi;
  if (std::gcd(r, 6LL) == 1) {
    glevel = 576 * level;
    stride = 24;
    num0 = v24;
    if (epow & 1) chi = chi.times(RealCharacter::kron_top(-4));
    chi = chi.times(RealCharacter::kron_top(12));
  } else if (r % 6 == 3) {
    glevel = 64 * level;
    stride = 8;
    if (v24 % 3 != 0)
      throw std::invalid_argument("check_eta_to_theta: valuation off the coarse lattice");
    num0 = v24 / 3;
    if (epow & 1) chi = chi.times(RealCharacter::kron_top(-4));
  } else {
    throw std::invalid_argument("check_eta_to_theta: exponent class divisible by 3 twice");
  }
  const long long kmax = 2;
  size_t steps = qexp_terms_for(glevel * kmax, stride, 1);
  QExpansion F = qexp_from_compact(eta_compact(eq, steps), num0, stride, 1);
  auto gs = sample_gamma0(glevel, samples, kmax, 40, seed);
  double worst = 0;
  for (const auto& g : gs) {
    std::complex<double> mult =
        (double)chi(g.d) * nu_theta(g).pow(2 * lambda + 1).value();
    worst = std::max(worst, transform_residual(F, g, mult, (double)lambda + 0.5));
  }
  return worst;
}

double check_eta_power_numeric(int power, size_t samples, uint64_t seed) {
  if (power < 1)
    throw std::invalid_argument("check_eta_power_numeric: power must be >= 1");
  const long long kmax = 30;
  size_t steps = qexp_terms_for(kmax, 24, 24);
  EtaQuotient eq{{{1, power}}};
  QExpansion F = qexp_from_compact(eta_compact(eq, steps), power, 24, 24);
  auto gs = sample_gamma0(1, samples, kmax, 1000, seed);
  double worst = 0;
  for (auto g : gs) {
    if (g.c < 0) g = -g;
    std::complex<double> mult = nu_eta(g).pow(power).value();
    worst = std::max(worst, transform_residual(F, g, mult, power / 2.0));
  }
  return worst;
}

double check_theta_numeric(size_t samples, uint64_t seed) {
  const long long kmax = 8;
  size_t steps = qexp_terms_for(4 * kmax, 1, 1);
  QExpansion F = qexp_from_series(theta_series(steps));
  auto gs = sample_gamma0(4, samples, kmax, 1000, seed);
  double worst = 0;
  for (auto g : gs) {
    if (g.c < 0) g = -g;
    worst = std::max(worst, transform_residual(F, g, nu_theta(g).value(), 0.5));
  }
  return worst;
}

}  // namespace etalift
