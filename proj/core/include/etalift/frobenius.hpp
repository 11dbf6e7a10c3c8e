#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "etalift/forms.hpp"
#include "etalift/hecke.hpp"

namespace etalift {

// The weight 11/2 combination 6 eta^12/eta(5z) + 7 eta(5z)^5 eta^6 +
// 9 eta(5z)^11, supported on exponents (7 + 24 Z)/24.
std::vector<EtaTerm> tilde_f13_terms();
HalfIntegralMeta tilde_f13_meta();  // lambda 5, level 5, psi = (.|5), r = 7
inline constexpr long long kTildeF13Val24 = 7;

FracSeries tilde_f13_compact(size_t steps);
ModSeries tilde_f13_compact_mod(size_t steps);

// eta^(-5 ell) U_ell(Delta^e A5) mod ell with e = 5 (ell^2 - 1)/24, compact:
// entry k sits at exponent (val24 + 24 k)/24.
struct FlSeries {
  long long val24 = 0;
  ModSeries compact = ModSeries(2, 1, 0, {});
};
FlSeries build_fl(uint64_t ell, size_t steps);

// Coefficient k of F_ell against cphi5((ell (val24 + 24 k) + 5)/24) mod ell.
ScanReport flcong_crosscheck(uint64_t ell, size_t steps);

// First-kind lift (t = 7) of the combination, mod 13, coefficients to nterms.
ModSeries lift_tilde_f13_mod13(size_t nterms);

// Solves b(n) = 6 c(n) + 4 c(n/5) mod 13 for c, reading b from the lift;
// c(n/5) drops out unless 5 | n.
ModSeries recover_g6_mod13(size_t nterms);

// +1 / -1 when the recovered eigenform pins a congruence class at the prime
// Q (coefficient congruent to +-Q^4 mod 13); nullopt otherwise.
std::optional<int> classify_q(const ModSeries& g6, long long Q);

// (Q, eps) rows over primes 3 < Q < qmax, Q != 5, 13.
std::vector<std::pair<long long, int>> classify_all(const ModSeries& g6,
                                                    long long qmax);

struct CongruenceViolation {
  long long n = 0;
  long long argument = 0;
  uint64_t residue = 0;
};

// violations empty iff the scan passed; every counted n met the side
// conditions of its scan (Legendre class and integral argument).
struct CongruenceReport {
  uint64_t ell = 0;
  long long Q = 0;
  int eps = 0;
  long long n_checked = 0;
  std::vector<CongruenceViolation> violations;
  double seconds = 0;
  bool pass() const { return violations.empty(); }
};

// cphi5((13 Q^2 n + 5)/24) == 0 mod 13 over n <= n_max with (n|Q) = eps and
// 24 | 13 Q^2 n + 5.  `cphi` is a mod-13 table from cphi_series_mod.
CongruenceReport scan_congruence(const ModSeries& cphi, long long Q, int eps,
                                 long long n_max);

// cphi5(ell n + shift) == 0 mod ell with the classical shifts 4 (ell = 7)
// and 8 (ell = 11); shift_delta probes a wrong class instead.
CongruenceReport ramanujan_scan(const ModSeries& cphi, uint64_t ell,
                                long long n_max, long long shift_delta = 0);

// The single-progression specialization cphi5(13 97^3 n + 1014212) == 0 mod
// 13: progression and Legendre bookkeeping for small n, plus the table check
// at n = 0.
ScanReport congex_check(const ModSeries& cphi13);

// Printed leading coefficients of the two weight-10 eigenforms g6, g30 and
// the exact rational decomposition 537 b(n) = 2221 g6(n) - 3544837 g6(n/5) +
// 1001 g30(n) of the lift against them, n <= 5.
const std::vector<long long>& printed_g6();
const std::vector<long long>& printed_g30();
ScanReport printed_decomposition_check();

}  // namespace etalift
