#pragma once

#include <string>
#include <vector>

#include "etalift/forms.hpp"
#include "etalift/hecke.hpp"

namespace etalift {

// One worked identification: an eta-quotient form of half-integral weight,
// the lift that lands it on an integral-weight newform, and the frozen
// leading coefficients of that newform.
struct LiftCase {
  std::string name;
  int example = 1;
  std::vector<EtaTerm> terms;
  HalfIntegralMeta meta;
  long long t = 1;
  // Leading coefficients q, q^2, ... of the lift target.
  std::vector<long long> newform_head;
  // Eta product expanding to the full target, when there is one.
  std::string target_eta;
  // The lift reproduces the target coefficients exactly (else only up to a
  // nonzero constant).
  bool lift_equals_target = false;
  std::vector<long long> eigen_primes;
  // Frozen involution signs of the target; eps3 is 0 on the coarse lattice.
  int eps2 = 0;
  int eps3 = 0;
};

const std::vector<LiftCase>& lift_catalog();

// Registry lookup by name; throws on an unknown name.
const LiftCase& catalog_case(const std::string& name);

// Dense expansion of the case's form on its lattice (denominator 24 or 8),
// `steps` compact coefficients wide.
FracSeries dense_form(const LiftCase& lc, size_t steps);

// Compact steps so that the lift of the form reaches coefficient T (reading
// a(t k^2) up to k = T); pass T * p for a T-term check after T_{p^2}.
size_t steps_for_lift(const LiftCase& lc, long long T);

// The target newform to `prec` coefficients: expanded from target_eta, or
// the frozen head (prec capped at its length) otherwise.
FracSeries target_newform(const LiftCase& lc, size_t prec);

}  // namespace etalift
