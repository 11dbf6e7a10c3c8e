#include "etalift/catalog.hpp"

#include <stdexcept>

#include "etalift/series.hpp"

namespace etalift {

namespace {

std::vector<EtaTerm> one(const char* text) {
  return {{mpq_class(1), EtaQuotient::parse(text)}};
}

}  // namespace

const std::vector<LiftCase>& lift_catalog() {
  static const std::vector<LiftCase> cases = [] {
    std::vector<LiftCase> v;

    // Weight 5/2 on the full group; the image lies in weight 4 level 6.
    v.push_back({"eta5",
                 1,
                 one("1^5"),
                 {2, 1, 5, RealCharacter::trivial()},
                 5,
                 {1, -2, -3, 4, 6, 6},
                 "1^2 2^2 3^2 6^2",
                 true,
                 {5, 7},
                 1,
                 1});

    // Weight 3/2 level 7 pair mapping onto the weight 2 newform of level 14.
    v.push_back({"lvl7-a",
                 2,
                 one("7 1^2"),
                 {1, 7, 9, RealCharacter::jacobi_bottom(7)},
                 3,
                 {1, -1, -2, 1, 0, 2, 1},
                 "1 2 7 14",
                 true,
                 {3, 5, 7},
                 1,
                 0});
    v.push_back({"lvl7-b",
                 2,
                 one("7^2 1"),
                 {1, 7, 15, RealCharacter::principal(7)},
                 5,
                 {1, -1, -2, 1, 0, 2, 1},
                 "1 2 7 14",
                 false,
                 {3, 5, 7},
                 1,
                 0});

    // Weight 3/2 level 13 pair; the target is the weight 2 newform of
    // level 26 with both Fricke-type signs -1, known here by its head.
    v.push_back({"lvl13-a",
                 3,
                 {{mpq_class(1), EtaQuotient::parse("13 1^2")},
                  {mpq_class(13, 7), EtaQuotient::parse("13^3")}},
                 {1, 13, 15, RealCharacter::jacobi_bottom(13)},
                 5,
                 {1, 1, -3, 1, -1, -3, 1},
                 "",
                 false,
                 {3, 5},
                 -1,
                 0});
    v.push_back({"lvl13-b",
                 3,
                 {{mpq_class(7), EtaQuotient::parse("13^2 1")},
                  {mpq_class(1), EtaQuotient::parse("1^3")}},
                 {1, 13, 3, RealCharacter::principal(13)},
                 1,
                 {1, 1, -3, 1, -1, -3, 1},
                 "",
                 false,
                 {3, 5},
                 -1,
                 0});

    // Weight 3/2 level 11 pair landing on the weight 2 newform of level 66.
    v.push_back({"lvl11-a",
                 4,
                 one("11 1^2"),
                 {1, 11, 13, RealCharacter::jacobi_bottom(11)},
                 13,
                 {1, 1, 1, 1, -4, 1, -2},
                 "",
                 false,
                 {5, 7},
                 -1,
                 -1});
    v.push_back({"lvl11-b",
                 4,
                 one("11^2 1"),
                 {1, 11, 23, RealCharacter::principal(11)},
                 23,
                 {1, 1, 1, 1, -4, 1, -2},
                 "",
                 false,
                 {5, 7},
                 -1,
                 -1});

    return v;
  }();
  return cases;
}

FracSeries dense_form(const LiftCase& lc, size_t steps) {
  return spread_compact(eta_sum_compact(lc.terms, steps),
                        eta_sum_val24(lc.terms), (int)lc.meta.lattice());
}

size_t steps_for_lift(const LiftCase& lc, long long T) {
  long long lat = lc.meta.lattice();
  long long val = eta_sum_val24(lc.terms) * lat / 24;
  long long need = lc.t * T * T;
  if (need <= val) return 1;
  return (size_t)((need - val + lat - 1) / lat) + 1;
}

FracSeries target_newform(const LiftCase& lc, size_t prec) {
  if (!lc.target_eta.empty()) {
    EtaQuotient eq = EtaQuotient::parse(lc.target_eta);
    if (eq.val24() % 24 != 0)
      throw std::logic_error("target eta quotient is not integral");
    return spread_compact(eta_compact(eq, prec), eq.val24(), 1);
  }
  size_t n = std::min(prec, lc.newform_head.size());
  std::vector<mpq_class> c(n);
  for (size_t i = 0; i < n; ++i) c[i] = (long)lc.newform_head[i];
  return FracSeries(1, 1, c);
}

const LiftCase& catalog_case(const std::string& name) {
  for (const auto& lc : lift_catalog())
    if (lc.name == name) return lc;
  throw std::logic_error("unknown catalog case " + name);
}

}  // namespace etalift
