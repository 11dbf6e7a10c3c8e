#pragma once

#include <string>

#include "etalift/hecke.hpp"
#include "etalift/series.hpp"

namespace etalift {

// {"denom": d, "valuation": v, "coeffs": [...]} with exact rationals as
// strings "p" or "p/q"; ModSeries adds "modulus".  When every nonzero entry
// of a fractional-lattice series sits at a multiple of denom above the
// valuation, the writer emits "stride": denom and lists only those entries;
// readers re-inflate.
std::string series_to_json(const FracSeries& a);
std::string series_to_json(const ModSeries& a);
FracSeries frac_series_from_json(const std::string& text);
ModSeries mod_series_from_json(const std::string& text);

// "1" (trivial), "principal:M", "kron:D" or "kron:D,M" (top-entry Kronecker
// character of discriminant D), "jacobi:T" (bottom-entry (.|T), T odd > 0).
RealCharacter character_from_string(const std::string& text);
std::string character_to_string(const RealCharacter& chi);

// {"lambda": l, "N": n, "psi": "<character>", "r": r}
HalfIntegralMeta meta_from_json(const std::string& text);
std::string meta_to_json(const HalfIntegralMeta& meta);

}  // namespace etalift
