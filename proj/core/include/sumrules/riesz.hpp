#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumrules/pi_value.hpp"
#include "sumrules/spectrum.hpp"

namespace sumrules {

// Riesz mean R_sigma(z) = sum_l M_l (z - Lambda_l)_+^sigma, with the sigma = 0
// convention that the term at Lambda_l = z counts as zero (strictly-below
// counting function). The spectrum must extend at least to z.
Rational riesz_mean(const Spectrum& s, unsigned sigma, const Rational& z);

// Sample grid for the bound checks: every level value up to z_max plus the
// midpoints between consecutive levels.
std::vector<Rational> default_z_grid(const Spectrum& s, const Rational& z_max);

struct RieszReport {
  std::string kind;
  unsigned sigma = 2;
  PiScaled constant_used;
  std::vector<std::pair<Rational, Rational>> samples;  // (z, R_sigma(z))
  std::vector<bool> verdicts;
  bool holds = false;
  // False when verdicts came from the floating path (odd dimension), where a
  // pinned relative tolerance of 1e-12 replaces exact comparison.
  bool exact = true;
  std::string notes;
};

// Exact check of 2 R_1(z) (z + d Lambda_1 / 4) >= (2 + d/2) R_2(z) at each
// sample. Scale covariant, so it runs directly in the spectrum's own unit.
// Lambda_1 defaults to the first positive level.
RieszReport r2_monotonicity_check(const Spectrum& s, int d,
                                  const std::optional<Rational>& lambda1,
                                  const std::vector<Rational>& z_samples);

// Semiclassical constant L_{2,d} = Gamma(3) / ((4 pi)^{d/2} Gamma(3 + d/2)),
// always an exact rational times an integer power of pi.
PiScaled weyl_constant(int d);

// Check of R_2(z) <= L_{2,d} |Omega| (z + d Lambda_1 / 4)^{2 + d/2} at each
// sample. |Omega| is passed as an exact rational times a pi power. For even d
// the comparison is exact (certified pi enclosures); for odd d both sides are
// evaluated with MPFR at configured_decimal_digits() and compared with
// relative tolerance 1e-12. Spectra in 4 pi^2 units are converted exactly via
// (4 pi^2)^{d/2} = (2 pi)^d.
RieszReport weyl_bound_check(const Spectrum& s, int d,
                             const std::optional<Rational>& lambda1,
                             const PiScaled& volume,
                             const std::vector<Rational>& z_samples);

}  // namespace sumrules
