#pragma once

#include <string>

#include "sumrules/rational.hpp"

namespace sumrules {

// Exact number of the form coeff * pi^power. Weyl-law constants and absolute
// torus eigenvalues (multiples of 4 pi^2) all live in this set, which is why
// the even-dimension bound checks can stay exact.
struct PiScaled {
  Rational coeff;
  int power = 0;

  // "p/q" when power is 0, otherwise "p/q*pi^k".
  std::string str() const;
  // Accepts "p/q", "pi", "p/q*pi", "p/q*pi^k" (k possibly negative).
  static PiScaled parse(const std::string& text);

  friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
    return PiScaled{a.coeff * b.coeff, a.power + b.power};
  }
};

struct RationalInterval {
  Rational lo, hi;
};

// Certified enclosure of pi^power from MPFR directed rounding at the given
// working precision.
RationalInterval pi_power_enclosure(int power, unsigned long bits);

// Exact three-way comparison of x against coeff * pi^power (-1, 0, +1).
// When power != 0 and both sides are nonzero, equality is impossible (pi is
// transcendental), so refining the enclosure always separates the two sides.
int compare(const Rational& x, const PiScaled& y);

// Significant decimal digits used by the non-exact evaluation path. Reads
// SPECTRAL_SUMRULES_PRECISION, defaulting to 50.
unsigned long configured_decimal_digits();

}  // namespace sumrules
