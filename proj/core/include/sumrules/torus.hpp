#pragma once

#include <vector>

#include "sumrules/spectrum.hpp"

namespace sumrules {

// Flat torus R^2 / (Z w1 + Z w2) with w1 = (1, 0), w2 = (a, b), described by
// the rational moduli a and b^2. The standard fundamental domain has
// 0 <= a <= 1/2 and b > 0; the classical moduli region adds a^2 + b^2 >= 1.
struct TorusModuli {
  Rational a;
  Rational b_sq;
};

// Validates 0 <= a <= 1/2 and b_sq > 0.
TorusModuli make_torus(const Rational& a, const Rational& b_sq);

// Whether the point lies in the fundamental region (a^2 + b^2 >= 1).
bool in_tau(const TorusModuli& mod);

// Integer coordinates (n, m) of a dual lattice vector n w1* + m w2* where
// w1* = (1, -a/b) and w2* = (0, 1/b). The Cartesian components are
// (n, (m - n a)/b); both coordinates of interest here (squared norm, inner
// products against other dual vectors scaled suitably) are rational in a, b^2.
struct DualVector {
  long n = 0;
  long m = 0;
  friend bool operator==(const DualVector&, const DualVector&) = default;
};

// Squared Euclidean norm n^2 + (m - n a)^2 / b^2. The Laplace eigenvalue of
// the mode is 4 pi^2 times this, which is why torus spectra carry the
// four_pi_squared unit tag.
Rational norm_sq(const TorusModuli& mod, const DualVector& v);

// Euclidean inner product of two dual vectors; rational for rational moduli.
Rational dot(const TorusModuli& mod, const DualVector& u, const DualVector& v);

// Componentwise lattice sum; dual vectors form a group under it.
DualVector add(const DualVector& u, const DualVector& v);

struct TorusSpectrum {
  Spectrum spectrum;  // unit = four_pi_squared
  // shells[i] lists every dual vector of squared norm spectrum.levels[i].value,
  // in deterministic (n, then m) order; shells[i].size() == levels[i].mult.
  std::vector<std::vector<DualVector>> shells;
};

// Enumerates all dual vectors with norm_sq <= nu_max and groups them into
// levels. The bound on n is |n| <= floor_sqrt(nu_max) and, for fixed n, m runs
// over an exactly computed window, so the enumeration is provably complete.
TorusSpectrum torus_spectrum(const TorusModuli& mod, const Rational& nu_max);

// All dual vectors with norm_sq exactly nu; throws EmptyEigenspace when the
// candidate level is not realized.
std::vector<DualVector> eigenspace_vectors(const TorusModuli& mod, const Rational& nu);

struct ScanPoint {
  Rational a;
  Rational b_sq;
};

// Outcome of sum-rule inequality checks at one moduli point: which gap
// indices N <= n_max were testable with the given cutoff, and which violated
// the two-term bound. Violations are data, not errors.
struct ScanRecord {
  ScanPoint point;
  bool in_region = false;
  std::vector<Integer> gaps_checked;
  std::vector<Integer> violations;
  // True when nu_max covered fewer than n_max + 1 eigenvalues, so the check
  // list was clipped.
  bool truncated = false;
};

// Runs check_inequality at every gap index N <= n_max for each moduli point.
// Points are processed concurrently; results keep the input order.
std::vector<ScanRecord> scan_moduli(const std::vector<ScanPoint>& grid,
                                    const Rational& nu_max, const Integer& n_max);

}  // namespace sumrules
