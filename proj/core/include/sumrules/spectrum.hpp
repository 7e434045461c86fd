#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sumrules/rational.hpp"

namespace sumrules {

// Eigenvalues are stored either in absolute units or divided by 4*pi^2 (the
// natural unit for flat torus spectra, where every eigenvalue is 4*pi^2 times
// a rational). Checks that are scale covariant run identically in both.
enum class Unit { absolute, four_pi_squared };

std::string unit_to_string(Unit u);
Unit unit_from_string(const std::string& s);

// One eigenvalue level: a value and how many times it repeats.
struct Level {
  Rational value;
  Integer mult;
};

// A discrete spectrum listed by distinct levels in increasing order.
// Multiplicities are arbitrary-precision: closed-form counting functions on
// 16-dimensional spaces overflow 64-bit integers well before l = 50.
struct Spectrum {
  Unit unit = Unit::absolute;
  std::vector<Level> levels;
  std::string meta;
  // Set when the data came from float ingestion; verdicts derived from such a
  // spectrum are exact about the ingested rationals but not about the source.
  bool approximate = false;
};

// Validates level ordering, positivity of multiplicities and nonnegativity of
// eigenvalues; throws EmptyInput, NegativeEigenvalue or ParseError.
Spectrum make_spectrum(Unit unit, std::vector<Level> levels, std::string meta,
                       bool approximate = false);

Integer total_count(const Spectrum& s);

// First n eigenvalues with multiplicity, in nondecreasing order.
std::vector<Rational> flatten(const Spectrum& s, std::size_t n);

// The n-th eigenvalue (1-indexed) of the flattened spectrum.
Rational eigenvalue_at(const Spectrum& s, const Integer& n);

// Power sums over the first n eigenvalues plus the two bracketing values,
// computed level-wise so that n may be astronomically large.
struct PrefixMoments {
  Integer count;       // n itself
  Rational sum;        // sum of the first n eigenvalues
  Rational sum_sq;     // sum of their squares
  Rational lambda_n;   // n-th eigenvalue
  Rational lambda_next;  // (n+1)-th eigenvalue
};

PrefixMoments prefix_moments(const Spectrum& s, const Integer& n);

// Compact rank one symmetric spaces. The eigenvalue of the Laplace-Beltrami
// operator on level l is l (l + h - 1) where h is the family parameter below;
// multiplicities and counting functions have closed forms in binomials.
enum class CrossFamily {
  sphere,
  real_projective,
  complex_projective,
  quaternionic_projective,
  cayley,
};

std::string family_to_string(CrossFamily f);
CrossFamily family_from_string(const std::string& s);

struct CrossSpace {
  CrossFamily family;
  int dim;  // real dimension
};

// Validates the family/dimension combination (complex projective space needs
// even dimension, quaternionic a multiple of 4, the Cayley plane is 16-dimensional).
CrossSpace make_cross(CrossFamily family, int dim);

struct CrossParameters {
  Rational a;  // always (d + 4) / d
  Rational h;  // family-dependent shift with Lambda_l = l (l + h - 1)
};

CrossParameters cross_parameters(const CrossSpace& space);
Rational cross_eigenvalue(const CrossSpace& space, unsigned long l);
Integer cross_multiplicity(const CrossSpace& space, unsigned long l);
// Number of eigenvalues on levels 0..l inclusive (counting multiplicity).
Integer cross_counting(const CrossSpace& space, unsigned long l);
Spectrum cross_spectrum(const CrossSpace& space, unsigned long l_max);

// Spectrum of the isotropic quantum harmonic oscillator whose sum rules close:
// levels l + 1/(a-1) with counting function C(l + 2/(a-1), l). Requires a > 1
// with 2/(a-1) a positive integer.
Spectrum oscillator_spectrum(const Rational& a, unsigned long l_max);

enum class IngestMode { exact, floating };

// Parses a spectrum from its JSON serialization.
//   exact mode: eigenvalues must be rational strings (or integer literals);
//     any duplicate or decreasing level is an error.
//   floating mode: numeric eigenvalues are accepted, values closer than tol
//     are merged into one level, and the result is flagged approximate.
Spectrum load_spectrum(const std::string& json_text, IngestMode mode,
                       const Rational& tol = Rational(0));

// Inverse of load_spectrum (exact mode); lives with the other JSON emitters.
std::string spectrum_to_json(const Spectrum& s);

}  // namespace sumrules
