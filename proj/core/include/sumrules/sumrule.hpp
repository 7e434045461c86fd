#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumrules/spectrum.hpp"
#include "sumrules/torus.hpp"

namespace sumrules {

// Quadratic polynomial c2 z^2 + c1 z + c0 with exact coefficients.
struct QuadPoly {
  Rational c2, c1, c0;

  Rational eval(const Rational& z) const { return (c2 * z + c1) * z + c0; }
  bool is_zero() const { return c2.is_zero() && c1.is_zero() && c0.is_zero(); }

  friend QuadPoly operator-(const QuadPoly& a, const QuadPoly& b) {
    return QuadPoly{a.c2 - b.c2, a.c1 - b.c1, a.c0 - b.c0};
  }
  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

// Result of one mechanical verification. The verdict is reproducible from the
// residual polynomial and the witnesses alone: identities hold iff the
// residual is the zero polynomial, interval inequalities hold iff every
// witness value is <= 0.
struct CheckReport {
  std::string kind;
  bool holds = false;
  QuadPoly residual;
  std::vector<std::pair<Rational, Rational>> witnesses;  // (z, residual(z))
  std::string notes;
};

// P_N(z) = sum_{j<=N} (z - lambda_j)(z - Lambda1 - (d+4)/d lambda_j), the
// two-term sum-rule polynomial of a closed d-manifold with ambient first
// positive eigenvalue Lambda1. Expanded coefficients:
//   c2 = N,
//   c1 = -2 (d+2)/d sum lambda - Lambda1 N,
//   c0 = (d+4)/d sum lambda^2 + Lambda1 sum lambda.
QuadPoly p_poly(const std::vector<Rational>& lambdas, int d, const Rational& lambda1);

// Same polynomial for arbitrary coefficients: sum (z - lambda_j)(z - h - a lambda_j).
// p_poly is the special case a = (d+4)/d, h = Lambda1.
QuadPoly generalized_p_poly(const std::vector<Rational>& lambdas, const Rational& a,
                            const Rational& h);

// Q_N(z) = N (z - lambda_N)(z - lambda_{N+1}).
QuadPoly q_poly(const Rational& lambda_n, const Rational& lambda_next, const Integer& n);

// All indices N <= n_max where the flattened spectrum has a gap
// (lambda_N < lambda_{N+1}); these are the partial sums of multiplicities.
std::vector<Integer> gap_indices(const Spectrum& s, const Integer& n_max);

// Exact test of P_N == Q_N at a gap index. The default ambient Lambda1 is the
// first positive level of s; pass it explicitly for ingested domain spectra.
// Power sums are computed level-wise, so N may exceed 64-bit range.
CheckReport check_identity(const Spectrum& s, int d, const Integer& n,
                           const std::optional<Rational>& ambient_lambda1 = {});

// Exact test of P_N <= Q_N on [lambda_N, lambda_{N+1}]. The residual P - Q is
// affine there (the z^2 terms cancel), so the two endpoint evaluations decide
// the whole interval; both are recorded as witnesses.
CheckReport check_inequality(const Spectrum& s, int d, const Integer& n,
                             const std::optional<Rational>& ambient_lambda1 = {});

// The closure condition N (lambda_{N+1} + lambda_N) = (a+1) sum_{j<=N} lambda_j
// for an h = 0 normalized sequence (lambdas[0] is lambda_1). For a spectrum
// with parameters (a, h) apply the shift lambda + h/(a-1) before calling.
bool check_gap_condition(const std::vector<Rational>& lambdas, const Rational& a,
                         std::size_t n);

struct RecurrenceResult {
  std::vector<Rational> counts;  // N_0 .. N_{K-1} for K+1 input levels
  bool all_integer = false;
};

// Reconstructs counting-function values from the level sequence alone via
//   N_{n+1} = (a L~_{n+1} - L~_n) / (a L~_{n+1} - L~_{n+2}) N_n,
// where L~ = level + h/(a-1). Requires the growth condition
// a L~_{n+1} > L~_{n+2} at every step (GrowthConditionViolated otherwise).
RecurrenceResult recurrence_counts(const std::vector<Rational>& levels, const Rational& a,
                                   const Rational& h, const Rational& n0);

// Torus sum rule with the averaged shift of a finite direction set
// {p_1..p_k}: for each of the first N modes the factor (z - lambda_j) pairs
// with (z - Sbar - D_j - lambda_j), where Sbar is the mean of nu(p_i) and
// D_j = (4/k) sum_i <p_i, p_j>^2 / nu(p_i). Tests whether the summed
// polynomial stays below Q_N on the gap interval at the given samples
// (default: both endpoints and the midpoint). N must be a gap index, since
// D_j is basis-independent only over complete shells.
CheckReport shifted_sumrule_check(const TorusModuli& mod,
                                  const std::vector<DualVector>& p_set, const Integer& n,
                                  std::vector<Rational> z_samples = {});

}  // namespace sumrules
