#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumrules/sumrule.hpp"
#include "sumrules/torus.hpp"

namespace sumrules {

// Frame analysis of one torus eigenspace. With the unnormalized exponential
// basis indexed by the shell vectors p_i, the Gram matrix of the gradients is
// 4 pi^2 S where S = sum_i p_i p_i^T. The shell is a tight frame iff S is a
// multiple of the identity, i.e. S_xy = 0 and S_xx = S_yy. All entries here
// are reported in 4 pi^2 units; S_xy itself picks up a factor 1/b, so the
// rational quantity stored is b * S_xy, which vanishes exactly when S_xy does.
struct FrameReport {
  Rational nu;
  Integer mult;
  bool tight = false;
  Rational s_xx, s_yy, s_xy_scaled;
  // S_xx (= S_yy) when tight: the frame constant of the unnormalized basis in
  // 4 pi^2 units. Dividing by the torus area |T| = b converts to the
  // L2-normalized basis.
  std::optional<Rational> frame_constant;
  // mult * nu / 2, what a tight frame on a 2-manifold must produce.
  Rational predicted_constant;
  std::string notes;
};

FrameReport frame_check(const TorusModuli& mod, const Rational& nu);

// Trace identity behind the pointwise addition formula: the squared gradient
// sum over a shell is constant iff tr S = sum_i nu(p_i), which holds for
// every shell. Returns the exact comparison S_xx + S_yy == mult * nu.
bool addition_formula_check(const TorusModuli& mod, const Rational& nu);

// Exact commutator sum rule on the torus for the multiplier G = e^{2 pi i <q, x>}.
// With J the modes of the first L levels and lambda = nu values in 4 pi^2 units:
//   LHS = nu(q) sum_{j in J} (z - lambda_j)^2
//         - sum_{j in J} (z - lambda_j) (nu(q)^2 + 4 <p_j, q>^2)
//   RHS = 1/2 sum_{j in J, k not in J} (z-lambda_j)(z-lambda_k)(lambda_k-lambda_j)
//         ([p_k = p_j + q] + [p_k = p_j - q])
// and the two sides agree as polynomials in z. The report's residual is
// LHS - RHS; holds iff it is identically zero. nu_max must cover every
// p_j +- q (InsufficientCutoff otherwise). q = (0, 0) degenerates to 0 == 0.
CheckReport verify_sum_rule_identity(const TorusModuli& mod, const DualVector& q,
                                     unsigned long levels, const Rational& nu_max);

// One-sided bound derived from the same commutator identity:
//   LHS(z) <= nu(q) N_J (z - lambda_{N_J})(z - lambda_{N_J + 1})
// on the closing gap interval. Checks the affine residual at the given
// samples (default: endpoints and midpoint); samples outside the interval are
// rejected.
CheckReport sign_bound_check(const TorusModuli& mod, const DualVector& q,
                             unsigned long levels, const Rational& nu_max,
                             std::vector<Rational> z_samples = {});

}  // namespace sumrules
