#include "sumrules/frames.hpp"

namespace sumrules {

namespace {

struct GramSums {
  Rational s_xx, s_yy, s_xy_scaled;
};

GramSums gram_sums(const TorusModuli& mod, const std::vector<DualVector>& shell) {
  GramSums g{0, 0, 0};
  for (const DualVector& v : shell) {
    const Rational n(v.n);
    const Rational t = Rational(v.m) - n * mod.a;  // b * (y component)
    g.s_xx += n * n;
    g.s_yy += t * t / mod.b_sq;
    g.s_xy_scaled += n * t;
  }
  return g;
}

}  // namespace

FrameReport frame_check(const TorusModuli& mod, const Rational& nu) {
  const std::vector<DualVector> shell = eigenspace_vectors(mod, nu);
  const GramSums g = gram_sums(mod, shell);

  FrameReport report;
  report.nu = nu;
  report.mult = Integer(static_cast<unsigned long>(shell.size()));
  report.s_xx = g.s_xx;
  report.s_yy = g.s_yy;
  report.s_xy_scaled = g.s_xy_scaled;
  report.tight = g.s_xy_scaled.is_zero() && g.s_xx == g.s_yy;
  report.predicted_constant = Rational(report.mult) * nu / 2;
  if (report.tight) report.frame_constant = g.s_xx;
  report.notes =
      "unnormalized exponential basis; constants in 4pi^2 units; divide by the "
      "torus area |T| = b for the L2-normalized frame constant";
  return report;
}

bool addition_formula_check(const TorusModuli& mod, const Rational& nu) {
  const std::vector<DualVector> shell = eigenspace_vectors(mod, nu);
  const GramSums g = gram_sums(mod, shell);
  // Constancy of sum_i |grad f_i|^2 across the torus is exactly the trace
  // identity for the shell.
  return g.s_xx + g.s_yy == Rational(Integer(static_cast<unsigned long>(shell.size()))) * nu;
}

namespace {

struct CommutatorLhs {
  QuadPoly poly{0, 0, 0};
  Integer modes = 0;  // N_J
};

// LHS of the commutator sum rule over the first `levels` shells.
CommutatorLhs commutator_lhs(const TorusModuli& mod, const TorusSpectrum& ts,
                             const DualVector& q, unsigned long levels,
                             const Rational& nu_q) {
  CommutatorLhs acc;
  for (unsigned long li = 0; li < levels; ++li) {
    const Rational lambda = ts.spectrum.levels[li].value;
    for (const DualVector& v : ts.shells[li]) {
      const Rational ip = dot(mod, v, q);
      const Rational b = nu_q * nu_q + 4 * ip * ip;
      // nu_q (z - lambda)^2 - (z - lambda) b
      acc.poly.c2 += nu_q;
      acc.poly.c1 -= 2 * nu_q * lambda + b;
      acc.poly.c0 += nu_q * lambda * lambda + lambda * b;
      acc.modes += 1;
    }
  }
  return acc;
}

}  // namespace

CheckReport verify_sum_rule_identity(const TorusModuli& mod, const DualVector& q,
                                     unsigned long levels, const Rational& nu_max) {
  if (levels == 0) throw Error("need at least one level in J");
  const TorusSpectrum ts = torus_spectrum(mod, nu_max);
  if (ts.spectrum.levels.size() < levels) {
    throw InsufficientCutoff("cutoff realizes only " +
                             std::to_string(ts.spectrum.levels.size()) + " levels, need " +
                             std::to_string(levels));
  }
  const Rational nu_q = norm_sq(mod, q);
  const Rational threshold = ts.spectrum.levels[levels - 1].value;
  const CommutatorLhs lhs = commutator_lhs(mod, ts, q, levels, nu_q);

  QuadPoly rhs{0, 0, 0};
  for (unsigned long li = 0; li < levels; ++li) {
    const Rational lambda_j = ts.spectrum.levels[li].value;
    for (const DualVector& v : ts.shells[li]) {
      for (int sign : {+1, -1}) {
        const DualVector t = add(v, DualVector{sign * q.n, sign * q.m});
        const Rational lambda_k = norm_sq(mod, t);
        if (lambda_k > nu_max) {
          throw InsufficientCutoff("p_j +- q reaches nu=" + lambda_k.str() +
                                   " beyond the cutoff " + nu_max.str());
        }
        if (lambda_k <= threshold) continue;  // partner still inside J
        const Rational w = (lambda_k - lambda_j) / 2;
        rhs.c2 += w;
        rhs.c1 -= w * (lambda_j + lambda_k);
        rhs.c0 += w * lambda_j * lambda_k;
      }
    }
  }

  CheckReport report;
  report.kind = "sumrule-exact";
  report.residual = lhs.poly - rhs;
  report.holds = report.residual.is_zero();
  report.notes = "q=(" + std::to_string(q.n) + "," + std::to_string(q.m) + ") nu(q)=" +
                 nu_q.str() + " L=" + std::to_string(levels) + " N_J=" +
                 lhs.modes.get_str() + " unit=4pi^2";
  if (nu_q.is_zero()) report.notes += " degenerate: constant multiplier commutes with H";
  return report;
}

CheckReport sign_bound_check(const TorusModuli& mod, const DualVector& q,
                             unsigned long levels, const Rational& nu_max,
                             std::vector<Rational> z_samples) {
  if (levels == 0) throw Error("need at least one level in J");
  const TorusSpectrum ts = torus_spectrum(mod, nu_max);
  if (ts.spectrum.levels.size() < levels + 1) {
    throw InsufficientCutoff("cutoff realizes only " +
                             std::to_string(ts.spectrum.levels.size()) +
                             " levels, need the gap after level " + std::to_string(levels));
  }
  const Rational nu_q = norm_sq(mod, q);
  const CommutatorLhs lhs = commutator_lhs(mod, ts, q, levels, nu_q);
  const Rational lambda_n = ts.spectrum.levels[levels - 1].value;
  const Rational lambda_next = ts.spectrum.levels[levels].value;

  const Rational scale = nu_q * Rational(lhs.modes);
  const QuadPoly bound{scale, -scale * (lambda_n + lambda_next),
                       scale * lambda_n * lambda_next};

  CheckReport report;
  report.kind = "sign-bound";
  report.residual = lhs.poly - bound;
  if (!report.residual.c2.is_zero()) {
    throw Error("sign bound residual is not affine; mode count mismatch");
  }
  if (z_samples.empty()) {
    z_samples = {lambda_n, (lambda_n + lambda_next) / 2, lambda_next};
  }
  report.holds = true;
  for (const Rational& z : z_samples) {
    if (z < lambda_n || z > lambda_next) {
      throw Error("sample z=" + z.str() + " is outside the gap interval [" +
                  lambda_n.str() + ", " + lambda_next.str() + "]");
    }
    const Rational value = report.residual.eval(z);
    report.holds = report.holds && value.sign() <= 0;
    report.witnesses.emplace_back(z, value);
  }
  report.notes = "q=(" + std::to_string(q.n) + "," + std::to_string(q.m) + ") nu(q)=" +
                 nu_q.str() + " L=" + std::to_string(levels) + " N_J=" +
                 lhs.modes.get_str() + " gap=[" + lambda_n.str() + "," +
                 lambda_next.str() + "] unit=4pi^2";
  return report;
}

}  // namespace sumrules
