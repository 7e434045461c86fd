#include "sumrules/sumrule.hpp"

#include <utility>

namespace sumrules {

namespace {

struct PowerSums {
  Rational count, sum, sum_sq;
};

QuadPoly p_from_sums(const PowerSums& ps, const Rational& a, const Rational& h) {
  QuadPoly p;
  p.c2 = ps.count;
  p.c1 = -(Rational(1) + a) * ps.sum - h * ps.count;
  p.c0 = a * ps.sum_sq + h * ps.sum;
  return p;
}

PowerSums sums_of(const std::vector<Rational>& lambdas) {
  PowerSums ps{Rational(static_cast<long>(lambdas.size())), 0, 0};
  for (const Rational& l : lambdas) {
    ps.sum += l;
    ps.sum_sq += l * l;
  }
  return ps;
}

void require_sorted_nonnegative(const std::vector<Rational>& lambdas) {
  if (lambdas.empty()) throw EmptyInput("eigenvalue list is empty");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i].sign() < 0) {
      throw NegativeEigenvalue("eigenvalue " + lambdas[i].str() + " is negative");
    }
    if (i > 0 && lambdas[i] < lambdas[i - 1]) {
      throw Error("eigenvalues must be nondecreasing");
    }
  }
}

Rational ambient_or_first_positive(const Spectrum& s,
                                   const std::optional<Rational>& ambient) {
  if (ambient) {
    if (ambient->sign() <= 0) throw Error("ambient Lambda_1 must be positive");
    return *ambient;
  }
  for (const Level& lvl : s.levels) {
    if (lvl.value.sign() > 0) return lvl.value;
  }
  throw Error("spectrum has no positive level to serve as Lambda_1");
}

// Moments of the first n eigenvalues, refusing indices that do not sit at a
// spectral gap.
PrefixMoments gap_moments(const Spectrum& s, const Integer& n) {
  PrefixMoments m = prefix_moments(s, n);
  if (!(m.lambda_n < m.lambda_next)) {
    throw NotAGapIndex("lambda_" + n.get_str() + " == lambda_" + Integer(n + 1).get_str() +
                       " == " + m.lambda_n.str() + "; N is inside an eigenspace");
  }
  return m;
}

std::string unit_note(const Spectrum& s) {
  std::string note = "unit=" + unit_to_string(s.unit);
  if (s.approximate) note += " approximate-input";
  return note;
}

}  // namespace

QuadPoly generalized_p_poly(const std::vector<Rational>& lambdas, const Rational& a,
                            const Rational& h) {
  require_sorted_nonnegative(lambdas);
  return p_from_sums(sums_of(lambdas), a, h);
}

QuadPoly p_poly(const std::vector<Rational>& lambdas, int d, const Rational& lambda1) {
  if (d < 1) throw UnsupportedParameter("dimension must be positive");
  if (lambda1.sign() <= 0) throw Error("Lambda_1 must be positive");
  const Rational a(Integer(d + 4), Integer(d));
  return generalized_p_poly(lambdas, a, lambda1);
}

QuadPoly q_poly(const Rational& lambda_n, const Rational& lambda_next, const Integer& n) {
  if (sgn(n) <= 0) throw Error("Q_N needs N >= 1");
  const Rational nn(n);
  QuadPoly q;
  q.c2 = nn;
  q.c1 = -nn * (lambda_n + lambda_next);
  q.c0 = nn * lambda_n * lambda_next;
  return q;
}

std::vector<Integer> gap_indices(const Spectrum& s, const Integer& n_max) {
  if (sgn(n_max) <= 0) throw Error("gap_indices needs n_max >= 1");
  if (total_count(s) < n_max + 1) {
    throw InsufficientLevels("spectrum covers " + total_count(s).get_str() +
                             " eigenvalues; need " + Integer(n_max + 1).get_str());
  }
  std::vector<Integer> gaps;
  Integer cum = 0;
  for (const Level& lvl : s.levels) {
    cum += lvl.mult;
    if (cum > n_max) break;
    gaps.push_back(cum);
  }
  return gaps;
}

namespace {

CheckReport identity_or_inequality(const Spectrum& s, int d, const Integer& n,
                                   const std::optional<Rational>& ambient, bool identity) {
  if (d < 1) throw UnsupportedParameter("dimension must be positive");
  const PrefixMoments m = gap_moments(s, n);
  const Rational lambda1 = ambient_or_first_positive(s, ambient);
  const Rational a(Integer(d + 4), Integer(d));
  const QuadPoly p = p_from_sums({Rational(m.count), m.sum, m.sum_sq}, a, lambda1);
  const QuadPoly q = q_poly(m.lambda_n, m.lambda_next, n);

  CheckReport report;
  report.residual = p - q;
  report.witnesses = {{m.lambda_n, report.residual.eval(m.lambda_n)},
                      {m.lambda_next, report.residual.eval(m.lambda_next)}};
  report.notes = "N=" + n.get_str() + " d=" + std::to_string(d) +
                 " Lambda1=" + lambda1.str() + " " + unit_note(s);
  if (identity) {
    report.kind = "identity";
    report.holds = report.residual.is_zero();
  } else {
    report.kind = "inequality";
    if (!report.residual.c2.is_zero()) {
      throw Error("residual is not affine; spectrum moments are inconsistent");
    }
    // Affine on the gap interval, so the endpoint signs decide everywhere.
    report.holds = report.witnesses[0].second.sign() <= 0 &&
                   report.witnesses[1].second.sign() <= 0;
  }
  return report;
}

}  // namespace

CheckReport check_identity(const Spectrum& s, int d, const Integer& n,
                           const std::optional<Rational>& ambient_lambda1) {
  return identity_or_inequality(s, d, n, ambient_lambda1, true);
}

CheckReport check_inequality(const Spectrum& s, int d, const Integer& n,
                             const std::optional<Rational>& ambient_lambda1) {
  return identity_or_inequality(s, d, n, ambient_lambda1, false);
}

bool check_gap_condition(const std::vector<Rational>& lambdas, const Rational& a,
                         std::size_t n) {
  if (n < 1) throw Error("gap condition needs N >= 1");
  if (lambdas.size() < n + 1) {
    throw InsufficientLevels("need lambda_1..lambda_" + std::to_string(n + 1));
  }
  Rational sum = 0;
  for (std::size_t j = 0; j < n; ++j) sum += lambdas[j];
  const Rational lhs = Rational(static_cast<long>(n)) * (lambdas[n] + lambdas[n - 1]);
  return lhs == (a + 1) * sum;
}

RecurrenceResult recurrence_counts(const std::vector<Rational>& levels, const Rational& a,
                                   const Rational& h, const Rational& n0) {
  if (levels.size() < 2) throw InsufficientLevels("recurrence needs at least two levels");
  if (a == Rational(1)) throw UnsupportedParameter("recurrence shift needs a != 1");
  const Rational shift = h / (a - 1);
  std::vector<Rational> shifted;
  shifted.reserve(levels.size());
  for (const Rational& l : levels) shifted.push_back(l + shift);

  RecurrenceResult result;
  result.counts.push_back(n0);
  result.all_integer = n0.is_integer();
  for (std::size_t n = 0; n + 2 < shifted.size(); ++n) {
    const Rational denom = a * shifted[n + 1] - shifted[n + 2];
    if (denom.sign() <= 0) {
      throw GrowthConditionViolated(
          static_cast<int>(n),
          "growth condition fails at step " + std::to_string(n) + ": a L_" +
              std::to_string(n + 1) + " - L_" + std::to_string(n + 2) + " = " + denom.str());
    }
    const Rational numer = a * shifted[n + 1] - shifted[n];
    const Rational next = numer / denom * result.counts.back();
    result.all_integer = result.all_integer && next.is_integer();
    result.counts.push_back(next);
  }
  return result;
}

CheckReport shifted_sumrule_check(const TorusModuli& mod,
                                  const std::vector<DualVector>& p_set, const Integer& n,
                                  std::vector<Rational> z_samples) {
  if (p_set.empty()) throw EmptyInput("direction set is empty");
  for (const DualVector& p : p_set) {
    if (p.n == 0 && p.m == 0) throw ZeroVector("direction set contains (0, 0)");
  }
  if (sgn(n) <= 0) throw Error("shifted sum rule needs N >= 1");

  // Grow the cutoff until the spectrum covers N + 1 modes.
  Rational nu_max = 1;
  TorusSpectrum ts = torus_spectrum(mod, nu_max);
  while (total_count(ts.spectrum) < n + 1) {
    nu_max *= 2;
    ts = torus_spectrum(mod, nu_max);
  }

  // N must land exactly on a shell boundary.
  std::size_t level_count = 0;
  Integer cum = 0;
  for (const Level& lvl : ts.spectrum.levels) {
    cum += lvl.mult;
    ++level_count;
    if (cum >= n) break;
  }
  if (cum != n) {
    throw NotAGapIndex("N=" + n.get_str() + " splits an eigenspace; shifted sums are "
                       "defined over complete shells only");
  }

  const Rational k(static_cast<long>(p_set.size()));
  Rational sbar = 0;
  std::vector<Rational> p_norms;
  p_norms.reserve(p_set.size());
  for (const DualVector& p : p_set) {
    p_norms.push_back(norm_sq(mod, p));
    sbar += p_norms.back();
  }
  sbar /= k;

  QuadPoly lhs{0, 0, 0};
  for (std::size_t li = 0; li < level_count; ++li) {
    const Rational lambda = ts.spectrum.levels[li].value;
    for (const DualVector& v : ts.shells[li]) {
      Rational dsum = 0;
      for (std::size_t i = 0; i < p_set.size(); ++i) {
        const Rational ip = dot(mod, p_set[i], v);
        dsum += ip * ip / p_norms[i];
      }
      const Rational dj = Rational(4) / k * dsum;
      // (z - lambda)(z - lambda - sbar - dj)
      lhs.c2 += 1;
      lhs.c1 -= lambda + lambda + sbar + dj;
      lhs.c0 += lambda * (lambda + sbar + dj);
    }
  }

  const Rational lambda_n = ts.spectrum.levels[level_count - 1].value;
  const Rational lambda_next = ts.spectrum.levels[level_count].value;
  const QuadPoly q = q_poly(lambda_n, lambda_next, n);

  CheckReport report;
  report.kind = "shifted-sumrule";
  report.residual = lhs - q;
  if (!report.residual.c2.is_zero()) {
    throw Error("shifted residual is not affine; mode count mismatch");
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
  report.notes = "N=" + n.get_str() + " k=" + k.str() + " Sbar=" + sbar.str() +
                 " unit=4pi^2";
  return report;
}

}  // namespace sumrules
