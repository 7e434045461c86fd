#include "sumrules/riesz.hpp"

#include <mpfr.h>

#include <algorithm>

namespace sumrules {

namespace {

Rational resolve_lambda1(const Spectrum& s, const std::optional<Rational>& lambda1) {
  if (lambda1) {
    if (lambda1->sign() <= 0) throw Error("Lambda_1 must be positive");
    return *lambda1;
  }
  for (const Level& lvl : s.levels) {
    if (lvl.value.sign() > 0) return lvl.value;
  }
  throw Error("spectrum has no positive level to serve as Lambda_1");
}

}  // namespace

Rational riesz_mean(const Spectrum& s, unsigned sigma, const Rational& z) {
  if (s.levels.empty()) throw EmptyInput("spectrum has no levels");
  if (s.levels.back().value < z) {
    throw InsufficientLevels("spectrum ends at " + s.levels.back().value.str() +
                             ", below z=" + z.str() + "; extend the cutoff");
  }
  Rational acc = 0;
  for (const Level& lvl : s.levels) {
    if (!(lvl.value < z)) break;
    if (sigma == 0) {
      acc += Rational(lvl.mult);
    } else {
      acc += Rational(lvl.mult) * (z - lvl.value).pow(sigma);
    }
  }
  return acc;
}

std::vector<Rational> default_z_grid(const Spectrum& s, const Rational& z_max) {
  if (z_max.sign() < 0) throw Error("z_max must be nonnegative");
  std::vector<Rational> grid;
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    if (s.levels[i].value <= z_max) grid.push_back(s.levels[i].value);
    if (i + 1 < s.levels.size()) {
      const Rational mid = (s.levels[i].value + s.levels[i + 1].value) / 2;
      if (mid <= z_max) grid.push_back(mid);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

RieszReport r2_monotonicity_check(const Spectrum& s, int d,
                                  const std::optional<Rational>& lambda1,
                                  const std::vector<Rational>& z_samples) {
  if (d < 1) throw UnsupportedParameter("dimension must be positive");
  if (z_samples.empty()) throw EmptyInput("no z samples");
  const Rational l1 = resolve_lambda1(s, lambda1);
  const Rational shift = Rational(d) * l1 / 4;
  const Rational c(Integer(4 + d), Integer(2));

  RieszReport report;
  report.kind = "riesz-monotonicity";
  report.sigma = 2;
  report.constant_used = PiScaled{c, 0};
  report.holds = true;
  for (const Rational& z : z_samples) {
    const Rational r1 = riesz_mean(s, 1, z);
    const Rational r2 = riesz_mean(s, 2, z);
    const bool ok = 2 * r1 * (z + shift) >= c * r2;
    report.samples.emplace_back(z, r2);
    report.verdicts.push_back(ok);
    report.holds = report.holds && ok;
  }
  report.notes = "2 R1(z)(z + d Lambda1/4) >= (2+d/2) R2(z); d=" + std::to_string(d) +
                 " Lambda1=" + l1.str() + " unit=" + unit_to_string(s.unit);
  return report;
}

PiScaled weyl_constant(int d) {
  if (d < 1) throw UnsupportedParameter("dimension must be positive");
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(d));
  if (d % 2 == 0) {
    // Gamma(3 + d/2) is the integer (2 + d/2)!.
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 + d / 2));
    return PiScaled{Rational(Integer(2), two_pow * fact), -d / 2};
  }
  // Gamma(3 + d/2) = rising(1/2, (5+d)/2) sqrt(pi); the sqrt(pi) joins the
  // (4 pi)^{d/2} factor to give an integer power of pi.
  const Rational rp = rising_product(Rational(Integer(1), Integer(2)),
                                     static_cast<unsigned long>((5 + d) / 2));
  return PiScaled{Rational(2) / (Rational(two_pow) * rp), -(d + 1) / 2};
}

namespace {

// Minimal RAII shim over mpfr_t for the odd-dimension evaluation path.
class Mp {
 public:
  explicit Mp(mpfr_prec_t bits) { mpfr_init2(f_, bits); }
  ~Mp() { mpfr_clear(f_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return f_; }
  mpfr_srcptr get() const { return f_; }

 private:
  mpfr_t f_;
};

bool float_bound_holds(const Rational& r2, const Rational& coeff, int pi_power,
                       const Rational& base, const Rational& exponent,
                       unsigned long digits) {
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(digits * 3322 / 1000 + 64);
  Mp bound(bits), tmp(bits), lhs(bits);
  // bound = coeff * pi^pi_power * base^exponent
  mpfr_set_q(bound.get(), coeff.raw().get_mpq_t(), MPFR_RNDN);
  Mp pi(bits);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_pow_si(tmp.get(), pi.get(), pi_power, MPFR_RNDN);
  mpfr_mul(bound.get(), bound.get(), tmp.get(), MPFR_RNDN);
  Mp base_f(bits), exp_f(bits);
  mpfr_set_q(base_f.get(), base.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(exp_f.get(), exponent.raw().get_mpq_t(), MPFR_RNDN);
  mpfr_pow(tmp.get(), base_f.get(), exp_f.get(), MPFR_RNDN);
  mpfr_mul(bound.get(), bound.get(), tmp.get(), MPFR_RNDN);
  // Pinned relative tolerance for the non-exact path.
  mpfr_set_d(tmp.get(), 1e-12, MPFR_RNDN);
  mpfr_fma(bound.get(), bound.get(), tmp.get(), bound.get(), MPFR_RNDN);
  mpfr_set_q(lhs.get(), r2.raw().get_mpq_t(), MPFR_RNDN);
  return mpfr_cmp(lhs.get(), bound.get()) <= 0;
}

}  // namespace

RieszReport weyl_bound_check(const Spectrum& s, int d,
                             const std::optional<Rational>& lambda1,
                             const PiScaled& volume,
                             const std::vector<Rational>& z_samples) {
  if (d < 1) throw UnsupportedParameter("dimension must be positive");
  if (z_samples.empty()) throw EmptyInput("no z samples");
  if (volume.coeff.sign() <= 0) throw Error("volume must be positive");
  const Rational l1 = resolve_lambda1(s, lambda1);
  const Rational shift = Rational(d) * l1 / 4;

  const PiScaled constant = weyl_constant(d);
  PiScaled factor = constant * volume;
  if (s.unit == Unit::four_pi_squared) {
    // Absolute eigenvalues are 4 pi^2 times the stored ones; the bound scales
    // by (4 pi^2)^{d/2} = (2 pi)^d, which is exact for every d.
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(d));
    factor = factor * PiScaled{Rational(two_pow), d};
  }

  RieszReport report;
  report.kind = "weyl-bound";
  report.sigma = 2;
  report.constant_used = constant;
  report.holds = true;
  report.exact = (d % 2 == 0);
  const unsigned long digits = configured_decimal_digits();
  for (const Rational& z : z_samples) {
    const Rational r2 = riesz_mean(s, 2, z);
    const Rational base = z + shift;
    if (base.sign() < 0) throw Error("z + d Lambda1/4 is negative at z=" + z.str());
    bool ok;
    if (d % 2 == 0) {
      const PiScaled bound{factor.coeff * base.pow(static_cast<unsigned long>((4 + d) / 2)),
                           factor.power};
      ok = compare(r2, bound) <= 0;
    } else {
      ok = float_bound_holds(r2, factor.coeff, factor.power, base,
                             Rational(Integer(4 + d), Integer(2)), digits);
    }
    report.samples.emplace_back(z, r2);
    report.verdicts.push_back(ok);
    report.holds = report.holds && ok;
  }
  report.notes = "R2(z) <= L(2,d) |Omega| (z + d Lambda1/4)^{2+d/2}; d=" +
                 std::to_string(d) + " Lambda1=" + l1.str() + " volume=" + volume.str() +
                 " unit=" + unit_to_string(s.unit);
  if (d % 2 != 0) {
    report.notes += " float-digits=" + std::to_string(digits) + " rel-tol=1e-12";
  }
  return report;
}

}  // namespace sumrules
