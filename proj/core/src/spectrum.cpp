#include "sumrules/spectrum.hpp"

#include <utility>

namespace sumrules {

std::string unit_to_string(Unit u) {
  return u == Unit::absolute ? "absolute" : "4pi^2";
}

Unit unit_from_string(const std::string& s) {
  if (s == "absolute") return Unit::absolute;
  if (s == "4pi^2" || s == "4pi2") return Unit::four_pi_squared;
  throw ParseError("unknown unit tag '" + s + "'");
}

Spectrum make_spectrum(Unit unit, std::vector<Level> levels, std::string meta,
                       bool approximate) {
  if (levels.empty()) throw EmptyInput("spectrum has no levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].value.sign() < 0) {
      throw NegativeEigenvalue("eigenvalue " + levels[i].value.str() + " is negative");
    }
    if (sgn(levels[i].mult) <= 0) {
      throw Error("multiplicity of level " + levels[i].value.str() + " must be positive");
    }
    if (i > 0 && !(levels[i - 1].value < levels[i].value)) {
      throw Error("levels must be strictly increasing (offenders: " +
                  levels[i - 1].value.str() + ", " + levels[i].value.str() + ")");
    }
  }
  Spectrum s;
  s.unit = unit;
  s.levels = std::move(levels);
  s.meta = std::move(meta);
  s.approximate = approximate;
  return s;
}

Integer total_count(const Spectrum& s) {
  Integer n = 0;
  for (const Level& lvl : s.levels) n += lvl.mult;
  return n;
}

std::vector<Rational> flatten(const Spectrum& s, std::size_t n) {
  if (n == 0) throw EmptyInput("flatten needs a positive count");
  if (total_count(s) < static_cast<unsigned long>(n)) {
    throw InsufficientLevels("spectrum covers fewer than " + std::to_string(n) +
                             " eigenvalues");
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (const Level& lvl : s.levels) {
    for (Integer i = 0; i < lvl.mult && out.size() < n; ++i) out.push_back(lvl.value);
    if (out.size() == n) break;
  }
  return out;
}

Rational eigenvalue_at(const Spectrum& s, const Integer& n) {
  if (sgn(n) <= 0) throw Error("eigenvalue index must be positive");
  Integer cum = 0;
  for (const Level& lvl : s.levels) {
    cum += lvl.mult;
    if (cum >= n) return lvl.value;
  }
  throw InsufficientLevels("spectrum covers only " + cum.get_str() +
                           " eigenvalues, index " + n.get_str() + " requested");
}

PrefixMoments prefix_moments(const Spectrum& s, const Integer& n) {
  if (sgn(n) <= 0) throw Error("prefix length must be positive");
  PrefixMoments m;
  m.count = n;
  m.sum = 0;
  m.sum_sq = 0;
  Integer cum = 0;
  bool have_n = false, have_next = false;
  for (const Level& lvl : s.levels) {
    if (cum < n) {
      Integer take = lvl.mult;
      if (cum + take > n) take = n - cum;
      Rational t(take);
      m.sum += t * lvl.value;
      m.sum_sq += t * lvl.value * lvl.value;
    }
    cum += lvl.mult;
    if (!have_n && cum >= n) {
      m.lambda_n = lvl.value;
      have_n = true;
    }
    if (!have_next && cum >= n + 1) {
      m.lambda_next = lvl.value;
      have_next = true;
      break;
    }
  }
  if (!have_next) {
    throw InsufficientLevels("need " + Integer(n + 1).get_str() +
                             " eigenvalues, spectrum covers " + cum.get_str());
  }
  return m;
}

std::string family_to_string(CrossFamily f) {
  switch (f) {
    case CrossFamily::sphere: return "sphere";
    case CrossFamily::real_projective: return "real_projective";
    case CrossFamily::complex_projective: return "complex_projective";
    case CrossFamily::quaternionic_projective: return "quaternionic_projective";
    case CrossFamily::cayley: return "cayley";
  }
  throw Error("corrupt CrossFamily value");
}

CrossFamily family_from_string(const std::string& s) {
  std::string key = s;
  for (char& c : key) {
    if (c == '-') c = '_';
  }
  if (key == "sphere") return CrossFamily::sphere;
  if (key == "real_projective") return CrossFamily::real_projective;
  if (key == "complex_projective") return CrossFamily::complex_projective;
  if (key == "quaternionic_projective") return CrossFamily::quaternionic_projective;
  if (key == "cayley") return CrossFamily::cayley;
  throw ParseError("unknown family '" + s + "'");
}

CrossSpace make_cross(CrossFamily family, int dim) {
  switch (family) {
    case CrossFamily::sphere:
      if (dim < 1) throw UnsupportedParameter("sphere needs dimension >= 1");
      break;
    case CrossFamily::real_projective:
      if (dim < 2) throw UnsupportedParameter("real projective space needs dimension >= 2");
      break;
    case CrossFamily::complex_projective:
      if (dim < 2 || dim % 2 != 0) {
        throw UnsupportedParameter("complex projective space needs even dimension >= 2");
      }
      break;
    case CrossFamily::quaternionic_projective:
      if (dim < 4 || dim % 4 != 0) {
        throw UnsupportedParameter(
            "quaternionic projective space needs dimension divisible by 4");
      }
      break;
    case CrossFamily::cayley:
      if (dim != 16) throw UnsupportedParameter("the Cayley plane is 16-dimensional");
      break;
  }
  return CrossSpace{family, dim};
}

CrossParameters cross_parameters(const CrossSpace& space) {
  const long d = space.dim;
  CrossParameters p;
  p.a = Rational(Integer(d + 4), Integer(d));
  switch (space.family) {
    case CrossFamily::sphere: p.h = d; break;
    case CrossFamily::real_projective: p.h = Rational(Integer(d + 1), Integer(2)); break;
    case CrossFamily::complex_projective: p.h = Rational(Integer(d + 2), Integer(2)); break;
    case CrossFamily::quaternionic_projective: p.h = Rational(Integer(d + 4), Integer(2)); break;
    case CrossFamily::cayley: p.h = Rational(Integer(d + 8), Integer(2)); break;
  }
  return p;
}

Rational cross_eigenvalue(const CrossSpace& space, unsigned long l) {
  const Rational h = cross_parameters(space).h;
  const Rational lr(static_cast<long>(l));
  return lr * (lr + h - 1);
}

namespace {

// C(n, k) with n given as a signed expression that is nonnegative by the
// callers' dimension constraints.
Integer binom_l(long n, long k) {
  if (n < 0 || k < 0) throw InternalNonInteger("binomial argument underflow");
  return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

}  // namespace

Integer cross_multiplicity(const CrossSpace& space, unsigned long l) {
  if (l == 0) return 1;
  const long d = space.dim;
  const long ll = static_cast<long>(l);
  Rational m;
  switch (space.family) {
    case CrossFamily::sphere:
      m = Rational(Integer(2 * ll + d - 1), Integer(ll)) * binom_l(ll - 2 + d, ll - 1);
      break;
    case CrossFamily::real_projective:
      m = Rational(Integer(d - 1 + 4 * ll), Integer(d - 1)) * binom_l(2 * ll + d - 2, d - 2);
      break;
    case CrossFamily::complex_projective: {
      Integer b = binom_l(ll - 1 + d / 2, ll);
      m = Rational(Integer(d + 4 * ll), Integer(d)) * b * b;
      break;
    }
    case CrossFamily::quaternionic_projective:
      m = Rational(Integer(d + 4 * ll + 2), Integer(2 * ll * (ll + 1))) *
          binom_l(ll - 1 + d / 2, ll) * binom_l(ll + d / 2, ll - 1);
      break;
    case CrossFamily::cayley:
      m = Rational(Integer(3 * (d + 4 * ll + 6)), Integer(ll * (ll + 1) * (ll + 2) * (ll + 3))) *
          binom_l(ll - 1 + d / 2, ll) * binom_l(ll + d / 2 + 2, ll - 1);
      break;
  }
  return to_integer(m, "cross_multiplicity(" + family_to_string(space.family) + ")");
}

Integer cross_counting(const CrossSpace& space, unsigned long l) {
  if (l == 0) return 1;
  const long d = space.dim;
  const long ll = static_cast<long>(l);
  Rational n;
  switch (space.family) {
    case CrossFamily::sphere:
      n = Rational(Integer(d + 2 * ll), Integer(d)) * binom_l(ll + d - 1, ll);
      break;
    case CrossFamily::real_projective:
      n = Rational(binom_l(d + 2 * ll, d));
      break;
    case CrossFamily::complex_projective: {
      Integer b = binom_l(ll + d / 2, ll);
      n = Rational(Integer(b * b));
      break;
    }
    case CrossFamily::quaternionic_projective:
      n = Rational(Integer((d + 2 * ll + 2) * (d + 2 * ll)), Integer(2 * d * ll * (ll + 1))) *
          binom_l(ll - 1 + d / 2, ll) * binom_l(ll + d / 2, ll - 1);
      break;
    case CrossFamily::cayley:
      n = Rational(Integer(3 * (d + 2 * ll + 6) * (d + 2 * ll)),
                   Integer(d) * Integer(ll) * (ll + 1) * (ll + 2) * (ll + 3)) *
          binom_l(ll - 1 + d / 2, ll) * binom_l(ll + d / 2 + 2, ll - 1);
      break;
  }
  return to_integer(n, "cross_counting(" + family_to_string(space.family) + ")");
}

Spectrum cross_spectrum(const CrossSpace& space, unsigned long l_max) {
  std::vector<Level> levels;
  levels.reserve(l_max + 1);
  for (unsigned long l = 0; l <= l_max; ++l) {
    levels.push_back({cross_eigenvalue(space, l), cross_multiplicity(space, l)});
  }
  std::string meta = family_to_string(space.family) + " d=" + std::to_string(space.dim) +
                     " levels 0.." + std::to_string(l_max);
  return make_spectrum(Unit::absolute, std::move(levels), std::move(meta));
}

Spectrum oscillator_spectrum(const Rational& a, unsigned long l_max) {
  if (!(a > Rational(1))) {
    throw UnsupportedParameter("oscillator exponent parameter must satisfy a > 1");
  }
  const Rational k = Rational(2) / (a - 1);
  if (!k.is_integer() || k.sign() <= 0) {
    throw UnsupportedParameter("2/(a-1) must be a positive integer, got " + k.str());
  }
  const unsigned long ku = static_cast<unsigned long>(k.numerator().get_ui());
  std::vector<Level> levels;
  levels.reserve(l_max + 1);
  Integer prev_count = 0;
  for (unsigned long l = 0; l <= l_max; ++l) {
    Integer count = binomial(l + ku, l);
    Rational value = Rational(static_cast<long>(l)) + Rational(k.numerator(), Integer(2));
    levels.push_back({value, count - prev_count});
    prev_count = count;
  }
  return make_spectrum(Unit::absolute, std::move(levels),
                       "oscillator a=" + a.str() + " levels 0.." + std::to_string(l_max));
}

}  // namespace sumrules
