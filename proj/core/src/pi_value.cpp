#include "sumrules/pi_value.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <string>

namespace sumrules {

std::string PiScaled::str() const {
  if (power == 0) return coeff.str();
  return coeff.str() + "*pi^" + std::to_string(power);
}

PiScaled PiScaled::parse(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t last = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw ParseError("empty pi-scaled literal");
  std::string t = text.substr(begin, last - begin + 1);

  const std::size_t pi_pos = t.find("pi");
  if (pi_pos == std::string::npos) return PiScaled{Rational::parse(t), 0};

  std::string head = t.substr(0, pi_pos);
  while (!head.empty() && (head.back() == '*' || head.back() == ' ')) head.pop_back();
  Rational coeff = 1;
  if (head == "-") {
    coeff = -1;
  } else if (!head.empty()) {
    coeff = Rational::parse(head);
  }

  std::string tail = t.substr(pi_pos + 2);
  int power = 1;
  if (!tail.empty()) {
    if (tail.front() != '^') throw ParseError("expected '^' after pi in '" + text + "'");
    try {
      std::size_t used = 0;
      power = std::stoi(tail.substr(1), &used);
      if (used != tail.size() - 1) throw ParseError("bad pi exponent in '" + text + "'");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad pi exponent in '" + text + "'");
    }
  }
  return PiScaled{coeff, power};
}

namespace {

// Exact rational value of an MPFR number (every finite binary float is
// rational).
Rational to_rational(const mpfr_t f) {
  if (!mpfr_number_p(f)) throw Error("pi enclosure produced a non-finite value");
  Integer mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), f);
  Integer scale = 1;
  if (e >= 0) {
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(Integer(mantissa * scale));
  }
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(mantissa, scale);
}

}  // namespace

RationalInterval pi_power_enclosure(int power, unsigned long bits) {
  if (power == 0) return {Rational(1), Rational(1)};
  mpfr_t lo, hi;
  mpfr_init2(lo, static_cast<mpfr_prec_t>(bits));
  mpfr_init2(hi, static_cast<mpfr_prec_t>(bits));
  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_const_pi(hi, MPFR_RNDU);
  Rational pi_lo = to_rational(lo);
  Rational pi_hi = to_rational(hi);
  mpfr_clear(lo);
  mpfr_clear(hi);

  const unsigned long k = static_cast<unsigned long>(power > 0 ? power : -power);
  if (power > 0) return {pi_lo.pow(k), pi_hi.pow(k)};
  return {Rational(1) / pi_hi.pow(k), Rational(1) / pi_lo.pow(k)};
}

int compare(const Rational& x, const PiScaled& y) {
  if (y.coeff.is_zero()) return x.sign();
  if (y.power == 0) {
    if (x == y.coeff) return 0;
    return x < y.coeff ? -1 : 1;
  }
  // Reduce to t vs pi^power with t = x / coeff; flip the answer for negative
  // coefficients.
  const int flip = y.coeff.sign();
  const Rational t = x / y.coeff;
  if (t.sign() <= 0) return -flip;  // pi^power is positive
  for (unsigned long bits = 128; bits <= (1ul << 22); bits *= 2) {
    const RationalInterval box = pi_power_enclosure(y.power, bits);
    if (t < box.lo) return -flip;
    if (t > box.hi) return flip;
  }
  // Unreachable for rational t: t != pi^k, so some refinement separates them.
  throw Error("comparison against " + y.str() + " did not resolve");
}

unsigned long configured_decimal_digits() {
  const char* env = std::getenv("SPECTRAL_SUMRULES_PRECISION");
  if (env == nullptr || *env == '\0') return 50;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 2 || v > 100000) {
    throw Error("SPECTRAL_SUMRULES_PRECISION must be an integer in [2, 100000]");
  }
  return static_cast<unsigned long>(v);
}

}  // namespace sumrules
