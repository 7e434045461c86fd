#include "sumrules/rational.hpp"

#include <cctype>
#include <ostream>

namespace sumrules {

namespace {

Integer parse_integer(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  if (t.empty()) throw ParseError("empty integer literal");
  // GMP itself skips embedded white space, which would turn the typo "1 2"
  // into 12; require an optional sign followed by digits only.
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == 0 && t[i] == '-' && t.size() > 1) continue;
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
      throw ParseError("not an integer literal: '" + text + "'");
    }
  }
  return Integer(t, 10);
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Exact value of a decimal literal like "-12.345e-6".
Rational parse_decimal(const std::string& text) {
  std::string t = text;
  bool negative = false;
  std::size_t pos = 0;
  if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
    negative = (t[pos] == '-');
    ++pos;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '.'); ++pos) {
    if (t[pos] == '.') {
      if (seen_dot) throw ParseError("two decimal points in '" + text + "'");
      seen_dot = true;
    } else {
      digits += t[pos];
      seen_digit = true;
      if (seen_dot) ++frac_len;
    }
  }
  if (!seen_digit) throw ParseError("no digits in '" + text + "'");
  long exp10 = 0;
  if (pos < t.size() && (t[pos] == 'e' || t[pos] == 'E')) {
    std::size_t tail = 0;
    try {
      exp10 = std::stol(t.substr(pos + 1), &tail);
    } catch (const std::exception&) {
      throw ParseError("bad exponent in '" + text + "'");
    }
    if (tail != t.size() - pos - 1) throw ParseError("bad exponent in '" + text + "'");
  } else if (pos != t.size()) {
    throw ParseError("trailing characters in '" + text + "'");
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long shift = exp10 - frac_len;
  if (shift >= 0) return Rational(Integer(mantissa * pow10(static_cast<unsigned long>(shift))));
  return Rational(mantissa, pow10(static_cast<unsigned long>(-shift)));
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw ParseError("empty rational literal");
  std::string t = text.substr(begin, end - begin + 1);

  std::size_t slash = t.find('/');
  if (slash != std::string::npos) {
    Integer num = parse_integer(t.substr(0, slash));
    Integer den = parse_integer(t.substr(slash + 1));
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (t.find('.') != std::string::npos || t.find('e') != std::string::npos ||
      t.find('E') != std::string::npos) {
    return parse_decimal(t);
  }
  return Rational(parse_integer(t));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::pow(unsigned long e) const {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), e);
  // num/den is already canonical: powers of coprime integers stay coprime.
  mpq_class r(num, den);
  return Rational(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Integer to_integer(const Rational& x, const std::string& context) {
  if (!x.is_integer()) {
    std::string where = context.empty() ? "" : (context + ": ");
    throw InternalNonInteger(where + "expected an integer, got " + x.str());
  }
  return x.numerator();
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational rising_product(const Rational& x, unsigned long k) {
  Rational acc = 1;
  for (unsigned long i = 0; i < k; ++i) acc *= x + Rational(static_cast<long>(i));
  return acc;
}

Integer floor_sqrt(const Rational& x) {
  if (x.sign() < 0) throw Error("floor_sqrt of a negative value");
  const Integer p = x.numerator();
  const Integer q = x.denominator();
  Integer t;
  mpz_fdiv_q(t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_sqrt(t.get_mpz_t(), t.get_mpz_t());
  // Integer sqrt of floor(x) can be off by one around the boundary; nudge it
  // until t^2 <= x < (t+1)^2 holds exactly.
  while ((t + 1) * (t + 1) * q <= p) ++t;
  while (t > 0 && t * t * q > p) --t;
  return t;
}

}  // namespace sumrules
