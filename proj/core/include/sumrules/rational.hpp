#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "sumrules/errors.hpp"

namespace sumrules {

// Arbitrary-precision integer. GMP already does this job well; the alias keeps
// the rest of the library decoupled from the backing type.
using Integer = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
// Every constructor canonicalizes, and GMP's mpq arithmetic preserves the
// canonical form, so the invariant holds for the lifetime of a value.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);

  // Accepts "p/q", a plain integer "n", or decimal notation such as "0.25"
  // and "1.5e-3" (decimals are exact: 1.5e-3 becomes 3/2000).
  static Rational parse(const std::string& text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  // Underlying GMP value, for handing off to MPFR.
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Serializes as "p/q", or "p" alone when the denominator is 1.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  Integer floor() const;
  Integer ceil() const;

  // x^e for a nonnegative integer exponent; 0^0 is 1.
  Rational pow(unsigned long e) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& x);

// Converts an integral rational to Integer; throws InternalNonInteger
// otherwise. Used wherever a closed form promises an integer value.
Integer to_integer(const Rational& x, const std::string& context = "");

// Binomial coefficient C(n, k) with the convention C(n, k) = 0 when k > n.
Integer binomial(unsigned long n, unsigned long k);

// Rising factorial x (x+1) ... (x+k-1); the empty product (k = 0) is 1.
// Together with binomial() this is enough to express every Gamma-function
// ratio appearing in the closed-form spectra with rational arguments.
Rational rising_product(const Rational& x, unsigned long k);

// Largest nonnegative integer t with t^2 <= x. Requires x >= 0.
Integer floor_sqrt(const Rational& x);

}  // namespace sumrules
