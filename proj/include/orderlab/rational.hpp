#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace orderlab {

using Int = mpz_class;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Backed by GMP's canonical mpq representation.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Int& n) : value_(n) {}
  Rational(const Int& num, const Int& den);
  Rational(long num, long den);

  static Rational parse(const std::string& text);

  const Int numerator() const { return value_.get_num(); }
  const Int denominator() const { return value_.get_den(); }

  bool isZero() const { return sgn(value_) == 0; }
  bool isInteger() const { return value_.get_den() == 1; }
  int signum() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  Rational operator-() const;
  Rational abs() const;
  Rational reciprocal() const;

  /// Largest integer <= value.
  Int floor() const;

  /// Representative in [0, 1): value - floor(value).
  Rational fractionalPart() const;

  double toDouble() const { return value_.get_d(); }

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& out, const Rational& value);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Truncating integer division (rounds toward zero), matching C++ int division.
Int truncDiv(const Int& a, const Int& b);

std::string intStr(const Int& n);
Int parseInt(const std::string& text);

}  // namespace orderlab
