#include "orderlab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace orderlab {

Rational::Rational(const Int& num, const Int& den) : value_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.isZero()) throw std::domain_error("rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational Rational::abs() const { return signum() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (isZero()) throw std::domain_error("rational: reciprocal of zero");
  return Rational(denominator(), numerator());
}

Int Rational::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(),
             value_.get_den().get_mpz_t());
  return q;
}

Rational Rational::fractionalPart() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (isInteger()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& out, const Rational& value) {
  return out << value.str();
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a > b ? a : b; }

Int truncDiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::string intStr(const Int& n) { return n.get_str(); }

Int parseInt(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("integer: cannot parse '" + text + "'");
  }
}

}  // namespace orderlab
