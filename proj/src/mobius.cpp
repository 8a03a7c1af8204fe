#include "orderlab/mobius.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orderlab {

ProjectivePoint::ProjectivePoint(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (sgn(num) == 0 && sgn(den) == 0)
    throw std::invalid_argument("projective point: (0 : 0)");
  Int g = gcd(num, den);
  num /= g;
  den /= g;
  if (sgn(den) < 0 || (sgn(den) == 0 && sgn(num) < 0)) {
    num = -num;
    den = -den;
  }
}

Rational ProjectivePoint::toRational() const {
  if (isInfinity())
    throw std::domain_error("projective point: infinity has no rational value");
  return Rational(num, den);
}

std::string ProjectivePoint::str() const {
  if (isInfinity()) return "inf";
  return Rational(num, den).str();
}

double QuadraticSurd::toDouble() const {
  return p.toDouble() + q.toDouble() * std::sqrt(d.get_d());
}

std::string QuadraticSurd::str() const {
  std::ostringstream out;
  out << p.str() << (q.signum() < 0 ? " - " : " + ") << q.abs().str()
      << "*sqrt(" << d.get_str() << ")";
  return out.str();
}

MobiusMap::MobiusMap(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (sgn(a_ * d_ - b_ * c_) <= 0)
    throw std::invalid_argument("mobius map: determinant must be positive");
  normalize();
}

void MobiusMap::normalize() {
  Int g = gcd(gcd(a_, b_), gcd(c_, d_));
  a_ /= g;
  b_ /= g;
  c_ /= g;
  d_ /= g;
  // M and -M act identically; fix the sign of the first nonzero entry.
  int lead = sgn(a_) != 0 ? sgn(a_) : (sgn(b_) != 0 ? sgn(b_) : sgn(c_));
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

ProjectivePoint MobiusMap::apply(const ProjectivePoint& x) const {
  return ProjectivePoint(a_ * x.num + b_ * x.den, c_ * x.num + d_ * x.den);
}

bool MobiusMap::fixes(const QuadraticSurd& x) const {
  // g(x) = x  <=>  c x^2 + (d - a) x - b = 0, evaluated in Q(sqrt(d)).
  // (p + q sqrt(D))^2 = p^2 + q^2 D + 2 p q sqrt(D).
  Rational D{x.d};
  Rational rat = Rational(c_) * (x.p * x.p + x.q * x.q * D) +
                 Rational(d_ - a_) * x.p - Rational(b_);
  Rational irr = Rational(c_) * (Rational(2) * x.p * x.q) +
                 Rational(d_ - a_) * x.q;
  return rat.isZero() && irr.isZero();
}

MobiusMap MobiusMap::inverse() const {
  return MobiusMap(d_, -b_, -c_, a_);
}

bool MobiusMap::isIdentity() const {
  return sgn(b_) == 0 && sgn(c_) == 0 && a_ == d_;
}

MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner) {
  return MobiusMap(outer.a_ * inner.a_ + outer.b_ * inner.c_,
                   outer.a_ * inner.b_ + outer.b_ * inner.d_,
                   outer.c_ * inner.a_ + outer.d_ * inner.c_,
                   outer.c_ * inner.b_ + outer.d_ * inner.d_);
}

std::string MobiusMap::key() const {
  std::ostringstream out;
  out << "mob|" << a_.get_str() << '|' << b_.get_str() << '|' << c_.get_str()
      << '|' << d_.get_str();
  return out.str();
}

MobiusMap::FixedPoints MobiusMap::fixedPoints() const {
  FixedPoints out;
  if (isIdentity()) {
    out.allPoints = true;
    return out;
  }
  // Finite solutions of c x^2 + (d - a) x - b = 0; infinity iff c = 0.
  if (sgn(c_) == 0) {
    out.rationalPoints.push_back(ProjectivePoint::infinity());
    if (a_ != d_)
      out.rationalPoints.push_back(
          ProjectivePoint::fromRational(Rational(b_, d_ - a_)));
    return out;
  }
  const Int disc = (d_ - a_) * (d_ - a_) + 4 * b_ * c_;
  if (sgn(disc) < 0) return out;  // elliptic: no real fixed points
  if (sgn(disc) == 0) {
    out.rationalPoints.push_back(
        ProjectivePoint::fromRational(Rational(a_ - d_, 2 * c_)));
    return out;
  }
  Int root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  if (root * root == disc) {
    out.rationalPoints.push_back(
        ProjectivePoint::fromRational(Rational(a_ - d_ + root, 2 * c_)));
    out.rationalPoints.push_back(
        ProjectivePoint::fromRational(Rational(a_ - d_ - root, 2 * c_)));
  } else {
    // x = (a - d +- sqrt(disc)) / (2c), with the square part of disc pulled
    // into the rational coefficient.
    Int square(1), rest = disc;
    for (Int f(2); f * f <= rest; ++f) {
      while (rest % (f * f) == 0) {
        rest /= f * f;
        square *= f;
      }
    }
    Rational half(Int(1), 2 * c_);
    out.surdPoints.push_back(
        {Rational(a_ - d_) * half, Rational(square) * half, rest});
    out.surdPoints.push_back(
        {Rational(a_ - d_) * half, -(Rational(square) * half), rest});
  }
  return out;
}

bool chartLess(const ProjectivePoint& lhs, const ProjectivePoint& rhs) {
  if (lhs.isInfinity()) return !rhs.isInfinity();
  if (rhs.isInfinity()) return false;
  return Rational(lhs.num, lhs.den) < Rational(rhs.num, rhs.den);
}

int mobiusEulerZ(const MobiusMap& g, const MobiusMap& h) {
  // With base point infinity (chart coordinate 0), the normalized lifts give
  // z = [ coord((gh)(inf)) < coord(g(inf)) ].
  const ProjectivePoint gh = compose(g, h).apply(ProjectivePoint::infinity());
  const ProjectivePoint gBase = g.apply(ProjectivePoint::infinity());
  return chartLess(gh, gBase) ? 1 : 0;
}

}  // namespace orderlab
