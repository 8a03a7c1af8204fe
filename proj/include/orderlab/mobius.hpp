#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orderlab/rational.hpp"

namespace orderlab {

/// Point of the rational projective line: (num : den) with den >= 0 and
/// gcd 1; infinity is (1 : 0).
struct ProjectivePoint {
  Int num = 0;
  Int den = 1;

  ProjectivePoint() = default;
  ProjectivePoint(Int n, Int d);

  static ProjectivePoint infinity() { return ProjectivePoint(1, 0); }
  static ProjectivePoint fromRational(const Rational& r) {
    return ProjectivePoint(r.numerator(), r.denominator());
  }

  bool isInfinity() const { return sgn(den) == 0; }
  Rational toRational() const;  // throws for infinity

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  std::string str() const;
};

/// Exact value p + q*sqrt(d) with d a positive non-square integer, q != 0.
/// Carries irrational Mobius fixed points without rounding.
struct QuadraticSurd {
  Rational p;
  Rational q;
  Int d;

  double toDouble() const;
  std::string str() const;
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// Linear-fractional transformation x -> (ax + b)/(cx + d) of the projective
/// line, orientation-preserving (determinant > 0). Stored projectively
/// normalized: integer entries with content 1 and positive leading entry.
class MobiusMap {
 public:
  MobiusMap(Int a, Int b, Int c, Int d);

  static MobiusMap identity() { return MobiusMap(1, 0, 0, 1); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  Int determinant() const { return a_ * d_ - b_ * c_; }

  ProjectivePoint apply(const ProjectivePoint& x) const;
  bool fixes(const QuadraticSurd& x) const;

  MobiusMap inverse() const;
  bool isIdentity() const;  // projective: scalar matrices act trivially

  friend MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);
  friend bool operator==(const MobiusMap& a, const MobiusMap& b) {
    return a.a_ == b.a_ && a.b_ == b.b_ && a.c_ == b.c_ && a.d_ == b.d_;
  }

  std::string key() const;

  struct FixedPoints {
    bool allPoints = false;
    std::vector<ProjectivePoint> rationalPoints;
    std::vector<QuadraticSurd> surdPoints;
    bool empty() const {
      return !allPoints && rationalPoints.empty() && surdPoints.empty();
    }
  };
  /// Solves g(x) = x exactly; elliptic maps yield no real fixed points,
  /// irrational ones come back as quadratic surds.
  FixedPoints fixedPoints() const;

 private:
  void normalize();

  Int a_, b_, c_, d_;
};

/// Strict order of chart coordinates on RP^1 ~ R/Z with infinity at 0 and
/// finite points following in increasing order. Decides Euler cocycle values
/// without evaluating the transcendental chart.
bool chartLess(const ProjectivePoint& lhs, const ProjectivePoint& rhs);

/// Euler cocycle value of the projective action: 0 or 1.
int mobiusEulerZ(const MobiusMap& g, const MobiusMap& h);

}  // namespace orderlab
