#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orderlab/mobius.hpp"
#include "orderlab/plmap.hpp"

namespace orderlab {

struct OrientationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact circle homeomorphism: piecewise-linear on R/Z or linear-fractional
/// on RP^1. Families never mix carriers (the two circles have different
/// exact-point models).
class CircleMap {
 public:
  CircleMap(PLCircleHomeo pl) : carrier_(std::move(pl)) {}          // NOLINT
  CircleMap(MobiusMap mobius) : carrier_(std::move(mobius)) {}     // NOLINT

  bool isPL() const { return std::holds_alternative<PLCircleHomeo>(carrier_); }
  bool isMobius() const { return std::holds_alternative<MobiusMap>(carrier_); }

  const PLCircleHomeo& pl() const { return std::get<PLCircleHomeo>(carrier_); }
  const MobiusMap& mobius() const { return std::get<MobiusMap>(carrier_); }

  bool isIdentity() const;
  CircleMap inverse() const;
  std::string key() const;

  friend CircleMap compose(const CircleMap& outer, const CircleMap& inner);
  friend bool operator==(const CircleMap& a, const CircleMap& b);

 private:
  std::variant<PLCircleHomeo, MobiusMap> carrier_;
};

/// Exact point on the carrier's circle model.
class CirclePointValue {
 public:
  CirclePointValue(Rational r) : value_(r.fractionalPart()) {}      // NOLINT
  CirclePointValue(ProjectivePoint p) : value_(std::move(p)) {}     // NOLINT

  bool isRational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  const ProjectivePoint& projective() const {
    return std::get<ProjectivePoint>(value_);
  }

  std::string str() const;

  friend bool operator==(const CirclePointValue&, const CirclePointValue&) = default;
  friend bool operator<(const CirclePointValue& a, const CirclePointValue& b);

 private:
  std::variant<Rational, ProjectivePoint> value_;
};

CirclePointValue apply(const CircleMap& map, const CirclePointValue& point);

/// Normalized lift of a degree-1 circle map. For PL carriers the lift is
/// evaluated exactly at rationals; Mobius lifts only expose the value at 0
/// (the chart coordinate of g(infinity)) and the Euler discrepancy, which is
/// all the cocycle machinery needs.
struct LiftedHomeo {
  CircleMap base;
  long translationOffset = 0;

  Rational evalPL(const Rational& x) const;  // lift(x) + offset, PL only
};

LiftedHomeo lift(const CircleMap& g);

/// The integer z with lift(g) o lift(h) = lift(gh) + z; always 0 or 1.
int eulerZ(const CircleMap& g, const CircleMap& h);

/// Exact fixed-point description of one circle map.
struct CircleFixedPoints {
  bool allPoints = false;
  std::vector<Rational> rationalPoints;                       // PL carrier
  std::vector<std::pair<Rational, Rational>> intervals;       // PL carrier
  std::vector<ProjectivePoint> projectivePoints;              // Mobius
  std::vector<QuadraticSurd> surdPoints;                      // Mobius

  bool empty() const {
    return !allPoints && rationalPoints.empty() && intervals.empty() &&
           projectivePoints.empty() && surdPoints.empty();
  }
  std::optional<CirclePointValue> someExactPoint() const;
};

CircleFixedPoints fixedPoints(const CircleMap& g);

}  // namespace orderlab
