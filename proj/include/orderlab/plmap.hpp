#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orderlab/rational.hpp"

namespace orderlab {

/// Increasing piecewise-linear homeomorphism of the real line with rational
/// knots and positive rational slopes on both unbounded rays. Stored in a
/// canonical form (redundant knots removed, affine maps anchored at 0), so
/// equal maps compare equal.
class LinePLMap {
 public:
  struct Knot {
    Rational x;
    Rational y;
    friend bool operator==(const Knot&, const Knot&) = default;
  };

  LinePLMap();  // identity
  LinePLMap(std::vector<Knot> knots, Rational leftSlope, Rational rightSlope);

  static LinePLMap translation(const Rational& offset);

  const std::vector<Knot>& knots() const { return knots_; }
  const Rational& leftSlope() const { return leftSlope_; }
  const Rational& rightSlope() const { return rightSlope_; }

  Rational eval(const Rational& x) const;
  LinePLMap inverse() const;
  bool isIdentity() const;

  /// Least fixed point >= x, or nullopt when the map has none there.
  std::optional<Rational> leastFixedPointAtOrAbove(const Rational& x) const;

  friend LinePLMap compose(const LinePLMap& outer, const LinePLMap& inner);
  friend bool operator==(const LinePLMap& a, const LinePLMap& b) {
    return a.knots_ == b.knots_ && a.leftSlope_ == b.leftSlope_ &&
           a.rightSlope_ == b.rightSlope_;
  }

  std::string key() const;

 private:
  void canonicalize();
  void validate() const;

  std::vector<Knot> knots_;
  Rational leftSlope_;
  Rational rightSlope_;
};

/// Orientation-preserving piecewise-linear circle homeomorphism on R/Z,
/// carried by the normalized lift: an increasing PL bijection F of R with
/// F(x + 1) = F(x) + 1 and F(0) in [0, 1). Knots are stored over one period
/// starting at x = 0; a knot at 0 is always present.
class PLCircleHomeo {
 public:
  /// Graph samples (x_i, y_i) of any lift over one period: x strictly
  /// increasing with x_last - x_first < 1, y strictly increasing with
  /// y_last - y_first < 1. Normalizes to the canonical lift.
  PLCircleHomeo(std::vector<Rational> xs, std::vector<Rational> ys);

  static PLCircleHomeo identity();
  static PLCircleHomeo rotation(const Rational& angle);

  /// Normalized lift F (F(0) in [0,1)), evaluated exactly anywhere.
  Rational liftEval(const Rational& x) const;
  /// Induced circle map on [0, 1).
  Rational circleEval(const Rational& x) const;

  PLCircleHomeo inverse() const;
  bool isIdentity() const;
  bool isRotation() const;

  /// Knot positions in [0, 1) (first is always 0).
  const std::vector<Rational>& knotXs() const { return xs_; }
  const std::vector<Rational>& knotYs() const { return ys_; }

  friend PLCircleHomeo compose(const PLCircleHomeo& outer,
                               const PLCircleHomeo& inner);
  friend bool operator==(const PLCircleHomeo& a, const PLCircleHomeo& b) {
    return a.xs_ == b.xs_ && a.ys_ == b.ys_;
  }

  std::string key() const;

 private:
  void canonicalize();

  std::vector<Rational> xs_;  // in [0, 1), strictly increasing, xs_[0] == 0
  std::vector<Rational> ys_;  // lift values, ys_[0] in [0, 1)
};

}  // namespace orderlab
