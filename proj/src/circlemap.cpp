#include "orderlab/circlemap.hpp"

#include <stdexcept>

namespace orderlab {

bool CircleMap::isIdentity() const {
  if (isPL()) return pl().isIdentity();
  return mobius().isIdentity();
}

CircleMap CircleMap::inverse() const {
  if (isPL()) return CircleMap(pl().inverse());
  return CircleMap(mobius().inverse());
}

std::string CircleMap::key() const {
  return isPL() ? pl().key() : mobius().key();
}

CircleMap compose(const CircleMap& outer, const CircleMap& inner) {
  if (outer.isPL() != inner.isPL())
    throw std::invalid_argument("circle map: cannot mix PL and Mobius carriers");
  if (outer.isPL()) return CircleMap(compose(outer.pl(), inner.pl()));
  return CircleMap(compose(outer.mobius(), inner.mobius()));
}

bool operator==(const CircleMap& a, const CircleMap& b) {
  if (a.isPL() != b.isPL()) return false;
  return a.isPL() ? a.pl() == b.pl() : a.mobius() == b.mobius();
}

std::string CirclePointValue::str() const {
  return isRational() ? rational().str() : projective().str();
}

bool operator<(const CirclePointValue& a, const CirclePointValue& b) {
  if (a.isRational() != b.isRational())
    throw std::invalid_argument("circle point: cannot compare across carriers");
  if (a.isRational()) return a.rational() < b.rational();
  return chartLess(a.projective(), b.projective());
}

CirclePointValue apply(const CircleMap& map, const CirclePointValue& point) {
  if (map.isPL() != point.isRational())
    throw std::invalid_argument("circle map: point model does not match carrier");
  if (map.isPL()) return CirclePointValue(map.pl().circleEval(point.rational()));
  return CirclePointValue(map.mobius().apply(point.projective()));
}

Rational LiftedHomeo::evalPL(const Rational& x) const {
  return base.pl().liftEval(x) + Rational(translationOffset);
}

LiftedHomeo lift(const CircleMap& g) {
  return LiftedHomeo{g, 0};  // carriers store the normalized lift already
}

int eulerZ(const CircleMap& g, const CircleMap& h) {
  if (g.isPL() != h.isPL())
    throw std::invalid_argument("euler: cannot mix carriers");
  if (g.isMobius()) return mobiusEulerZ(g.mobius(), h.mobius());
  // z = lift(g)(lift(h)(0)) - lift(gh)(0). The normalized lift of gh at 0 is
  // the fractional part of the composed value, so z is just its floor.
  const Rational composedAtZero = g.pl().liftEval(h.pl().liftEval(Rational(0)));
  const Int z = composedAtZero.floor();
  const long value = z.get_si();
  if (value != 0 && value != 1)
    throw std::logic_error("euler: discrepancy outside {0,1}");
  return static_cast<int>(value);
}

std::optional<CirclePointValue> CircleFixedPoints::someExactPoint() const {
  if (!rationalPoints.empty()) return CirclePointValue(rationalPoints.front());
  if (!intervals.empty()) return CirclePointValue(intervals.front().first);
  if (!projectivePoints.empty())
    return CirclePointValue(projectivePoints.front());
  if (allPoints) return CirclePointValue(Rational(0));
  return std::nullopt;
}

namespace {

CircleFixedPoints plFixedPoints(const PLCircleHomeo& g) {
  CircleFixedPoints out;
  if (g.isIdentity()) {
    out.allPoints = true;
    return out;
  }
  // Solve F(x) = x + m per segment of the normalized lift over [0, 1].
  const auto& xs = g.knotXs();
  const auto& ys = g.knotYs();
  const size_t m = xs.size();
  auto addPoint = [&](const Rational& x) {
    Rational p = x.fractionalPart();
    for (const auto& existing : out.rationalPoints)
      if (existing == p) return;
    out.rationalPoints.push_back(p);
  };
  for (size_t i = 0; i < m; ++i) {
    Rational x0 = xs[i];
    Rational y0 = ys[i];
    Rational x1 = i + 1 < m ? xs[i + 1] : Rational(1);
    Rational y1 = i + 1 < m ? ys[i + 1] : ys[0] + Rational(1);
    // displacement F(x) - x runs from d0 to d1 on [x0, x1]
    Rational d0 = y0 - x0;
    Rational d1 = y1 - x1;
    Int lo = min(d0, d1).floor();
    Int hi = max(d0, d1).floor() + 1;
    Rational slope = (y1 - y0) / (x1 - x0);
    for (Int k = lo; k <= hi; ++k) {
      Rational target{k};
      if (slope == Rational(1)) {
        if (d0 == target) {
          out.intervals.emplace_back(x0, x1);
          break;
        }
        continue;
      }
      // F(x) = x + k  on the affine piece
      Rational x = (y0 - slope * x0 - target) / (Rational(1) - slope);
      if (x0 <= x && x <= x1) addPoint(x);
    }
  }
  return out;
}

}  // namespace

CircleFixedPoints fixedPoints(const CircleMap& g) {
  CircleFixedPoints out;
  if (g.isPL()) return plFixedPoints(g.pl());
  auto fp = g.mobius().fixedPoints();
  out.allPoints = fp.allPoints;
  out.projectivePoints = std::move(fp.rationalPoints);
  out.surdPoints = std::move(fp.surdPoints);
  return out;
}

}  // namespace orderlab
