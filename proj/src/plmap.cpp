#include "orderlab/plmap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orderlab {

namespace {

Rational interpolate(const Rational& x0, const Rational& y0, const Rational& x1,
                     const Rational& y1, const Rational& x) {
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace

LinePLMap::LinePLMap() : leftSlope_(1), rightSlope_(1) {
  knots_.push_back({Rational(0), Rational(0)});
}

LinePLMap::LinePLMap(std::vector<Knot> knots, Rational leftSlope,
                     Rational rightSlope)
    : knots_(std::move(knots)),
      leftSlope_(std::move(leftSlope)),
      rightSlope_(std::move(rightSlope)) {
  validate();
  canonicalize();
}

LinePLMap LinePLMap::translation(const Rational& offset) {
  return LinePLMap({{Rational(0), offset}}, Rational(1), Rational(1));
}

void LinePLMap::validate() const {
  if (knots_.empty()) throw std::invalid_argument("pl map: no knots");
  if (leftSlope_.signum() <= 0 || rightSlope_.signum() <= 0)
    throw std::invalid_argument("pl map: ray slopes must be positive");
  for (size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i - 1].x < knots_[i].x && knots_[i - 1].y < knots_[i].y))
      throw std::invalid_argument("pl map: knots must strictly increase");
  }
}

void LinePLMap::canonicalize() {
  // Drop knots where the map is locally affine (segment slopes agree on
  // both sides, with the unbounded rays counting as segments).
  auto slopeBefore = [&](size_t i) {
    if (i == 0) return leftSlope_;
    return (knots_[i].y - knots_[i - 1].y) / (knots_[i].x - knots_[i - 1].x);
  };
  auto slopeAfter = [&](size_t i) {
    if (i + 1 == knots_.size()) return rightSlope_;
    return (knots_[i + 1].y - knots_[i].y) / (knots_[i + 1].x - knots_[i].x);
  };
  for (size_t i = knots_.size(); i-- > 0;) {
    if (knots_.size() > 1 && slopeBefore(i) == slopeAfter(i))
      knots_.erase(knots_.begin() + i);
  }
  // Fully affine maps are re-anchored at x = 0 so equal maps compare equal.
  if (knots_.size() == 1 && leftSlope_ == rightSlope_) {
    Rational y0 = knots_[0].y - leftSlope_ * knots_[0].x;
    knots_[0] = {Rational(0), y0};
  }
}

Rational LinePLMap::eval(const Rational& x) const {
  if (x <= knots_.front().x)
    return knots_.front().y + leftSlope_ * (x - knots_.front().x);
  if (x >= knots_.back().x)
    return knots_.back().y + rightSlope_ * (x - knots_.back().x);
  // Find the segment containing x.
  size_t lo = 0, hi = knots_.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (knots_[mid].x <= x)
      lo = mid;
    else
      hi = mid;
  }
  return interpolate(knots_[lo].x, knots_[lo].y, knots_[hi].x, knots_[hi].y, x);
}

LinePLMap LinePLMap::inverse() const {
  std::vector<Knot> inv;
  inv.reserve(knots_.size());
  for (const auto& k : knots_) inv.push_back({k.y, k.x});
  return LinePLMap(std::move(inv), leftSlope_.reciprocal(),
                   rightSlope_.reciprocal());
}

bool LinePLMap::isIdentity() const {
  return leftSlope_ == Rational(1) && rightSlope_ == Rational(1) &&
         knots_.size() == 1 && knots_[0].x == knots_[0].y;
}

std::optional<Rational> LinePLMap::leastFixedPointAtOrAbove(
    const Rational& x) const {
  if (eval(x) == x) return x;
  std::optional<Rational> best;
  auto consider = [&](const Rational& candidate) {
    if (candidate < x) return;
    if (!best || candidate < *best) best = candidate;
  };
  const auto& first = knots_.front();
  const auto& last = knots_.back();
  // Left ray: f(t) = y0 + sL (t - x0), t <= x0. A slope-1 fixed ray would
  // contain x itself, which the early return above already handled.
  if (leftSlope_ != Rational(1)) {
    Rational t = (first.y - leftSlope_ * first.x) / (Rational(1) - leftSlope_);
    if (t <= first.x) consider(t);
  } else if (first.y == first.x) {
    consider(first.x);
  }
  // Interior segments [a, b].
  for (size_t i = 0; i + 1 < knots_.size(); ++i) {
    const auto& a = knots_[i];
    const auto& b = knots_[i + 1];
    Rational slope = (b.y - a.y) / (b.x - a.x);
    if (slope != Rational(1)) {
      Rational t = (a.y - slope * a.x) / (Rational(1) - slope);
      if (a.x <= t && t <= b.x) consider(t);
    } else if (a.y == a.x) {
      Rational candidate = max(a.x, x);
      if (candidate <= b.x) consider(candidate);
    }
  }
  for (const auto& k : knots_)
    if (k.y == k.x) consider(k.x);
  // Right ray: f(t) = yN + sR (t - xN), t >= xN.
  if (rightSlope_ != Rational(1)) {
    Rational t = (last.y - rightSlope_ * last.x) / (Rational(1) - rightSlope_);
    if (t >= last.x) consider(t);
  } else if (last.y == last.x) {
    consider(max(last.x, x));
  }
  return best;
}

LinePLMap compose(const LinePLMap& outer, const LinePLMap& inner) {
  // Breakpoints of outer∘inner: inner's knots plus inner-preimages of
  // outer's knots.
  std::vector<Rational> xs;
  for (const auto& k : inner.knots_) xs.push_back(k.x);
  LinePLMap innerInv = inner.inverse();
  for (const auto& k : outer.knots_) xs.push_back(innerInv.eval(k.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<LinePLMap::Knot> knots;
  knots.reserve(xs.size());
  for (const auto& x : xs) knots.push_back({x, outer.eval(inner.eval(x))});
  return LinePLMap(std::move(knots),
                   outer.leftSlope_ * inner.leftSlope_,
                   outer.rightSlope_ * inner.rightSlope_);
}

std::string LinePLMap::key() const {
  std::ostringstream out;
  out << leftSlope_ << '|' << rightSlope_;
  for (const auto& k : knots_) out << '|' << k.x << ',' << k.y;
  return out.str();
}

PLCircleHomeo::PLCircleHomeo(std::vector<Rational> xs, std::vector<Rational> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.empty() || xs_.size() != ys_.size())
    throw std::invalid_argument("circle pl: knot count mismatch");
  for (size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i - 1] < xs_[i] && ys_[i - 1] < ys_[i]))
      throw std::invalid_argument("circle pl: knots must strictly increase");
  }
  if (xs_.back() - xs_.front() >= Rational(1))
    throw std::invalid_argument("circle pl: knots exceed one period");
  if (ys_.back() - ys_.front() >= Rational(1))
    throw std::invalid_argument("circle pl: values exceed one period");
  canonicalize();
}

PLCircleHomeo PLCircleHomeo::identity() { return rotation(Rational(0)); }

PLCircleHomeo PLCircleHomeo::rotation(const Rational& angle) {
  return PLCircleHomeo({Rational(0)}, {angle});
}

void PLCircleHomeo::canonicalize() {
  const size_t m = xs_.size();
  // Translate every knot into x in [0, 1) using F(x + n) = F(x) + n, then
  // rotate into increasing order.
  std::vector<std::pair<Rational, Rational>> pts(m);
  for (size_t i = 0; i < m; ++i) {
    Rational shift(xs_[i].floor());
    pts[i] = {xs_[i] - shift, ys_[i] - shift};
  }
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // Value of the lift at 0 (wrap segment when there is no knot at 0).
  Rational f0;
  if (pts.front().first.isZero()) {
    f0 = pts.front().second;
  } else {
    const auto& prev = pts.back();
    const auto& next = pts.front();
    f0 = interpolate(prev.first - Rational(1), prev.second - Rational(1),
                     next.first, next.second, Rational(0));
    pts.insert(pts.begin(), {Rational(0), f0});
  }
  // Normalize so F(0) lands in [0, 1).
  Rational shift(f0.floor());
  for (auto& p : pts) p.second -= shift;
  // Drop knots where the lift is locally affine (wrap-aware).
  const size_t count = pts.size();
  auto knotAt = [&](size_t i, int offset) {
    // neighbor index with period wrap
    long pos = static_cast<long>(i) + offset;
    Rational adjust(0);
    while (pos < 0) {
      pos += static_cast<long>(count);
      adjust -= Rational(1);
    }
    while (pos >= static_cast<long>(count)) {
      pos -= static_cast<long>(count);
      adjust += Rational(1);
    }
    return std::pair<Rational, Rational>{pts[pos].first + adjust,
                                         pts[pos].second + adjust};
  };
  std::vector<bool> keep(count, true);
  for (size_t i = count; i-- > 1;) {  // never drop the knot at 0
    auto prev = knotAt(i, -1);
    auto next = knotAt(i, +1);
    Rational slopeIn = (pts[i].second - prev.second) / (pts[i].first - prev.first);
    Rational slopeOut = (next.second - pts[i].second) / (next.first - pts[i].first);
    if (slopeIn == slopeOut) keep[i] = false;
  }
  xs_.clear();
  ys_.clear();
  for (size_t i = 0; i < count; ++i) {
    if (!keep[i]) continue;
    xs_.push_back(pts[i].first);
    ys_.push_back(pts[i].second);
  }
}

Rational PLCircleHomeo::liftEval(const Rational& x) const {
  Rational shift(x.floor());
  Rational x0 = x - shift;  // in [0, 1)
  // xs_[0] == 0, so binary search the containing segment.
  size_t lo = 0;
  size_t hi = xs_.size();  // sentinel: wrap knot at (1, ys_[0] + 1)
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (xs_[mid] <= x0)
      lo = mid;
    else
      hi = mid;
  }
  Rational x1 = hi == xs_.size() ? Rational(1) : xs_[hi];
  Rational y1 = hi == xs_.size() ? ys_[0] + Rational(1) : ys_[hi];
  if (x0 == xs_[lo]) return ys_[lo] + shift;
  return interpolate(xs_[lo], ys_[lo], x1, y1, x0) + shift;
}

Rational PLCircleHomeo::circleEval(const Rational& x) const {
  return liftEval(x).fractionalPart();
}

PLCircleHomeo PLCircleHomeo::inverse() const {
  // The inverse lift interpolates the reflected graph (y_i, x_i).
  return PLCircleHomeo(ys_, xs_);
}

bool PLCircleHomeo::isIdentity() const {
  return xs_.size() == 1 && ys_[0].isZero();
}

bool PLCircleHomeo::isRotation() const { return xs_.size() == 1; }

PLCircleHomeo compose(const PLCircleHomeo& outer, const PLCircleHomeo& inner) {
  // Knots: inner's, plus inner-preimages of outer's knots (one per period).
  PLCircleHomeo innerInv = inner.inverse();
  std::vector<Rational> xs = inner.xs_;
  for (const auto& u : outer.xs_) {
    // Shift u by the unique integer landing it in [F(0), F(0) + 1), where F
    // is inner's lift, then pull back through the inverse.
    Rational f0 = inner.ys_[0];
    Rational v = u - Rational((u - f0).floor());
    xs.push_back(innerInv.liftEval(v).fractionalPart());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(outer.liftEval(inner.liftEval(x)));
  return PLCircleHomeo(std::move(xs), std::move(ys));
}

std::string PLCircleHomeo::key() const {
  std::ostringstream out;
  out << "pl";
  for (size_t i = 0; i < xs_.size(); ++i)
    out << '|' << xs_[i] << ',' << ys_[i];
  return out.str();
}

}  // namespace orderlab
