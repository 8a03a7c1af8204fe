#include <doctest.h>

#include <random>

#include "orderlab/plmap.hpp"

using namespace orderlab;

namespace {

// Random increasing PL circle homeo: knots on a 1/24 grid, values strictly
// increasing within one period.
PLCircleHomeo randomCircleHomeo(std::mt19937_64& rng) {
  const int knots = 1 + static_cast<int>(rng() % 3);
  std::vector<Rational> xs, ys;
  long x = static_cast<long>(rng() % 6);
  long y = static_cast<long>(rng() % 24);
  for (int i = 0; i < knots; ++i) {
    xs.emplace_back(x, 24);
    ys.emplace_back(y, 24);
    x += 1 + static_cast<long>(rng() % 6);
    y += 1 + static_cast<long>(rng() % 6);
    if (x >= 24) break;
  }
  // keep within one period
  std::vector<Rational> uxs, uys;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] - xs[0] < Rational(1) && ys[i] - ys[0] < Rational(1)) {
      uxs.push_back(xs[i]);
      uys.push_back(ys[i]);
    }
  }
  return PLCircleHomeo(uxs, uys);
}

}  // namespace

TEST_CASE("line pl map evaluation, inverse, composition") {
  LinePLMap id;
  CHECK(id.isIdentity());
  CHECK(id.eval(Rational(7, 3)) == Rational(7, 3));

  LinePLMap t = LinePLMap::translation(Rational(1));
  CHECK(t.eval(Rational(0)) == Rational(1));
  CHECK(t.inverse().eval(Rational(0)) == Rational(-1));
  CHECK(compose(t, t.inverse()).isIdentity());

  // Kinked map: slope 1/2 below 0, slope 2 above.
  LinePLMap kinked({{Rational(0), Rational(0)}}, Rational(1, 2), Rational(2));
  CHECK(kinked.eval(Rational(-2)) == Rational(-1));
  CHECK(kinked.eval(Rational(3)) == Rational(6));
  CHECK(kinked.inverse().eval(Rational(6)) == Rational(3));
  CHECK(compose(kinked.inverse(), kinked).isIdentity());

  // Composition against pointwise evaluation on samples.
  LinePLMap other({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                  Rational(1), Rational(3));
  LinePLMap both = compose(other, kinked);
  for (long num = -20; num <= 20; ++num) {
    Rational x(num, 4);
    CHECK(both.eval(x) == other.eval(kinked.eval(x)));
  }
}

TEST_CASE("line pl canonical form identifies equal maps") {
  LinePLMap a({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}},
              Rational(1), Rational(1));
  CHECK(a.isIdentity());
  LinePLMap b({{Rational(5), Rational(5)}}, Rational(1), Rational(1));
  CHECK(a == b);
}

TEST_CASE("least fixed point scanning") {
  // Identity outside [0, 2], pushes up inside: f(1) = 3/2.
  LinePLMap bump({{Rational(0), Rational(0)},
                  {Rational(1), Rational(3, 2)},
                  {Rational(2), Rational(2)}},
                 Rational(1), Rational(1));
  REQUIRE(bump.leastFixedPointAtOrAbove(Rational(1, 2)).has_value());
  CHECK(*bump.leastFixedPointAtOrAbove(Rational(1, 2)) == Rational(2));
  CHECK(*bump.leastFixedPointAtOrAbove(Rational(-5)) == Rational(-5));
  CHECK(*bump.leastFixedPointAtOrAbove(Rational(3)) == Rational(3));

  LinePLMap shift = LinePLMap::translation(Rational(1));
  CHECK_FALSE(shift.leastFixedPointAtOrAbove(Rational(0)).has_value());

  // Contraction toward 1: f(x) = (x + 1) / 2, fixed exactly at 1.
  LinePLMap contraction({{Rational(1), Rational(1)}}, Rational(1, 2),
                        Rational(1, 2));
  CHECK(*contraction.leastFixedPointAtOrAbove(Rational(0)) == Rational(1));
}

TEST_CASE("circle pl lift normalization and degree one") {
  auto r = PLCircleHomeo::rotation(Rational(1, 2));
  CHECK(r.liftEval(Rational(0)) == Rational(1, 2));
  CHECK(PLCircleHomeo::identity().liftEval(Rational(5, 7)) == Rational(5, 7));

  PLCircleHomeo g({Rational(0), Rational(1, 2)},
                  {Rational(1, 4), Rational(3, 4)});
  CHECK(g.liftEval(Rational(0)) == Rational(1, 4));
  CHECK(g.liftEval(Rational(1)) == Rational(5, 4));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    PLCircleHomeo h = randomCircleHomeo(rng);
    Rational f0 = h.liftEval(Rational(0));
    CHECK(f0 >= Rational(0));
    CHECK(f0 < Rational(1));
    for (long num = -8; num <= 8; ++num) {
      Rational x(num, 5);
      CHECK(h.liftEval(x + Rational(1)) == h.liftEval(x) + Rational(1));
    }
  }
}

TEST_CASE("circle pl composition and inverse are exact") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    PLCircleHomeo g = randomCircleHomeo(rng);
    PLCircleHomeo h = randomCircleHomeo(rng);
    PLCircleHomeo gh = compose(g, h);
    for (long num = 0; num < 12; ++num) {
      Rational x(num, 12);
      CHECK(gh.circleEval(x) == g.circleEval(h.circleEval(x)));
    }
    CHECK(compose(g, g.inverse()).isIdentity());
    CHECK(compose(g.inverse(), g).isIdentity());
  }
}

TEST_CASE("rotation composition wraps exactly") {
  auto a = PLCircleHomeo::rotation(Rational(2, 3));
  auto ab = compose(a, a);
  CHECK(ab == PLCircleHomeo::rotation(Rational(1, 3)));
  CHECK(ab.isRotation());
}
