#include <doctest.h>

#include "orderlab/cochain.hpp"

using namespace orderlab;

namespace {

GroupContext cyclicContext(long q) {
  return GroupContext::fromCircleGenerators(
      {CircleMap(PLCircleHomeo::rotation(Rational(1, q)))},
      static_cast<int>(q));
}

}  // namespace

TEST_CASE("group context from rotations closes into the cyclic group") {
  GroupContext ctx = cyclicContext(6);
  CHECK(ctx.size() == 6);
  for (int i = 0; i < ctx.size(); ++i) {
    CHECK(ctx.product(i, ctx.inverseOf(i)) == ctx.identityIndex());
    for (int j = 0; j < ctx.size(); ++j) CHECK(ctx.product(i, j).has_value());
  }
}

TEST_CASE("integer ball context has escaping products") {
  GroupContext ctx = GroupContext::integerBall(3);
  CHECK(ctx.size() == 7);
  const int top = ctx.size() - 1;  // g^3
  CHECK_FALSE(ctx.product(top, top).has_value());
  CHECK(ctx.product(top, ctx.inverseOf(top)) == ctx.identityIndex());
}

TEST_CASE("delta of the zero cochain is zero") {
  GroupContext ctx = cyclicContext(4);
  BoundedCochain zero(1);
  auto d = delta(zero, ctx);
  CHECK(d.escapedTuples == 0);
  CHECK(d.cochain.bound() == 0);
}

TEST_CASE("delta matches the direct formula on a clipped integer cochain") {
  GroupContext ctx = GroupContext::integerBall(4);
  // phi(g^n) = min(n, 2) clipped
  BoundedCochain phi(1);
  for (int i = 0; i < ctx.size(); ++i) {
    long n = i - 4;
    phi.set({i}, std::min(n, 2L));
  }
  auto d = delta(phi, ctx);
  // direct formula on pairs that stay in the ball
  long checked = 0;
  for (int i = 0; i < ctx.size(); ++i) {
    for (int j = 0; j < ctx.size(); ++j) {
      auto ij = ctx.product(i, j);
      if (!ij) continue;
      const long expect = phi.value({j}) - phi.value({*ij}) + phi.value({i});
      CHECK(d.cochain.value({i, j}) == expect);
      ++checked;
    }
  }
  CHECK(checked > 0);
  const long pairs = static_cast<long>(ctx.size()) * ctx.size();
  CHECK(d.escapedTuples == pairs - checked);
}

TEST_CASE("delta of delta vanishes on closed contexts") {
  GroupContext ctx = cyclicContext(5);
  BoundedCochain phi(1);
  // arbitrary integer values
  for (int i = 0; i < ctx.size(); ++i) phi.set({i}, (7 * i * i + 3 * i) % 5 - 2);
  auto d1 = delta(phi, ctx);
  REQUIRE(d1.escapedTuples == 0);
  auto d2 = delta(d1.cochain, ctx);
  CHECK(d2.escapedTuples == 0);
  CHECK(d2.cochain.bound() == 0);

  BoundedCochain c2(2);
  for (int i = 0; i < ctx.size(); ++i)
    for (int j = 0; j < ctx.size(); ++j) c2.set({i, j}, (i * 3 + j * j) % 7 - 3);
  auto d3 = delta(c2, ctx);
  REQUIRE(d3.escapedTuples == 0);
  auto d4 = delta(d3.cochain, ctx);
  CHECK(d4.cochain.bound() == 0);
}

TEST_CASE("homogeneous forms are left invariant and round-trip") {
  GroupContext ctx = cyclicContext(6);
  BoundedCochain c(2);
  for (int i = 0; i < ctx.size(); ++i)
    for (int j = 0; j < ctx.size(); ++j) c.set({i, j}, (5 * i + 2 * j) % 4 - 1);

  BoundedCochain hom = homogenize(c, ctx);
  CHECK(hom.arity() == 3);
  // left invariance: hc(t g0, t g1, t g2) = hc(g0, g1, g2)
  for (int t = 0; t < ctx.size(); ++t) {
    for (int g0 = 0; g0 < ctx.size(); ++g0)
      for (int g1 = 0; g1 < ctx.size(); ++g1)
        for (int g2 = 0; g2 < ctx.size(); ++g2) {
          auto a = ctx.product(t, g0);
          auto b = ctx.product(t, g1);
          auto cc = ctx.product(t, g2);
          REQUIRE(a.has_value());
          CHECK(hom.value({*a, *b, *cc}) == hom.value({g0, g1, g2}));
        }
  }
  CHECK(inhomogenize(hom, ctx) == c);

  // identity-supported arity-1 cochain round-trips too
  BoundedCochain spike(1);
  spike.set({ctx.identityIndex()}, 3);
  CHECK(inhomogenize(homogenize(spike, ctx), ctx) == spike);
}
