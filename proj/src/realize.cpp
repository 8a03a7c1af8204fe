#include "orderlab/realize.hpp"

#include <map>

namespace orderlab {

DynamicalRealization dynamicalRealization(const std::vector<GroupWord>& ball,
                                          const GroupModel& model) {
  if (ball.empty()) throw std::invalid_argument("realize: empty ball");

  std::map<std::string, int> position;
  for (size_t i = 0; i < ball.size(); ++i) {
    auto key = model.evaluate(ball[i]).matrix().key();
    if (!position.emplace(key, static_cast<int>(i)).second)
      throw std::invalid_argument(
          "realize: order is not total (duplicate element in ball)");
  }

  // Left-invariance on the ball: u < v must imply gu < gv whenever both
  // translates land inside the ball.
  for (int g = 0; g < model.generatorCount(); ++g) {
    for (long e : {1L, -1L}) {
      const GroupWord prefix = GroupWord::generator(g, e);
      for (size_t u = 0; u < ball.size(); ++u) {
        for (size_t v = u + 1; v < ball.size(); ++v) {
          auto pu = position.find(model.evaluate(prefix * ball[u]).matrix().key());
          auto pv = position.find(model.evaluate(prefix * ball[v]).matrix().key());
          if (pu == position.end() || pv == position.end()) continue;
          if (pu->second >= pv->second)
            throw std::invalid_argument(
                "realize: order fails left-invariance on the ball (" +
                ball[u].str(model.names()) + " < " + ball[v].str(model.names()) +
                " but translates reverse)");
        }
      }
    }
  }

  DynamicalRealization out;
  out.orderedBall = ball;
  for (size_t i = 0; i < ball.size(); ++i)
    out.points.push_back(Rational(static_cast<long>(i)));

  for (int g = 0; g < model.generatorCount(); ++g) {
    const GroupWord prefix = GroupWord::generator(g, 1);
    std::vector<LinePLMap::Knot> knots;
    for (size_t u = 0; u < ball.size(); ++u) {
      auto image = position.find(model.evaluate(prefix * ball[u]).matrix().key());
      if (image == position.end()) continue;
      knots.push_back({out.points[u], out.points[image->second]});
    }
    if (knots.empty()) {
      out.generatorMaps.push_back(LinePLMap());
      continue;
    }
    out.generatorMaps.push_back(
        LinePLMap(std::move(knots), Rational(1), Rational(1)));
  }
  return out;
}

}  // namespace orderlab
