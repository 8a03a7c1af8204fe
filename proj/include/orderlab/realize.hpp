#pragma once

#include "orderlab/oracle.hpp"

namespace orderlab {

/// Order-embedding of a finite ordered ball into Q, with the induced partial
/// piecewise-linear action of each generator on the embedded points.
struct DynamicalRealization {
  std::vector<GroupWord> orderedBall;   // ascending in the given order
  std::vector<Rational> points;         // image of each ball word
  std::vector<LinePLMap> generatorMaps; // one partial action per generator,
                                        // extended affinely between knots
};

/// The input ball is given already sorted by the candidate order. Verifies
/// totality (distinct elements) and left-invariance on the ball, then embeds
/// ball position i at the rational i and interpolates the generator actions.
DynamicalRealization dynamicalRealization(const std::vector<GroupWord>& ball,
                                          const GroupModel& model);

}  // namespace orderlab
