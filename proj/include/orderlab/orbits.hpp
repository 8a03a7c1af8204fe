#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "orderlab/circlemap.hpp"
#include "orderlab/word.hpp"

namespace orderlab {

struct FiniteOrbit {
  CirclePointValue seed;
  std::vector<CirclePointValue> points;  // closed under every generator
};

/// Hunts for a finite orbit: seeds from 0 (or infinity), generator knots and
/// exact fixed points of short words, then closes each seed's orbit under all
/// generators and inverses. Exact verification, no floating point.
std::optional<FiniteOrbit> finiteOrbitSearch(
    const std::vector<CircleMap>& generators, int maxOrbitSize,
    int maxWordLength);

struct HolderWitness {
  GroupWord word;
  CirclePointValue fixedPoint;
  CircleFixedPoints allFixedPoints;
};
struct AbelianNotice {};
struct WitnessNotFound {
  int maxWordLength;
};
using HolderResult = std::variant<HolderWitness, AbelianNotice, WitnessNotFound>;

/// Searches words (shortlex over generators and inverses) for a nonidentity
/// element with a fixed point. Abelian input is reported, not fatal.
HolderResult holderWitness(const std::vector<CircleMap>& generators,
                           int maxWordLength);

struct UnboundedOrbit : std::runtime_error {
  int generatorIndex;
  explicit UnboundedOrbit(int index)
      : std::runtime_error("orbit of generator " + std::to_string(index) +
                           " is unbounded above"),
        generatorIndex(index) {}
};

/// sup of the cyclic orbit <g>.x: x itself when fixed, otherwise the least
/// fixed point of g above x. Throws UnboundedOrbit when none exists.
Rational cyclicOrbitSup(const LinePLMap& g, const Rational& x, int index = 0);

/// Iterates x_k = sup(<g_k> . x_{k-1}) starting at x_0 = 0, cycling through
/// the generators for factorizationDepth steps; the result bounds the orbit
/// of 0 under the product set <g_depth> ... <g_1>.
Rational propagateOrbitBound(const std::vector<LinePLMap>& generators,
                             int factorizationDepth);

}  // namespace orderlab
