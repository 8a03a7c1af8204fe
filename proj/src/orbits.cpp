#include "orderlab/orbits.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace orderlab {

namespace {

std::vector<CircleMap> withInverses(const std::vector<CircleMap>& generators) {
  std::vector<CircleMap> out = generators;
  for (const auto& g : generators) {
    CircleMap inv = g.inverse();
    if (std::find(out.begin(), out.end(), inv) == out.end()) out.push_back(inv);
  }
  return out;
}

/// Closes the orbit of `seed` under `maps`; nullopt when it grows past bound.
std::optional<std::vector<CirclePointValue>> closeOrbit(
    const CirclePointValue& seed, const std::vector<CircleMap>& maps,
    int maxOrbitSize) {
  std::vector<CirclePointValue> points{seed};
  std::deque<CirclePointValue> frontier{seed};
  while (!frontier.empty()) {
    CirclePointValue current = frontier.front();
    frontier.pop_front();
    for (const auto& m : maps) {
      CirclePointValue image = apply(m, current);
      if (std::find(points.begin(), points.end(), image) != points.end())
        continue;
      if (static_cast<int>(points.size()) >= maxOrbitSize) return std::nullopt;
      points.push_back(image);
      frontier.push_back(image);
    }
  }
  return points;
}

std::vector<CirclePointValue> seedPoints(const std::vector<CircleMap>& generators,
                                         int maxWordLength) {
  std::vector<CirclePointValue> seeds;
  auto addSeed = [&](const CirclePointValue& p) {
    if (std::find(seeds.begin(), seeds.end(), p) == seeds.end())
      seeds.push_back(p);
  };
  const bool plCarrier = generators.front().isPL();
  if (plCarrier) {
    addSeed(CirclePointValue(Rational(0)));
    for (const auto& g : generators)
      for (const auto& x : g.pl().knotXs()) addSeed(CirclePointValue(x));
  } else {
    addSeed(CirclePointValue(ProjectivePoint::infinity()));
    addSeed(CirclePointValue(ProjectivePoint(0, 1)));
  }
  // Exact fixed points of short words.
  std::vector<CircleMap> alphabet = withInverses(generators);
  std::vector<CircleMap> words{plCarrier
                                   ? CircleMap(PLCircleHomeo::identity())
                                   : CircleMap(MobiusMap::identity())};
  std::unordered_set<std::string> seen{words[0].key()};
  std::vector<CircleMap> frontier = words;
  const int depth = std::min(maxWordLength, 2);
  for (int d = 0; d < depth; ++d) {
    std::vector<CircleMap> next;
    for (const auto& w : frontier) {
      for (const auto& a : alphabet) {
        CircleMap extended = compose(w, a);
        if (!seen.insert(extended.key()).second) continue;
        next.push_back(extended);
        const CircleFixedPoints fp = fixedPoints(extended);
        for (const auto& r : fp.rationalPoints) addSeed(CirclePointValue(r));
        for (const auto& p : fp.projectivePoints) addSeed(CirclePointValue(p));
        for (const auto& iv : fp.intervals) addSeed(CirclePointValue(iv.first));
      }
    }
    frontier = std::move(next);
  }
  return seeds;
}

}  // namespace

std::optional<FiniteOrbit> finiteOrbitSearch(
    const std::vector<CircleMap>& generators, int maxOrbitSize,
    int maxWordLength) {
  if (generators.empty() || maxOrbitSize < 1 || maxWordLength < 1)
    throw std::invalid_argument("orbit search: bad arguments");
  const std::vector<CircleMap> maps = withInverses(generators);
  std::optional<FiniteOrbit> best;
  for (const auto& seed : seedPoints(generators, maxWordLength)) {
    auto orbit = closeOrbit(seed, maps, maxOrbitSize);
    if (!orbit) continue;
    if (!best || orbit->size() < best->points.size())
      best = FiniteOrbit{seed, std::move(*orbit)};
  }
  return best;
}

HolderResult holderWitness(const std::vector<CircleMap>& generators,
                           int maxWordLength) {
  if (generators.empty() || maxWordLength < 1)
    throw std::invalid_argument("holder: bad arguments");
  bool abelian = true;
  for (size_t i = 0; i < generators.size() && abelian; ++i)
    for (size_t j = i + 1; j < generators.size() && abelian; ++j)
      if (!(compose(generators[i], generators[j]) ==
            compose(generators[j], generators[i])))
        abelian = false;
  if (abelian) return AbelianNotice{};

  // Shortlex breadth-first search over reduced words.
  struct Node {
    CircleMap map;
    GroupWord word;
  };
  const bool plCarrier = generators.front().isPL();
  std::vector<Node> frontier{{plCarrier ? CircleMap(PLCircleHomeo::identity())
                                        : CircleMap(MobiusMap::identity()),
                              GroupWord()}};
  std::unordered_set<std::string> seen{frontier[0].map.key()};
  for (int depth = 0; depth < maxWordLength; ++depth) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      for (size_t g = 0; g < generators.size(); ++g) {
        for (long e : {1L, -1L}) {
          CircleMap extended =
              compose(node.map, e == 1 ? generators[g] : generators[g].inverse());
          GroupWord word = node.word * GroupWord::generator(static_cast<int>(g), e);
          if (!seen.insert(extended.key()).second) continue;
          if (!extended.isIdentity()) {
            CircleFixedPoints fp = fixedPoints(extended);
            if (!fp.empty()) {
              CirclePointValue point = *fp.someExactPoint();
              return HolderWitness{word, point, fp};
            }
          }
          next.push_back({extended, word});
        }
      }
    }
    frontier = std::move(next);
  }
  return WitnessNotFound{maxWordLength};
}

Rational cyclicOrbitSup(const LinePLMap& g, const Rational& x, int index) {
  auto fixed = g.leastFixedPointAtOrAbove(x);
  if (!fixed) throw UnboundedOrbit(index);
  return *fixed;
}

Rational propagateOrbitBound(const std::vector<LinePLMap>& generators,
                             int factorizationDepth) {
  if (generators.empty())
    throw std::invalid_argument("orbit bound: no generators");
  if (factorizationDepth < 0)
    throw std::invalid_argument("orbit bound: negative depth");
  Rational bound(0);
  for (int k = 0; k < factorizationDepth; ++k) {
    const int idx = k % static_cast<int>(generators.size());
    bound = cyclicOrbitSup(generators[idx], bound, idx);
  }
  return bound;
}

}  // namespace orderlab
