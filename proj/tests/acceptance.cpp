// Acceptance suite: one runnable check per shipped guarantee, each printed as
// a single PASS/FAIL line with its runtime budget enforced.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orderlab/decompose.hpp"
#include "orderlab/euler.hpp"
#include "orderlab/navas.hpp"
#include "orderlab/orbits.hpp"
#include "orderlab/witte.hpp"

using namespace orderlab;

namespace {

struct Criterion {
  int id;
  std::string label;
  double budgetSeconds;
  std::function<void(std::ostringstream&)> body;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

// ---- criterion bodies ----

void relationTable(std::ostringstream& detail) {
  long checked = 0;
  for (long k = 1; k <= 5; ++k) {
    WitteSystem system = buildWitteSystem(k);  // verifies on construction
    for (int i = 0; i < 6; ++i) {
      const auto& prev = system.model.generator((i + 5) % 6);
      const auto& self = system.model.generator(i);
      const auto& next = system.model.generator((i + 1) % 6);
      require(commutator(self, next).matrix().isIdentity(),
              "adjacent commutator is not the identity");
      require(commutator(prev, next) == self.pow(system.signs[i] * k),
              "hexagon relation sign mismatch");
      ++checked;
    }
  }
  detail << checked << " relations over k = 1..5, signs recorded";
}

void commutatorPowers(std::ostringstream& detail) {
  const auto a = ElementaryMatrix(3, 1, 2, Rational(1)).element();
  const auto b = ElementaryMatrix(3, 2, 3, Rational(1)).element();
  const auto z = commutator(a, b);
  long checked = 0;
  for (long k = -5; k <= 5; ++k) {
    for (long m = -5; m <= 5; ++m) {
      require(commutator(b.pow(k), a.pow(m)) == z.pow(-k * m),
              "power identity failed at k=" + std::to_string(k) +
                  " m=" + std::to_string(m));
      ++checked;
    }
  }
  detail << checked << " exact identities";
}

void wittePipelineSweep(std::ostringstream& detail) {
  int certificates = 0;
  for (long k : {1L, 2L}) {
    WitteSystem system = buildWitteSystem(k);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      GreedyOracle oracle(system.model, seed);
      WitteOutcome outcome = wittePipeline(system, oracle, 50);
      require(std::holds_alternative<ViolationCertificate>(outcome),
              "inconclusive outcome at k=" + std::to_string(k) +
                  " seed=" + std::to_string(seed));
      GreedyOracle fresh(system.model, seed);
      require(replayCertificate(std::get<ViolationCertificate>(outcome), fresh)
                  .verified,
              "replay failed at k=" + std::to_string(k) +
                  " seed=" + std::to_string(seed));
      ++certificates;
    }
  }
  detail << certificates << " certificates, all replay-verified, "
         << "0 inconclusive";
}

void decompositionRoundTrip(std::ostringstream& detail) {
  std::mt19937_64 seeder(0);
  int maxIntCount = 0;
  for (int sample = 0; sample < 1000; ++sample) {
    auto m = randomSpecialLinear(3, Ring::Integers, 20, 3, seeder());
    auto d = decomposeOverIntegers(m);
    require(d.product(3) == m, "integer round trip failed");
    for (const auto& f : d.factors)
      require(f.t.isInteger(), "non-integer parameter over Z");
    maxIntCount = std::max(maxIntCount, d.count());
  }
  int maxFieldCount = 0;
  for (int sample = 0; sample < 1000; ++sample) {
    auto m = randomSpecialLinear(3, Ring::Rationals, 20, 3, seeder());
    auto d = decomposeOverField(m);
    require(d.product(3) == m, "field round trip failed");
    require(d.count() <= 16, "field count exceeded 16");
    maxFieldCount = std::max(maxFieldCount, d.count());
  }
  detail << "1000+1000 samples bit-exact; max counts: Z " << maxIntCount
         << ", Q " << maxFieldCount << " (<= 16)";
}

void eulerSuite(std::ostringstream& detail) {
  // all reduced rotations p/q with q <= 12
  std::vector<Rational> angles;
  std::vector<CircleMap> maps;
  for (long q = 1; q <= 12; ++q) {
    for (long p = 0; p < q; ++p) {
      Rational r(p, q);
      if (r.denominator() == Int(q)) {
        angles.push_back(r);
        maps.push_back(CircleMap(PLCircleHomeo::rotation(r)));
      }
    }
  }
  long pairs = 0;
  for (size_t i = 0; i < maps.size(); ++i) {
    for (size_t j = 0; j < maps.size(); ++j) {
      const int z = eulerZ(maps[i], maps[j]);
      require(z == 0 || z == 1, "euler value outside {0,1}");
      // independent carry oracle in exact arithmetic
      require(Int(z) == (angles[i] + angles[j]).floor(),
              "euler value disagrees with the carry oracle");
      ++pairs;
    }
  }
  auto report = checkCocycleIdentityDirect(maps);
  require(report.holds, "cocycle identity failed");
  detail << maps.size() << " rotations, " << pairs << " pairs vs carry oracle, "
         << report.checkedTriples << " triples";
}

// Random PL circle homeo fixing 0: knots 0 = x0 < x1 < ... with f(0) = 0.
PLCircleHomeo randomFixingZero(std::mt19937_64& rng) {
  const int interior = 1 + static_cast<int>(rng() % 2);
  std::set<long> xsRaw, ysRaw;
  while (static_cast<int>(xsRaw.size()) < interior)
    xsRaw.insert(1 + static_cast<long>(rng() % 22));
  while (static_cast<int>(ysRaw.size()) < interior)
    ysRaw.insert(1 + static_cast<long>(rng() % 22));
  std::vector<Rational> xs{Rational(0)}, ys{Rational(0)};
  for (long x : xsRaw) xs.emplace_back(x, 24);
  for (long y : ysRaw) ys.emplace_back(y, 24);
  return PLCircleHomeo(xs, ys);
}

void fixedPointActions(std::ostringstream& detail) {
  std::mt19937_64 rng(0);
  for (int action = 0; action < 20; ++action) {
    std::vector<CircleMap> gens{CircleMap(randomFixingZero(rng)),
                                CircleMap(randomFixingZero(rng))};
    GroupContext ctx = GroupContext::fromCircleGenerators(gens, 2);
    for (int g = 0; g < ctx.size(); ++g)
      for (int h = 0; h < ctx.size(); ++h)
        require(eulerZ(ctx.map(g), ctx.map(h)) == 0,
                "euler table not identically zero");
    auto phi = coboundarySearch(gens, 2, 1);
    require(phi.has_value(), "no coboundary found for a fixed-point action");
    require(phi->bound() == 0, "search returned a nonzero phi");
    auto fp = fixedPointFromCoboundary(*phi, ctx);
    require(fp.point == Rational(0), "fixed point not recovered exactly");
    require(fp.exactlyFixed, "recovered point is not exactly fixed");
  }
  detail << "20 actions: zero tables, phi = 0, fixed point 0 exact";
}

void holderProjective(std::ostringstream& detail) {
  std::vector<CircleMap> gens{CircleMap(MobiusMap(0, -1, 1, 0)),
                              CircleMap(MobiusMap(1, 1, 0, 1))};
  auto outcome = holderWitness(gens, 2);
  require(std::holds_alternative<HolderWitness>(outcome),
          "no witness found at word length <= 2");
  const auto& witness = std::get<HolderWitness>(outcome);
  require(witness.word.length() <= 2, "witness word too long");
  // exact verification of the fixed point
  CircleMap element = CircleMap(MobiusMap::identity());
  for (const auto& letter : witness.word.letters()) {
    CircleMap step =
        letter.exp > 0 ? gens[letter.gen] : gens[letter.gen].inverse();
    for (long c = 0; c < std::labs(letter.exp); ++c)
      element = compose(element, step);
  }
  require(!element.isIdentity(), "witness element is the identity");
  require(apply(element, witness.fixedPoint) == witness.fixedPoint,
          "claimed fixed point moves");
  detail << "witness '" << witness.word.str() << "' fixes "
         << witness.fixedPoint.str() << ", length "
         << witness.word.length();
}

// Bump supported on [-1, top]: identity outside, pushes up inside.
LinePLMap bumpGenerator(long top) {
  Rational lo(-1);
  Rational hi(top);
  Rational mid = (lo + hi) / Rational(2);
  Rational lift = (mid + hi) / Rational(2);  // strictly above mid, below hi
  return LinePLMap({{lo, lo}, {mid, lift}, {hi, hi}}, Rational(1), Rational(1));
}

void orbitBoundPropagation(std::ostringstream& detail) {
  std::vector<LinePLMap> gens;
  for (long top = 1; top <= 5; ++top) gens.push_back(bumpGenerator(top));
  const Rational bound = propagateOrbitBound(gens, 5);
  require(bound == Rational(5), "propagated bound is not 5");

  // exhaustive sampling: words of length <= 6 over generators and inverses
  std::vector<LinePLMap> alphabet = gens;
  for (const auto& g : gens) alphabet.push_back(g.inverse());
  std::set<std::string> seen;
  std::vector<Rational> frontier{Rational(0)};
  seen.insert(Rational(0).str());
  Rational maxSeen(0);
  long evaluated = 0;
  for (int depth = 0; depth < 6; ++depth) {
    std::vector<Rational> next;
    for (const auto& x : frontier) {
      for (const auto& g : alphabet) {
        Rational y = g.eval(x);
        ++evaluated;
        if (y > maxSeen) maxSeen = y;
        require(y <= bound, "orbit sample exceeded the propagated bound");
        if (seen.insert(y.str()).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  detail << "bound 5 at depth 5; " << evaluated
         << " word evaluations, orbit max " << maxSeen.str();
}

void navasProbe(std::ostringstream& detail) {
  const auto schedule = refinementSchedule(256, 1.0 / 64, 5);
  double worstRatio = 1.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g = SmoothCircleMap::randomSmooth(seed);
    auto report = boundednessProbe(g, schedule);
    require(report.finalRatioSup >= 0.8 && report.finalRatioSup <= 1.25,
            "smooth map " + std::to_string(seed) + " failed to stabilize: " +
                std::to_string(report.finalRatioSup));
    worstRatio = std::max(worstRatio, report.finalRatioSup);
  }
  SmoothCircleMap::Rough rough;
  rough.alpha = 1.3;
  rough.center = 0.25;
  rough.amplitude = 0.05;
  rough.radius = 0.2;
  SmoothCircleMap roughMap({0.01}, {0.005}, rough);
  auto report = boundednessProbe(roughMap, schedule);
  require(report.growthFactorSup >= 2.0,
          "rough fixture grew only " + std::to_string(report.growthFactorSup));
  detail << "5 smooth maps stabilized (worst final ratio "
         << std::fixed << worstRatio << "); rough alpha=1.3 grew "
         << report.growthFactorSup << "x";
}

void rightActionCheck(std::ostringstream& detail) {
  std::mt19937_64 rng(0);
  auto uni = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  long points = 0;
  for (int pair = 0; pair < 10; ++pair) {
    auto g = SmoothCircleMap::randomSmooth(1000 + pair);
    auto h = SmoothCircleMap::randomSmooth(2000 + pair);
    KernelFn staged = actOnKernel(actOnKernel(singularKernel, g), h);
    KernelFn direct = [&](double x, double y) {
      const double hx = h.eval(x), hy = h.eval(y);
      const double value = singularKernel(g.eval(hx), g.eval(hy));
      const double der = g.derivative(hx) * h.derivative(x) *
                         g.derivative(hy) * h.derivative(y);
      return value * std::sqrt(der);
    };
    for (int s = 0; s < 1000; ++s) {
      const double x = uni();
      const double y = uni();
      if (circleDist(x - y) < 1e-9) continue;
      const double a = staged(x, y);
      const double b = direct(x, y);
      const double scale = std::max(std::fabs(a), std::fabs(b));
      require(scale == 0 || std::fabs(a - b) / scale < 1e-10,
              "right-action identity exceeded 1e-10 relative error");
      ++points;
    }
  }
  detail << points << " random points across 10 map pairs within 1e-10";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "hexagon relation table, k = 1..5", 1.0, relationTable},
      {2, "commutator power identity on the Heisenberg group", 1.0,
       commutatorPowers},
      {3, "pipeline refutes greedy adversaries (seeds 0-99, k = 1, 2)", 60.0,
       wittePipelineSweep},
      {4, "decomposition round-trips, field count <= 16", 30.0,
       decompositionRoundTrip},
      {5, "Euler cocycle vs carry oracle on rotations with q <= 12", 5.0,
       eulerSuite},
      {6, "fixed-point actions: zero tables, phi = 0, exact recovery", 10.0,
       fixedPointActions},
      {7, "projective fixed-point witness at word length <= 2", 1.0,
       holderProjective},
      {8, "orbit bound propagation with exhaustive sampling", 10.0,
       orbitBoundPropagation},
      {9, "kernel probe: smooth maps stabilize, rough map grows", 120.0,
       navasProbe},
      {10, "half-density right action within 1e-10", 10.0, rightActionCheck},
  };

  int failures = 0;
  for (auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    std::string error;
    try {
      criterion.body(detail);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool pass = error.empty();
    if (pass && seconds > criterion.budgetSeconds) {
      pass = false;
      error = "runtime " + std::to_string(seconds) + "s exceeded budget of " +
              std::to_string(criterion.budgetSeconds) + "s";
    }
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s — %s (%.2fs)\n",
                pass ? "PASS" : "FAIL", criterion.id, criterion.label.c_str(),
                pass ? detail.str().c_str() : error.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
