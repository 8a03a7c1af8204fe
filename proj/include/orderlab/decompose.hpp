#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orderlab/matrix.hpp"

namespace orderlab {

enum class Ring { Integers, Rationals };

/// Ordered factorization into unipotent elementary matrices. The left-to-right
/// product of the factors equals the decomposed matrix exactly.
struct Decomposition {
  std::vector<ElementaryMatrix> factors;
  Ring ring = Ring::Integers;

  int count() const { return static_cast<int>(factors.size()); }
  SpecialLinearElement product(int n) const;
};

struct DecompositionStats {
  int sampleSize = 0;
  std::map<int, int> countHistogram;
  int maxCount = 0;
  Rational meanCount;
};

struct ResourceLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Row-reduction over the rationals using only row additions E_ij(t).
/// For n = 3 the pivoting strategy guarantees count <= 16.
Decomposition decomposeOverField(const SpecialLinearElement& m);

/// Euclidean scheme over the integers: every factor parameter t is an
/// integer. Counts are correct but not uniformly bounded.
Decomposition decomposeOverIntegers(const SpecialLinearElement& m);

/// Deterministic product of wordLength random elementary matrices.
/// Coefficients t are nonzero with |t| <= coeffBound (numerator and
/// denominator bounded for Ring::Rationals).
SpecialLinearElement randomSpecialLinear(int n, Ring ring, int wordLength,
                                         int coeffBound, std::uint64_t seed);

struct MinimalSearchConfig {
  long nodeBudget = 1'000'000;
};

/// Breadth-first search over products of elementary matrices with integer
/// |t| <= coeffBound. Returns a minimal-length factorization (lexicographic
/// factor order breaking ties) or nullopt if none exists within lengthBound.
/// Throws ResourceLimitExceeded when the frontier exceeds the node budget.
std::optional<Decomposition> minimalDecomposition(
    const SpecialLinearElement& m, int coeffBound, int lengthBound,
    const MinimalSearchConfig& config = {});

DecompositionStats decompositionStats(int n, int samples, int wordLength,
                                      int coeffBound, std::uint64_t seed);

}  // namespace orderlab
