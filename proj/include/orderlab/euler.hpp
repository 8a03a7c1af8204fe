#pragma once

#include <functional>
#include <optional>

#include "orderlab/cochain.hpp"

namespace orderlab {

/// Euler cocycle values z(g, h) over a finite slice of a circle-acting group.
struct EulerCocycleTable {
  GroupContext context;
  std::map<std::pair<int, int>, int> values;

  int at(int g, int h) const;
};

EulerCocycleTable buildEulerTable(const std::vector<CircleMap>& generators,
                                  int ballRadius);

struct MissingTableEntry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CocycleReport {
  long checkedTriples = 0;
  bool holds = true;
  std::optional<std::array<int, 3>> firstFailure;
};

/// z(g1,g2) + z(g1 g2, g3) = z(g1, g2 g3) + z(g2, g3) on every supplied
/// triple of table-domain indices. Throws MissingTableEntry when a needed
/// product falls outside the table's domain.
CocycleReport checkCocycleIdentity(const EulerCocycleTable& table,
                                   const std::vector<std::array<int, 3>>& triples);

/// Same identity checked with z computed on the fly, so products need not
/// stay inside any finite domain.
CocycleReport checkCocycleIdentityDirect(const std::vector<CircleMap>& maps);

struct SearchBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoboundarySearchConfig {
  long stepBudget = 10'000'000;
};

/// Exhaustive search for a bounded integer phi with (delta phi)(g, h) =
/// phi(h) - phi(gh) + phi(g) = z(g, h) on every in-slice pair. Values are
/// tried in the order 0, 1, -1, 2, ..., so the all-zero solution is found
/// first whenever it works. Absence within the bound proves nothing and is
/// reported as plain nullopt.
std::optional<BoundedCochain> coboundarySearch(
    const std::vector<CircleMap>& generators, int ballRadius, long phiBound,
    const CoboundarySearchConfig& config = {});

struct OrbitEscape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FixedPointResult {
  Rational point;       // supremum of the corrected orbit of 0, mod 1
  Rational supremum;    // on the line, before projection
  bool exactlyFixed;    // every corrected generator lift fixes the supremum
  int orbitSize;
};

/// Corrects each lift by phi, iterates the orbit of 0, and returns its
/// supremum (a fixed point of the corrected action when phi is a genuine
/// coboundary). PL carriers only. Throws OrbitEscape when the orbit leaves
/// [-limit, limit].
FixedPointResult fixedPointFromCoboundary(const BoundedCochain& phi,
                                          const GroupContext& context,
                                          int maxIterations = 64,
                                          const Rational& limit = Rational(8));

}  // namespace orderlab
