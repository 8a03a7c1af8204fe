#pragma once

#include <array>
#include <variant>

#include "orderlab/oracle.hpp"

namespace orderlab {

/// Configuration (a, b, z) with z commuting with a and b and [a, b] = z^k,
/// all verified by exact matrix computation on construction.
struct HeisenbergTriple {
  GroupWord a;
  GroupWord b;
  GroupWord z;
  long k;

  HeisenbergTriple(GroupWord a, GroupWord b, GroupWord z, long k,
                   const GroupModel& model);
};

/// Outcome when only one side of the dichotomy was refuted within the bound:
/// records which of z << a, z << b is still standing.
struct SurvivingBranch {
  enum Side { LeftBranch, RightBranch } side;  // Left: z << a, Right: z << b
  long refutedWitness;  // the p (or q) that killed the other side
  // Transcript index of the first-power query against the surviving side
  // (answered Negative), used for chaining; -1 when the search never ran.
  int chainIndex;
  GroupWord survivorNormalized;  // positive-normalized surviving slot word
  GroupWord zNormalized;
};

struct BoundedInconclusive {
  long witnessBound;
};

using HeisenbergOutcome =
    std::variant<ViolationCertificate, SurvivingBranch, BoundedInconclusive>;

/// Bounded executable form of the two-sided witness search: normalizes signs
/// through oracle queries, hunts p, q <= witnessBound with a < z^p and
/// b < z^q, and on success evaluates the contradiction word
/// (b^-1 z^q)^m (a^-1 z^p)^m b^m a^m with m = p + q + 1 down to a power of z,
/// emitting a replayable certificate.
HeisenbergOutcome heisenbergContradiction(const HeisenbergTriple& triple,
                                          OracleSession& session,
                                          long witnessBound);

/// The six unipotent generators a_1..a_6 with parameter k, plus the verified
/// relation table: [a_i, a_{i+1}] = e and [a_{i-1}, a_{i+1}] = a_i^{s_i k}.
struct WitteSystem {
  long k;
  GroupModel model;            // generators named a1..a6
  std::array<int, 6> signs;    // s_i, indices 0-based
};

WitteSystem buildWitteSystem(long k);

struct WitteStageSummary {
  int stage;                  // 0-based hexagon index
  std::string outcome;        // "certificate" | "left" | "right" | "inconclusive"
};

struct WitteInconclusive {
  long witnessBound;
  std::vector<WitteStageSummary> stages;
};

using WitteOutcome = std::variant<ViolationCertificate, WitteInconclusive>;

/// Runs the hexagon of Heisenberg configurations against the oracle, chains
/// surviving branches, and closes the cycle into a finite certificate. Any
/// oracle either concedes a violation on the queried set or survives to the
/// bound, reported honestly as inconclusive.
WitteOutcome wittePipeline(const WitteSystem& system, OrderOracle& oracle,
                           long witnessBound);

}  // namespace orderlab
