#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "orderlab/plmap.hpp"
#include "orderlab/word.hpp"

namespace orderlab {

enum class Sign { Negative = -1, Identity = 0, Positive = 1 };

std::string signStr(Sign s);
Sign signFromStr(const std::string& text);

/// Deterministic sign-query interface for a candidate left order. Backed by
/// a GroupModel for element equality. Sessions may be stateful (the greedy
/// adversary commits to answers as it is probed), so replay must re-ask
/// queries in their original order.
class OrderOracle {
 public:
  virtual ~OrderOracle() = default;
  virtual Sign sign(const GroupWord& word) = 0;
  virtual const GroupModel& model() const = 0;
};

struct TranscriptEntry {
  GroupWord word;
  Sign answer;
};

enum class ViolationKind {
  PartitionViolation,
  LeftInvarianceViolation,
  ClosureViolation,
  EvaluatedIdentityContradiction,
};

std::string violationKindStr(ViolationKind kind);

/// p, q certify a < z^p und b < z^q; m > p + q makes -k m^2 + (p+q) m < 0.
struct ObstructionWitness {
  long p = 0;
  long q = 0;
  long m = 0;
  long k = 0;
};

/// Finite, machine-checkable refutation of a candidate order. The core picks
/// transcript entries with orientations (+1 for Positive answers, -1 for
/// Negative); soundness means the oriented words all lie in the claimed
/// positive cone while their ordered product evaluates to the identity
/// matrix, which no genuine left order allows. The alternative form is a
/// single entry whose Identity answer disagrees with its exact evaluation.
struct ViolationCertificate {
  ViolationKind kind = ViolationKind::PartitionViolation;
  std::vector<TranscriptEntry> transcript;

  struct CoreEntry {
    int index;     // into transcript
    int exponent;  // +1 or -1, matching the recorded answer
  };
  std::vector<CoreEntry> core;
  std::optional<int> identityMismatchIndex;
  std::optional<ObstructionWitness> witness;
  std::string note;
};

/// Replays the transcript against a fresh oracle and re-checks the violated
/// axiom instance by exact matrix computation.
struct ReplayReport {
  bool verified = false;
  std::string detail;
};
ReplayReport replayCertificate(const ViolationCertificate& cert,
                               OrderOracle& freshOracle);

/// Transcript-recording wrapper. Watches every answer for partition and
/// word-vs-element inconsistencies and assembles the certificate when one
/// appears.
class OracleSession {
 public:
  explicit OracleSession(OrderOracle& oracle);

  Sign query(const GroupWord& word);
  int lastIndex() const { return static_cast<int>(log_.size()) - 1; }
  const std::vector<TranscriptEntry>& transcript() const { return log_; }
  const GroupModel& model() const { return oracle_->model(); }

  bool hasViolation() const { return pending_.has_value(); }
  ViolationCertificate takeViolation();

  ViolationCertificate makeCertificate(
      ViolationKind kind, std::vector<ViolationCertificate::CoreEntry> core,
      std::string note,
      std::optional<ObstructionWitness> witness = std::nullopt) const;

 private:
  OrderOracle* oracle_;
  std::vector<TranscriptEntry> log_;
  // element key -> first transcript index
  std::unordered_map<std::string, int> firstByElement_;
  std::optional<ViolationCertificate> pending_;
};

/// Positive-cone description: a word predicate with serializable built-in
/// rules, so the CLI can load cones from files.
class PositiveConeSpec {
 public:
  enum class Rule {
    ExponentSum,   // positive iff the total exponent sum is > 0
    AbelianLex,    // lex order on the exponent-sum vector
    EntryLex,      // lex order on listed matrix entries of the evaluation
    EvenLength,    // pseudo-cone: positive iff reduced length is even (and != 0)
    WordList,      // explicit positives plus a default sign
    Oracle,        // membership(w) <=> sign(w) = Positive for a live oracle
  };

  static PositiveConeSpec exponentSum(bool reversed = false);
  static PositiveConeSpec abelianLex(int generatorCount, bool reversed = false);
  static PositiveConeSpec entryLex(std::vector<std::pair<int, int>> positions,
                                   bool reversed = false);
  static PositiveConeSpec evenLength();
  static PositiveConeSpec wordList(std::vector<GroupWord> positives,
                                   Sign defaultSign);

  bool contains(const GroupWord& word, const GroupModel& model) const;

  Rule rule() const { return rule_; }
  bool reversed() const { return reversed_; }
  const std::vector<std::pair<int, int>>& positions() const { return positions_; }

 private:
  friend PositiveConeSpec coneFromOrder(OrderOracle& oracle);
  PositiveConeSpec() = default;
  Rule rule_ = Rule::ExponentSum;
  bool reversed_ = false;
  std::vector<std::pair<int, int>> positions_;
  std::vector<GroupWord> positives_;
  Sign defaultSign_ = Sign::Negative;
  int generatorCount_ = 0;
  OrderOracle* oracle_ = nullptr;
};

/// sign(w) = Positive iff w in cone, Negative iff w^-1 in cone, Identity iff
/// w evaluates to the identity. Defective cones surface as certificates when
/// probed, never as exceptions.
class ConeOracle : public OrderOracle {
 public:
  ConeOracle(PositiveConeSpec cone, GroupModel model);
  Sign sign(const GroupWord& word) override;
  const GroupModel& model() const override { return model_; }
  const PositiveConeSpec& cone() const { return cone_; }

 private:
  PositiveConeSpec cone_;
  GroupModel model_;
};

PositiveConeSpec coneFromOrder(OrderOracle& oracle);

/// Adversarial consistent-by-construction oracle: fresh elements get a
/// seeded coin flip (or a fixed sign in the degenerate modes); later queries
/// of the same element, or of its inverse, stay consistent. AlwaysNegative
/// refuses every witness it can, deferring refutation past any bound.
class GreedyOracle : public OrderOracle {
 public:
  enum class Mode { SeededRandom, AlwaysPositive, AlwaysNegative };

  GreedyOracle(GroupModel model, std::uint64_t seed,
               Mode mode = Mode::SeededRandom);
  Sign sign(const GroupWord& word) override;
  const GroupModel& model() const override { return model_; }

 private:
  GroupModel model_;
  Mode mode_;
  std::mt19937_64 rng_;
  std::unordered_map<std::string, Sign> assigned_;
};

struct UndecidableAtDepth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Order induced by an exact action on the line (tie-breaking by the first
/// moved rational in a fixed enumeration). Generators act by increasing
/// piecewise-linear maps.
class ActionOracle : public OrderOracle {
 public:
  ActionOracle(GroupModel model, std::vector<LinePLMap> actions,
               int enumerationDepth = 4096);
  Sign sign(const GroupWord& word) override;
  const GroupModel& model() const override { return model_; }

  LinePLMap evaluateAction(const GroupWord& word) const;

  /// q_1, q_2, ...: all rationals, enumerated by |p| + q height.
  static Rational enumerationPoint(int index);

 private:
  GroupModel model_;
  std::vector<LinePLMap> actions_;
  int depth_;
  std::vector<Rational> enumCache_;
};

/// Scripted oracle for tests: answers from a fixed word->sign table, with a
/// fallback sign for unlisted words.
class ScriptedOracle : public OrderOracle {
 public:
  ScriptedOracle(GroupModel model,
                 std::vector<std::pair<GroupWord, Sign>> script,
                 std::function<Sign(const GroupWord&)> fallback);
  Sign sign(const GroupWord& word) override;
  const GroupModel& model() const override { return model_; }

 private:
  GroupModel model_;
  std::vector<std::pair<GroupWord, Sign>> script_;
  std::function<Sign(const GroupWord&)> fallback_;
};

struct ConeAxiomReport {
  long partitionChecks = 0;
  long closureChecks = 0;
  bool passed = true;
  std::optional<ViolationCertificate> certificate;
};

/// Verifies the partition and closure axioms of a cone on a ball of words
/// (closed under inversion, containing the identity). Failures come back as
/// replayable certificates.
ConeAxiomReport checkConeAxioms(const PositiveConeSpec& cone,
                                const GroupModel& model,
                                const std::vector<GroupWord>& ball);

}  // namespace orderlab
