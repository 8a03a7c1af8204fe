#include <doctest.h>

#include <map>

#include "orderlab/witte.hpp"

using namespace orderlab;

namespace {

// Integer Heisenberg model: a = E12(1), b = E23(1), z = E13(1) = [a, b].
GroupModel heisenbergModel() {
  return GroupModel({"a", "b", "z"},
                    {ElementaryMatrix(3, 1, 2, Rational(1)).element(),
                     ElementaryMatrix(3, 2, 3, Rational(1)).element(),
                     ElementaryMatrix(3, 1, 3, Rational(1)).element()});
}

HeisenbergTriple heisenbergTriple(const GroupModel& model) {
  return HeisenbergTriple(GroupWord::generator(0), GroupWord::generator(1),
                          GroupWord::generator(2), 1, model);
}

}  // namespace

TEST_CASE("witte system verifies the hexagon relations for k = 1..5") {
  for (long k = 1; k <= 5; ++k) {
    WitteSystem system = buildWitteSystem(k);
    // independent re-check by direct multiplication
    for (int i = 0; i < 6; ++i) {
      const auto& prev = system.model.generator((i + 5) % 6);
      const auto& self = system.model.generator(i);
      const auto& next = system.model.generator((i + 1) % 6);
      CHECK((self.inverse() * next.inverse() * self * next)
                .matrix()
                .isIdentity());
      SpecialLinearElement direct =
          prev.inverse() * next.inverse() * prev * next;
      CHECK(direct == self.pow(system.signs[i] * k));
    }
    // the recorded sign pattern alternates around the hexagon
    for (int i = 0; i < 6; ++i)
      CHECK(system.signs[i] == (i % 2 == 0 ? -1 : 1));
  }
}

TEST_CASE("triple construction rejects broken configurations") {
  auto model = heisenbergModel();
  CHECK_THROWS_AS(HeisenbergTriple(GroupWord::generator(0),
                                   GroupWord::generator(1),
                                   GroupWord::generator(2), 2, model),
                  std::invalid_argument);  // [a,b] = z^1, not z^2
  CHECK_THROWS_AS(HeisenbergTriple(GroupWord::generator(2),
                                   GroupWord::generator(1),
                                   GroupWord::generator(0), 1, model),
                  std::invalid_argument);  // z fails to be central
}

TEST_CASE("a genuine heisenberg order never produces a certificate") {
  auto model = heisenbergModel();
  // Lex on the entries (1,2), (2,3), (1,3) is a genuine left order on the
  // group. In it both z << a and z << b hold, so the bounded search refutes
  // neither side.
  ConeOracle oracle(
      PositiveConeSpec::entryLex({{1, 2}, {2, 3}, {1, 3}}), model);
  OracleSession session(oracle);
  auto outcome = heisenbergContradiction(heisenbergTriple(model), session, 20);
  REQUIRE(std::holds_alternative<BoundedInconclusive>(outcome));
  CHECK(std::get<BoundedInconclusive>(outcome).witnessBound == 20);
}

TEST_CASE("a one-sided oracle leaves the left branch standing") {
  auto model = heisenbergModel();
  // Scanning entries in the order (1,2), (1,3), (2,3) answers every
  // b-side probe positively (q = 1 witness) while refusing the a-side,
  // so only z << a survives.
  ConeOracle oracle(
      PositiveConeSpec::entryLex({{1, 2}, {1, 3}, {2, 3}}), model);
  OracleSession session(oracle);
  auto outcome = heisenbergContradiction(heisenbergTriple(model), session, 20);
  REQUIRE(std::holds_alternative<SurvivingBranch>(outcome));
  const auto& branch = std::get<SurvivingBranch>(outcome);
  CHECK(branch.side == SurvivingBranch::LeftBranch);
  CHECK(branch.refutedWitness == 1);
}

TEST_CASE("the all-positive oracle concedes p = q = 1 and m = 3") {
  auto model = heisenbergModel();
  GreedyOracle oracle(model, 0, GreedyOracle::Mode::AlwaysPositive);
  OracleSession session(oracle);
  auto outcome = heisenbergContradiction(heisenbergTriple(model), session, 20);
  REQUIRE(std::holds_alternative<ViolationCertificate>(outcome));
  const auto& cert = std::get<ViolationCertificate>(outcome);
  CHECK(cert.kind == ViolationKind::EvaluatedIdentityContradiction);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->p == 1);
  CHECK(cert.witness->q == 1);
  CHECK(cert.witness->m == 3);
  CHECK(cert.witness->k == 1);
  // exponent -k m^2 + (p+q) m = -9 + 6 = -3: the core must append z^3
  CHECK(-cert.witness->k * cert.witness->m * cert.witness->m +
            (cert.witness->p + cert.witness->q) * cert.witness->m ==
        -3);

  GreedyOracle fresh(model, 0, GreedyOracle::Mode::AlwaysPositive);
  auto replay = replayCertificate(cert, fresh);
  CHECK(replay.verified);
}

TEST_CASE("even the witness-refusing adversary is cornered by the hexagon") {
  // Adjacent stages' first-power probes are inverse pairs, so refusing every
  // witness at one stage forces witnesses at its neighbors; by the last
  // stage both sides are forced and the contradiction word materializes.
  WitteSystem system = buildWitteSystem(1);
  GreedyOracle oracle(system.model, 0, GreedyOracle::Mode::AlwaysNegative);
  auto outcome = wittePipeline(system, oracle, 10);
  REQUIRE(std::holds_alternative<ViolationCertificate>(outcome));
  GreedyOracle fresh(system.model, 0, GreedyOracle::Mode::AlwaysNegative);
  CHECK(replayCertificate(std::get<ViolationCertificate>(outcome), fresh)
            .verified);
}

TEST_CASE("greedy adversaries are refuted with replayable certificates") {
  for (long k : {1L, 2L}) {
    WitteSystem system = buildWitteSystem(k);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GreedyOracle oracle(system.model, seed);
      auto outcome = wittePipeline(system, oracle, 50);
      REQUIRE(std::holds_alternative<ViolationCertificate>(outcome));
      const auto& cert = std::get<ViolationCertificate>(outcome);
      GreedyOracle fresh(system.model, seed);
      auto replay = replayCertificate(cert, fresh);
      CHECK(replay.verified);
    }
  }
}

TEST_CASE("certificates survive tampering checks") {
  WitteSystem system = buildWitteSystem(1);
  GreedyOracle oracle(system.model, 3);
  auto outcome = wittePipeline(system, oracle, 50);
  REQUIRE(std::holds_alternative<ViolationCertificate>(outcome));
  auto cert = std::get<ViolationCertificate>(outcome);

  // flip a recorded answer: replay must fail
  auto tamperedAnswers = cert;
  REQUIRE_FALSE(tamperedAnswers.transcript.empty());
  tamperedAnswers.transcript[0].answer =
      tamperedAnswers.transcript[0].answer == Sign::Positive ? Sign::Negative
                                                             : Sign::Positive;
  GreedyOracle fresh1(system.model, 3);
  CHECK_FALSE(replayCertificate(tamperedAnswers, fresh1).verified);

  // drop a core entry: the product no longer telescopes to the identity
  if (cert.core.size() > 1) {
    auto tamperedCore = cert;
    tamperedCore.core.pop_back();
    GreedyOracle fresh2(system.model, 3);
    CHECK_FALSE(replayCertificate(tamperedCore, fresh2).verified);
  }
}

TEST_CASE("degenerate all-positive oracles fall to the pair check") {
  auto model = heisenbergModel();
  ScriptedOracle oracle(model, {}, [](const GroupWord& w) {
    return w.empty() ? Sign::Identity : Sign::Positive;
  });
  OracleSession session(oracle);
  auto outcome = heisenbergContradiction(heisenbergTriple(model), session, 10);
  REQUIRE(std::holds_alternative<ViolationCertificate>(outcome));
  const auto& cert = std::get<ViolationCertificate>(outcome);
  CHECK(cert.kind == ViolationKind::PartitionViolation);
  ScriptedOracle fresh(model, {}, [](const GroupWord& w) {
    return w.empty() ? Sign::Identity : Sign::Positive;
  });
  CHECK(replayCertificate(cert, fresh).verified);
}

namespace {

// Deterministic oracle that keeps inverse pairs consistent but flips its
// answer when the same element is queried again: the sign fails to be
// well-defined on elements, which is how left invariance breaks at the
// word level.
class FlipFlopOracle : public OrderOracle {
 public:
  explicit FlipFlopOracle(GroupModel model) : model_(std::move(model)) {}
  Sign sign(const GroupWord& word) override {
    if (model_.isIdentity(word)) return Sign::Identity;
    const SpecialLinearElement value = model_.evaluate(word);
    const std::string key = value.matrix().key();
    if (auto it = first_.find(key); it != first_.end())
      return it->second == Sign::Positive ? Sign::Negative : Sign::Positive;
    const std::string invKey = value.inverse().matrix().key();
    Sign answer = Sign::Negative;
    if (auto it = first_.find(invKey); it != first_.end())
      answer = it->second == Sign::Positive ? Sign::Negative : Sign::Positive;
    first_[key] = answer;
    return answer;
  }
  const GroupModel& model() const override { return model_; }

 private:
  GroupModel model_;
  std::map<std::string, Sign> first_;
};

}  // namespace

TEST_CASE("sign instability across translates is caught as left invariance") {
  WitteSystem system = buildWitteSystem(1);
  FlipFlopOracle oracle(system.model);
  auto outcome = wittePipeline(system, oracle, 10);
  REQUIRE(std::holds_alternative<ViolationCertificate>(outcome));
  const auto& cert = std::get<ViolationCertificate>(outcome);
  CHECK(cert.kind == ViolationKind::LeftInvarianceViolation);
  FlipFlopOracle fresh(system.model);
  CHECK(replayCertificate(cert, fresh).verified);
}

namespace {

// Oracle committing every stage to the forward branch: generator powers are
// signed by exponent, the backward first-power probe gets a witness, the
// forward one is refused. All answers are consistent on inverse pairs, so
// the six surviving branches close the hexagon and the pipeline must fall
// back to chaining them into a cycle certificate.
class ForwardCycleOracle : public OrderOracle {
 public:
  explicit ForwardCycleOracle(GroupModel model) : model_(std::move(model)) {}
  Sign sign(const GroupWord& word) override {
    if (word.empty()) return Sign::Identity;
    const auto& letters = word.letters();
    if (letters.size() == 1)
      return letters[0].exp > 0 ? Sign::Positive : Sign::Negative;
    if (letters.size() == 2) {
      // probe form a_j^-1 a_i^p: positive exactly when j = i - 1 (mod 6)
      if (letters[0].exp == -1 && letters[1].exp >= 1) {
        const int j = letters[0].gen;
        const int i = letters[1].gen;
        return j == (i + 5) % 6 ? Sign::Positive : Sign::Negative;
      }
      // inverse form a_i^-p a_j: the opposite of the probe above
      if (letters[0].exp <= -1 && letters[1].exp == 1) {
        const int i = letters[0].gen;
        const int j = letters[1].gen;
        return j == (i + 5) % 6 ? Sign::Negative : Sign::Positive;
      }
    }
    throw std::logic_error("unexpected query: " + word.str(model_.names()));
  }
  const GroupModel& model() const override { return model_; }

 private:
  GroupModel model_;
};

}  // namespace

TEST_CASE("six surviving branches close into a cycle certificate") {
  for (long k : {1L, 3L}) {
    WitteSystem system = buildWitteSystem(k);
    ForwardCycleOracle oracle(system.model);
    auto outcome = wittePipeline(system, oracle, 8);
    REQUIRE(std::holds_alternative<ViolationCertificate>(outcome));
    const auto& cert = std::get<ViolationCertificate>(outcome);
    CHECK(cert.kind == ViolationKind::LeftInvarianceViolation);
    CHECK_FALSE(cert.witness.has_value());
    CHECK(cert.core.size() == 6);  // the full hexagon
    ForwardCycleOracle fresh(system.model);
    CHECK(replayCertificate(cert, fresh).verified);
  }
}

TEST_CASE("pipeline rejects oracles over the wrong generators") {
  WitteSystem system = buildWitteSystem(2);
  GreedyOracle oracle(heisenbergModel(), 0);
  CHECK_THROWS_AS(wittePipeline(system, oracle, 10), std::invalid_argument);
}
