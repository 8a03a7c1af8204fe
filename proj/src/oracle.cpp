#include "orderlab/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orderlab {

std::string signStr(Sign s) {
  switch (s) {
    case Sign::Negative: return "-";
    case Sign::Identity: return "0";
    case Sign::Positive: return "+";
  }
  return "?";
}

Sign signFromStr(const std::string& text) {
  if (text == "-" || text == "negative") return Sign::Negative;
  if (text == "0" || text == "identity") return Sign::Identity;
  if (text == "+" || text == "positive") return Sign::Positive;
  throw std::invalid_argument("sign: cannot parse '" + text + "'");
}

std::string violationKindStr(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::PartitionViolation: return "PartitionViolation";
    case ViolationKind::LeftInvarianceViolation:
      return "LeftInvarianceViolation";
    case ViolationKind::ClosureViolation: return "ClosureViolation";
    case ViolationKind::EvaluatedIdentityContradiction:
      return "EvaluatedIdentityContradiction";
  }
  return "?";
}

OracleSession::OracleSession(OrderOracle& oracle) : oracle_(&oracle) {}

Sign OracleSession::query(const GroupWord& word) {
  const Sign answer = oracle_->sign(word);
  log_.push_back({word, answer});
  const int idx = lastIndex();
  if (pending_) return answer;

  const SpecialLinearElement value = oracle_->model().evaluate(word);
  const bool isId = value.matrix().isIdentity();
  // Partition totality: the Identity answer must match exact evaluation.
  if (isId != (answer == Sign::Identity)) {
    ViolationCertificate cert = makeCertificate(
        ViolationKind::PartitionViolation, {},
        "answer '" + signStr(answer) + "' disagrees with the exact evaluation of " +
            word.str(oracle_->model().names()));
    cert.identityMismatchIndex = idx;
    pending_ = std::move(cert);
    return answer;
  }
  if (isId) return answer;

  const std::string key = value.matrix().key();
  const std::string invKey = value.inverse().matrix().key();
  if (auto it = firstByElement_.find(key); it != firstByElement_.end()) {
    const Sign prior = log_[it->second].answer;
    if (prior != answer) {
      // Same group element, two different answers: the sign fails to be
      // well-defined on elements, so left-invariant comparisons clash.
      pending_ = makeCertificate(
          ViolationKind::LeftInvarianceViolation,
          {{it->second, prior == Sign::Positive ? 1 : -1},
           {idx, answer == Sign::Positive ? 1 : -1}},
          "words " + log_[it->second].word.str(oracle_->model().names()) +
              " and " + word.str(oracle_->model().names()) +
              " evaluate to the same element but received different signs");
      return answer;
    }
  } else {
    firstByElement_[key] = idx;
  }
  if (auto it = firstByElement_.find(invKey); it != firstByElement_.end()) {
    const Sign prior = log_[it->second].answer;
    if (prior == answer) {
      // w and w^-1 share a sign: both orientations in the cone.
      pending_ = makeCertificate(
          ViolationKind::PartitionViolation,
          {{it->second, prior == Sign::Positive ? 1 : -1},
           {idx, answer == Sign::Positive ? 1 : -1}},
          "inverse pair " + log_[it->second].word.str(oracle_->model().names()) +
              ", " + word.str(oracle_->model().names()) +
              " answered with the same sign");
      return answer;
    }
  }
  return answer;
}

ViolationCertificate OracleSession::takeViolation() {
  if (!pending_) throw std::logic_error("session: no pending violation");
  ViolationCertificate cert = std::move(*pending_);
  pending_.reset();
  return cert;
}

ViolationCertificate OracleSession::makeCertificate(
    ViolationKind kind, std::vector<ViolationCertificate::CoreEntry> core,
    std::string note, std::optional<ObstructionWitness> witness) const {
  ViolationCertificate cert;
  cert.kind = kind;
  cert.transcript = log_;
  cert.core = std::move(core);
  cert.note = std::move(note);
  cert.witness = witness;
  return cert;
}

ReplayReport replayCertificate(const ViolationCertificate& cert,
                               OrderOracle& freshOracle) {
  const GroupModel& model = freshOracle.model();
  for (size_t i = 0; i < cert.transcript.size(); ++i) {
    const Sign answer = freshOracle.sign(cert.transcript[i].word);
    if (answer != cert.transcript[i].answer)
      return {false, "transcript answer " + std::to_string(i) +
                         " not reproduced: got " + signStr(answer) +
                         ", recorded " + signStr(cert.transcript[i].answer)};
  }
  if (cert.identityMismatchIndex) {
    const auto& entry = cert.transcript.at(*cert.identityMismatchIndex);
    const bool isId = model.evaluate(entry.word).matrix().isIdentity();
    if (isId == (entry.answer == Sign::Identity))
      return {false, "identity mismatch does not reproduce"};
    return {true, "identity/evaluation mismatch confirmed"};
  }
  if (cert.core.empty()) return {false, "certificate has no core"};
  SpecialLinearElement product = SpecialLinearElement::identity(model.dim());
  for (const auto& [index, exponent] : cert.core) {
    const auto& entry = cert.transcript.at(index);
    if (exponent != 1 && exponent != -1)
      return {false, "core exponent must be +-1"};
    if (entry.answer == Sign::Identity)
      return {false, "core references an Identity answer"};
    const bool wantPositive = exponent == 1;
    if (wantPositive != (entry.answer == Sign::Positive))
      return {false, "core orientation disagrees with the recorded answer"};
    SpecialLinearElement value = model.evaluate(entry.word);
    product = product * (exponent == 1 ? value : value.inverse());
  }
  if (!product.matrix().isIdentity())
    return {false, "core product does not evaluate to the identity"};
  return {true, "cone-positive product evaluates to the identity"};
}

PositiveConeSpec PositiveConeSpec::exponentSum(bool reversed) {
  PositiveConeSpec spec;
  spec.rule_ = Rule::ExponentSum;
  spec.reversed_ = reversed;
  return spec;
}

PositiveConeSpec PositiveConeSpec::abelianLex(int generatorCount, bool reversed) {
  PositiveConeSpec spec;
  spec.rule_ = Rule::AbelianLex;
  spec.reversed_ = reversed;
  spec.generatorCount_ = generatorCount;
  return spec;
}

PositiveConeSpec PositiveConeSpec::entryLex(
    std::vector<std::pair<int, int>> positions, bool reversed) {
  PositiveConeSpec spec;
  spec.rule_ = Rule::EntryLex;
  spec.reversed_ = reversed;
  spec.positions_ = std::move(positions);
  return spec;
}

PositiveConeSpec PositiveConeSpec::evenLength() {
  PositiveConeSpec spec;
  spec.rule_ = Rule::EvenLength;
  return spec;
}

PositiveConeSpec PositiveConeSpec::wordList(std::vector<GroupWord> positives,
                                            Sign defaultSign) {
  PositiveConeSpec spec;
  spec.rule_ = Rule::WordList;
  spec.positives_ = std::move(positives);
  spec.defaultSign_ = defaultSign;
  return spec;
}

bool PositiveConeSpec::contains(const GroupWord& word,
                                const GroupModel& model) const {
  bool positive = false;
  switch (rule_) {
    case Rule::ExponentSum: {
      long sum = 0;
      for (const auto& l : word.letters()) sum += l.exp;
      positive = sum > 0;
      break;
    }
    case Rule::AbelianLex: {
      std::vector<long> sums(generatorCount_ > 0 ? generatorCount_
                                                 : model.generatorCount(),
                             0);
      for (const auto& l : word.letters()) sums.at(l.gen) += l.exp;
      for (long s : sums) {
        if (s != 0) {
          positive = s > 0;
          break;
        }
      }
      break;
    }
    case Rule::EntryLex: {
      const SquareMatrix m = model.evaluate(word).matrix();
      for (const auto& [i, j] : positions_) {
        const Rational diff =
            m.at(i - 1, j - 1) - (i == j ? Rational(1) : Rational(0));
        if (!diff.isZero()) {
          positive = diff.signum() > 0;
          break;
        }
      }
      break;
    }
    case Rule::EvenLength: {
      const long len = word.length();
      positive = len != 0 && len % 2 == 0;
      break;
    }
    case Rule::WordList: {
      const SpecialLinearElement value = model.evaluate(word);
      bool listed = false;
      for (const auto& w : positives_) {
        if (model.evaluate(w) == value) {
          listed = true;
          break;
        }
      }
      positive = listed || (defaultSign_ == Sign::Positive &&
                            !value.matrix().isIdentity());
      break;
    }
    case Rule::Oracle:
      positive = oracle_ != nullptr && oracle_->sign(word) == Sign::Positive;
      break;
  }
  return reversed_ ? !positive && !model.isIdentity(word) : positive;
}

ConeOracle::ConeOracle(PositiveConeSpec cone, GroupModel model)
    : cone_(std::move(cone)), model_(std::move(model)) {}

Sign ConeOracle::sign(const GroupWord& word) {
  if (model_.isIdentity(word)) return Sign::Identity;
  if (cone_.contains(word, model_)) return Sign::Positive;
  if (cone_.contains(word.inverse(), model_)) return Sign::Negative;
  return Sign::Identity;  // defective cone; the session guard will object
}

PositiveConeSpec coneFromOrder(OrderOracle& oracle) {
  PositiveConeSpec spec;
  spec.rule_ = PositiveConeSpec::Rule::Oracle;
  spec.oracle_ = &oracle;
  return spec;
}

GreedyOracle::GreedyOracle(GroupModel model, std::uint64_t seed, Mode mode)
    : model_(std::move(model)), mode_(mode), rng_(seed) {}

Sign GreedyOracle::sign(const GroupWord& word) {
  const SpecialLinearElement value = model_.evaluate(word);
  if (value.matrix().isIdentity()) return Sign::Identity;
  const std::string key = value.matrix().key();
  if (auto it = assigned_.find(key); it != assigned_.end()) return it->second;
  const std::string invKey = value.inverse().matrix().key();
  Sign answer;
  if (auto it = assigned_.find(invKey); it != assigned_.end()) {
    answer = it->second == Sign::Positive ? Sign::Negative : Sign::Positive;
  } else if (mode_ == Mode::AlwaysPositive) {
    answer = Sign::Positive;
  } else if (mode_ == Mode::AlwaysNegative) {
    answer = Sign::Negative;
  } else {
    answer = (rng_() & 1) != 0 ? Sign::Positive : Sign::Negative;
  }
  assigned_[key] = answer;
  return answer;
}

ActionOracle::ActionOracle(GroupModel model, std::vector<LinePLMap> actions,
                           int enumerationDepth)
    : model_(std::move(model)), actions_(std::move(actions)),
      depth_(enumerationDepth) {
  if (static_cast<int>(actions_.size()) != model_.generatorCount())
    throw std::invalid_argument("action oracle: one line map per generator");
}

LinePLMap ActionOracle::evaluateAction(const GroupWord& word) const {
  LinePLMap acc;  // identity
  for (const auto& l : word.letters()) {
    LinePLMap step = actions_.at(l.gen);
    if (l.exp < 0) step = step.inverse();
    const long count = l.exp < 0 ? -l.exp : l.exp;
    for (long i = 0; i < count; ++i) acc = compose(step, acc);
  }
  return acc;
}

Rational ActionOracle::enumerationPoint(int index) {
  // Height order: for h = 1, 2, ...: all reduced p/q with |p| + q = h,
  // numerators ascending.
  int h = 1;
  int seen = 0;
  for (;;) {
    for (long p = -(h - 1); p <= h - 1; ++p) {
      const long q = h - (p < 0 ? -p : p);
      if (q < 1) continue;
      Rational r{Int(p), Int(q)};
      if (r.numerator() != Int(p) || r.denominator() != Int(q)) continue;  // not reduced
      if (seen++ == index) return r;
    }
    ++h;
  }
}

Sign ActionOracle::sign(const GroupWord& word) {
  const LinePLMap action = evaluateAction(word);
  if (action.isIdentity()) return Sign::Identity;
  for (int i = 0; i < depth_; ++i) {
    if (i >= static_cast<int>(enumCache_.size()))
      enumCache_.push_back(enumerationPoint(i));
    const Rational& q = enumCache_[i];
    const Rational image = action.eval(q);
    if (image != q) return image > q ? Sign::Positive : Sign::Negative;
  }
  throw UndecidableAtDepth("action oracle: word fixes the first " +
                           std::to_string(depth_) + " enumeration points");
}

ScriptedOracle::ScriptedOracle(GroupModel model,
                               std::vector<std::pair<GroupWord, Sign>> script,
                               std::function<Sign(const GroupWord&)> fallback)
    : model_(std::move(model)), script_(std::move(script)),
      fallback_(std::move(fallback)) {}

Sign ScriptedOracle::sign(const GroupWord& word) {
  for (const auto& [w, s] : script_) {
    if (w == word) return s;
  }
  return fallback_(word);
}

ConeAxiomReport checkConeAxioms(const PositiveConeSpec& cone,
                                const GroupModel& model,
                                const std::vector<GroupWord>& ball) {
  ConeAxiomReport report;
  ConeOracle oracle(cone, model);
  OracleSession session(oracle);

  // Ball precondition: contains the identity, closed under inversion.
  bool hasIdentity = false;
  for (const auto& w : ball)
    if (model.isIdentity(w)) hasIdentity = true;
  if (!hasIdentity)
    throw std::invalid_argument("cone check: ball lacks the identity");

  auto fail = [&](ViolationCertificate cert) {
    report.passed = false;
    report.certificate = std::move(cert);
    return report;
  };

  // Partition: exactly one of (w in P, w = e, w^-1 in P) for each ball word.
  for (const auto& w : ball) {
    session.query(w);
    ++report.partitionChecks;
    if (session.hasViolation()) return fail(session.takeViolation());
    session.query(w.inverse());
    ++report.partitionChecks;
    if (session.hasViolation()) return fail(session.takeViolation());
  }

  // Closure: positives multiply to positives while staying in the ball.
  std::vector<std::string> ballKeys;
  ballKeys.reserve(ball.size());
  for (const auto& w : ball)
    ballKeys.push_back(model.evaluate(w).matrix().key());
  std::vector<int> positives;
  for (size_t i = 0; i < ball.size(); ++i) {
    if (cone.contains(ball[i], model))
      positives.push_back(static_cast<int>(i));
  }
  for (int ui : positives) {
    for (int vi : positives) {
      const GroupWord uv = ball[ui] * ball[vi];
      const std::string key = model.evaluate(uv).matrix().key();
      if (std::find(ballKeys.begin(), ballKeys.end(), key) == ballKeys.end())
        continue;
      ++report.closureChecks;
      const Sign su = session.query(ball[ui]);
      const Sign sv = session.query(ball[vi]);
      const Sign sp = session.query(uv);
      if (session.hasViolation()) return fail(session.takeViolation());
      if (su == Sign::Positive && sv == Sign::Positive && sp != Sign::Positive) {
        std::vector<ViolationCertificate::CoreEntry> core{
            {session.lastIndex() - 2, 1}, {session.lastIndex() - 1, 1}};
        if (sp == Sign::Negative) core.push_back({session.lastIndex(), -1});
        // sp == Identity means u v = e with u, v both positive: the two-entry
        // core already multiplies to the identity.
        return fail(session.makeCertificate(
            ViolationKind::ClosureViolation, std::move(core),
            "positives " + ball[ui].str(model.names()) + " and " +
                ball[vi].str(model.names()) + " multiply outside the cone"));
      }
    }
  }
  return report;
}

}  // namespace orderlab
