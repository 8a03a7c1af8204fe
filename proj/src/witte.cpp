#include "orderlab/witte.hpp"

#include <algorithm>
#include <sstream>

namespace orderlab {

HeisenbergTriple::HeisenbergTriple(GroupWord a_, GroupWord b_, GroupWord z_,
                                   long k_, const GroupModel& model)
    : a(std::move(a_)), b(std::move(b_)), z(std::move(z_)), k(k_) {
  if (k == 0) throw std::invalid_argument("heisenberg: k must be nonzero");
  const SpecialLinearElement A = model.evaluate(a);
  const SpecialLinearElement B = model.evaluate(b);
  const SpecialLinearElement Z = model.evaluate(z);
  if (A.matrix().isIdentity() || B.matrix().isIdentity() ||
      Z.matrix().isIdentity())
    throw std::invalid_argument("heisenberg: elements must be non-identity");
  if (!commutator(A, Z).matrix().isIdentity() ||
      !commutator(B, Z).matrix().isIdentity())
    throw std::invalid_argument("heisenberg: z must commute with a and b");
  if (commutator(A, B) != Z.pow(k))
    throw std::invalid_argument("heisenberg: [a,b] != z^k");
}

namespace {

struct NormalizedWord {
  GroupWord word;
  bool flipped;
};

// Flips the word until the oracle calls it positive; both orientations are
// queried so inverse-pair inconsistencies surface immediately.
std::optional<NormalizedWord> normalizePositive(OracleSession& session,
                                                const GroupWord& word) {
  const Sign s = session.query(word);
  if (session.hasViolation()) return std::nullopt;
  if (s == Sign::Identity)
    throw std::invalid_argument("heisenberg: triple element is the identity");
  session.query(word.inverse());
  if (session.hasViolation()) return std::nullopt;
  return NormalizedWord{s == Sign::Negative ? word.inverse() : word,
                        s == Sign::Negative};
}

}  // namespace

HeisenbergOutcome heisenbergContradiction(const HeisenbergTriple& triple,
                                          OracleSession& session,
                                          long witnessBound) {
  if (witnessBound < 1)
    throw std::invalid_argument("heisenberg: witnessBound must be >= 1");
  const GroupModel& model = session.model();

  auto normA = normalizePositive(session, triple.a);
  if (!normA) return session.takeViolation();
  auto normB = normalizePositive(session, triple.b);
  if (!normB) return session.takeViolation();
  auto normZ = normalizePositive(session, triple.z);
  if (!normZ) return session.takeViolation();

  GroupWord aSlot = normA->word;
  GroupWord bSlot = normB->word;
  const GroupWord zHat = normZ->word;
  const SpecialLinearElement Z = model.evaluate(zHat);

  // [aSlot, bSlot] = zHat^k' with k' = +-k; swap slots to make k' positive.
  long kk;
  const SpecialLinearElement C =
      commutator(model.evaluate(aSlot), model.evaluate(bSlot));
  if (C == Z.pow(triple.k < 0 ? -triple.k : triple.k)) {
    kk = triple.k < 0 ? -triple.k : triple.k;
  } else if (C == Z.pow(triple.k < 0 ? triple.k : -triple.k)) {
    kk = triple.k < 0 ? triple.k : -triple.k;
  } else {
    throw std::logic_error("heisenberg: commutator is not the expected power");
  }
  bool swapped = false;
  if (kk < 0) {
    std::swap(aSlot, bSlot);
    kk = -kk;
    swapped = true;
  }

  struct WitnessHit {
    long power = 0;
    int index = -1;       // transcript index of the accepting query
    bool equality = false;  // witness word evaluates to the identity
    int firstIndex = -1;  // transcript index of the power-1 query
  };

  auto search = [&](const GroupWord& slot) -> std::optional<WitnessHit> {
    WitnessHit hit;
    for (long p = 1; p <= witnessBound; ++p) {
      const GroupWord probe = slot.inverse() * zHat.pow(p);
      const Sign s = session.query(probe);
      if (session.hasViolation()) return std::nullopt;
      if (p == 1) hit.firstIndex = session.lastIndex();
      if (s == Sign::Positive) {
        hit.power = p;
        hit.index = session.lastIndex();
        return hit;
      }
      if (s == Sign::Identity) {  // slot equals zHat^p exactly
        hit.power = p;
        hit.index = session.lastIndex();
        hit.equality = true;
        return hit;
      }
    }
    hit.power = 0;
    return hit;  // exhausted: every probe answered Negative
  };

  auto pHit = search(aSlot);
  if (!pHit) return session.takeViolation();
  auto qHit = search(bSlot);
  if (!qHit) return session.takeViolation();

  const bool pFound = pHit->power > 0;
  const bool qFound = qHit->power > 0;

  if (pFound && qFound) {
    const long p = pHit->power;
    const long q = qHit->power;
    const long m = p + q + 1;
    const long exponent = -kk * m * m + (p + q) * m;
    if (exponent >= 0)
      throw std::logic_error("heisenberg: exponent fails to be negative");

    // Exact evaluation of (b^-1 z^q)^m (a^-1 z^p)^m b^m a^m.
    const GroupWord fQ = bSlot.inverse() * zHat.pow(q);
    const GroupWord fP = aSlot.inverse() * zHat.pow(p);
    const GroupWord contradiction =
        fQ.pow(m) * fP.pow(m) * bSlot.pow(m) * aSlot.pow(m);
    if (model.evaluate(contradiction) != Z.pow(exponent))
      throw std::logic_error("heisenberg: word does not evaluate to z^N");

    // Core: every factor the transcript certifies positive, followed by
    // enough copies of z to cancel z^N exactly. Identity-evaluating factor
    // words contribute nothing to the product and are dropped.
    auto indexOf = [&](const GroupWord& w, Sign expected) {
      const auto& log = session.transcript();
      for (int i = static_cast<int>(log.size()) - 1; i >= 0; --i)
        if (log[i].word == w && log[i].answer == expected) return i;
      throw std::logic_error("heisenberg: transcript entry vanished");
    };
    std::vector<ViolationCertificate::CoreEntry> core;
    auto push = [&](const GroupWord& w, bool identityEval, long copies) {
      if (identityEval) return;
      const int idx = indexOf(w, Sign::Positive);
      for (long c = 0; c < copies; ++c) core.push_back({idx, 1});
    };
    push(fQ, qHit->equality, m);
    push(fP, pHit->equality, m);
    push(bSlot, false, m);
    push(aSlot, false, m);
    push(zHat, false, -exponent);

    std::ostringstream note;
    note << "product of cone-positive words evaluates to z^" << exponent
         << " with z positive; appending z^" << -exponent
         << " reaches the identity exactly";
    ViolationCertificate cert = session.makeCertificate(
        ViolationKind::EvaluatedIdentityContradiction, std::move(core),
        note.str(), ObstructionWitness{p, q, m, kk});
    return cert;
  }

  if (pFound != qFound) {
    // One side refuted; the other survives up to the bound.
    const bool survivorIsASlot = qFound;
    const GroupWord survivor = survivorIsASlot ? aSlot : bSlot;
    const int chainIndex =
        survivorIsASlot ? pHit->firstIndex : qHit->firstIndex;
    const bool survivorIsOriginalA = survivorIsASlot != swapped;
    return SurvivingBranch{
        survivorIsOriginalA ? SurvivingBranch::LeftBranch
                            : SurvivingBranch::RightBranch,
        pFound ? pHit->power : qHit->power, chainIndex, survivor, zHat};
  }
  return BoundedInconclusive{witnessBound};
}

WitteSystem buildWitteSystem(long k) {
  if (k < 1) throw std::invalid_argument("witte: k must be positive");
  const Rational kr{Int(k)};
  std::vector<SpecialLinearElement> gens;
  const int pos[6][2] = {{1, 2}, {1, 3}, {2, 3}, {2, 1}, {3, 1}, {3, 2}};
  std::vector<std::string> names;
  for (int i = 0; i < 6; ++i) {
    gens.push_back(ElementaryMatrix(3, pos[i][0], pos[i][1], kr).element());
    names.push_back("a" + std::to_string(i + 1));
  }
  WitteSystem system{k, GroupModel(names, gens), {}};

  for (int i = 0; i < 6; ++i) {
    const auto& self = system.model.generator(i);
    const auto& next = system.model.generator((i + 1) % 6);
    const auto& prev = system.model.generator((i + 5) % 6);
    if (!commutator(self, next).matrix().isIdentity())
      throw std::logic_error("witte: adjacent generators fail to commute");
    const SpecialLinearElement c = commutator(prev, next);
    if (c == self.pow(k))
      system.signs[i] = 1;
    else if (c == self.pow(-k))
      system.signs[i] = -1;
    else
      throw std::logic_error("witte: hexagon relation failed");
  }
  return system;
}

WitteOutcome wittePipeline(const WitteSystem& system, OrderOracle& oracle,
                           long witnessBound) {
  if (oracle.model().generatorCount() != 6)
    throw std::invalid_argument("witte: oracle must expose the six generators");
  for (int i = 0; i < 6; ++i) {
    if (!(oracle.model().generator(i) == system.model.generator(i)))
      throw std::invalid_argument(
          "witte: oracle generators differ from the system's");
  }

  OracleSession session(oracle);
  struct Edge {
    int to = -1;
    int chainIndex = -1;
    GroupWord survivor;
    GroupWord zWord;
  };
  std::array<Edge, 6> edges;
  std::vector<WitteStageSummary> stages;
  bool anyInconclusive = false;

  for (int i = 0; i < 6; ++i) {
    HeisenbergTriple triple(GroupWord::generator((i + 5) % 6),
                            GroupWord::generator((i + 1) % 6),
                            GroupWord::generator(i, system.signs[i]),
                            system.k, system.model);
    HeisenbergOutcome outcome =
        heisenbergContradiction(triple, session, witnessBound);
    if (std::holds_alternative<ViolationCertificate>(outcome))
      return std::get<ViolationCertificate>(outcome);
    if (std::holds_alternative<BoundedInconclusive>(outcome)) {
      anyInconclusive = true;
      stages.push_back({i, "inconclusive"});
      continue;
    }
    const auto& branch = std::get<SurvivingBranch>(outcome);
    Edge edge;
    edge.to = branch.side == SurvivingBranch::LeftBranch ? (i + 5) % 6
                                                         : (i + 1) % 6;
    edge.chainIndex = branch.chainIndex;
    edge.survivor = branch.survivorNormalized;
    edge.zWord = branch.zNormalized;
    edges[i] = edge;
    stages.push_back(
        {i, branch.side == SurvivingBranch::LeftBranch ? "left" : "right"});
  }
  if (anyInconclusive) return WitteInconclusive{witnessBound, stages};

  // Every stage committed to a branch: the functional graph i -> to(i) on
  // the hexagon must close a cycle.
  std::array<int, 6> seenAt;
  seenAt.fill(-1);
  int cursor = 0;
  int step = 0;
  while (seenAt[cursor] < 0) {
    seenAt[cursor] = step++;
    cursor = edges[cursor].to;
  }
  std::vector<int> cycle;
  for (int i = 0; i < 6; ++i)
    if (seenAt[i] >= seenAt[cursor]) cycle.push_back(i);
  std::sort(cycle.begin(), cycle.end(),
            [&](int x, int y) { return seenAt[x] < seenAt[y]; });

  // Chain the first-power refusals around the cycle; the oriented product
  // telescopes to the identity.
  std::vector<ViolationCertificate::CoreEntry> core;
  const GroupModel& model = system.model;
  SpecialLinearElement product = SpecialLinearElement::identity(model.dim());
  for (int c : cycle) {
    const Edge& edge = edges[c];
    // stage c's survivor is the normalized generator of stage edge.to
    const Edge& nextEdge = edges[edge.to];
    if (!(model.evaluate(edge.survivor) == model.evaluate(nextEdge.zWord)))
      throw std::logic_error("witte: chain normalization mismatch");
    core.push_back({edge.chainIndex, -1});
    const auto& entry = session.transcript().at(edge.chainIndex);
    product = product * model.evaluate(entry.word).inverse();
  }
  if (!product.matrix().isIdentity())
    throw std::logic_error("witte: chain product is not the identity");

  std::ostringstream note;
  note << "surviving branches close the cycle";
  for (int c : cycle) note << " a" << c + 1 << " <<";
  note << " a" << cycle.front() + 1
       << "; the first-power refusals multiply to the identity";
  return session.makeCertificate(ViolationKind::LeftInvarianceViolation,
                                 std::move(core), note.str());
}

}  // namespace orderlab
