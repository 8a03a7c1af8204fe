#include "orderlab/decompose.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>

namespace orderlab {

SpecialLinearElement Decomposition::product(int n) const {
  SpecialLinearElement acc = SpecialLinearElement::identity(n);
  for (const auto& f : factors) acc = acc * f.element();
  return acc;
}

namespace {

class RowReducer {
 public:
  explicit RowReducer(const SquareMatrix& m) : work_(m), n_(m.dim()) {}

  const SquareMatrix& matrix() const { return work_; }
  const Rational& at(int r, int c) const { return work_.at(r, c); }

  // row r += t * row s, recorded as the left factor E_{r+1,s+1}(t).
  void rowAdd(int r, int s, const Rational& t) {
    if (t.isZero()) return;
    for (int j = 0; j < n_; ++j) work_.at(r, j) += t * work_.at(s, j);
    ops_.emplace_back(n_, r + 1, s + 1, t);
  }

  /// With L_k ... L_1 M = D, the input factors as M = L_1^-1 ... L_k^-1 D:
  /// the recorded ops inverted, in application order.
  std::vector<ElementaryMatrix> inverseFactors() const {
    std::vector<ElementaryMatrix> out;
    out.reserve(ops_.size());
    for (const auto& op : ops_) out.push_back(op.inverse());
    return out;
  }

 private:
  SquareMatrix work_;
  int n_;
  std::vector<ElementaryMatrix> ops_;
};

// diag(u, 1/u) on adjacent coordinates (p, p+1), as four elementary factors:
// E_{p+1,p}(1/u - 1) E_{p,p+1}(1) E_{p+1,p}(u - 1) E_{p,p+1}(-1/u).
void appendDiagonalBlock(std::vector<ElementaryMatrix>& factors, int n, int p,
                         const Rational& u) {
  if (u == Rational(1)) return;
  const Rational inv = u.reciprocal();
  factors.emplace_back(n, p + 2, p + 1, inv - Rational(1));
  factors.emplace_back(n, p + 1, p + 2, Rational(1));
  factors.emplace_back(n, p + 2, p + 1, u - Rational(1));
  factors.emplace_back(n, p + 1, p + 2, -inv);
}

void verifyRoundTrip(const Decomposition& d, const SpecialLinearElement& m) {
  if (d.product(m.dim()) != m)
    throw std::logic_error("decomposition: product does not reproduce input");
}

// Adjacent factors in the same (i, j) slot commute with nothing in between,
// so they fold into one; zero parameters drop out entirely.
void mergeAdjacentFactors(std::vector<ElementaryMatrix>& factors) {
  std::vector<ElementaryMatrix> merged;
  for (const auto& f : factors) {
    if (!merged.empty() && merged.back().i == f.i && merged.back().j == f.j) {
      merged.back().t += f.t;
      if (merged.back().t.isZero()) merged.pop_back();
      continue;
    }
    if (!f.t.isZero()) merged.push_back(f);
  }
  factors = std::move(merged);
}

}  // namespace

Decomposition decomposeOverField(const SpecialLinearElement& m) {
  const int n = m.dim();
  RowReducer red(m.matrix());

  // Lower elimination; a zero pivot is fixed by a single row addition.
  for (int d = 0; d + 1 < n; ++d) {
    if (red.at(d, d).isZero()) {
      for (int r = d + 1; r < n; ++r) {
        if (!red.at(r, d).isZero()) {
          red.rowAdd(d, r, Rational(1));
          break;
        }
      }
    }
    for (int r = d + 1; r < n; ++r) {
      if (!red.at(r, d).isZero())
        red.rowAdd(r, d, -(red.at(r, d) / red.at(d, d)));
    }
  }
  // Upper elimination against the nonzero diagonal.
  for (int d = 1; d < n; ++d) {
    for (int r = 0; r < d; ++r) {
      if (!red.at(r, d).isZero())
        red.rowAdd(r, d, -(red.at(r, d) / red.at(d, d)));
    }
  }

  Decomposition out;
  out.ring = Ring::Rationals;
  out.factors = red.inverseFactors();

  // Remaining diagonal has product 1; peel it with 2x2 blocks.
  Rational carry(1);
  for (int p = 0; p + 1 < n; ++p) {
    carry *= red.at(p, p);
    appendDiagonalBlock(out.factors, n, p, carry);
  }
  mergeAdjacentFactors(out.factors);
  verifyRoundTrip(out, m);
  return out;
}

Decomposition decomposeOverIntegers(const SpecialLinearElement& m) {
  if (!m.matrix().isIntegral())
    throw std::invalid_argument("decompose: matrix is not integral");
  const int n = m.dim();
  RowReducer red(m.matrix());

  for (int d = 0; d + 1 < n; ++d) {
    // Euclidean reduction of column d across rows d..n-1.
    for (;;) {
      int below = -1;
      for (int r = d + 1; r < n; ++r) {
        if (!red.at(r, d).isZero() &&
            (below < 0 || red.at(r, d).abs() < red.at(below, d).abs()))
          below = r;
      }
      if (below < 0 && !red.at(d, d).isZero()) break;
      if (red.at(d, d).isZero()) {
        red.rowAdd(d, below, Rational(1));
        continue;
      }
      const Int pivot = red.at(d, d).numerator();
      const Int entry = red.at(below, d).numerator();
      if (abs(entry) >= abs(pivot)) {
        red.rowAdd(below, d, Rational(-truncDiv(entry, pivot)));
      } else {
        red.rowAdd(d, below, Rational(-truncDiv(pivot, entry)));
      }
    }
    // det-1 invariant forces the pivot gcd to be 1; normalize its sign
    // using the row below (swaps are not elementary).
    if (red.at(d, d) == Rational(-1)) {
      red.rowAdd(d + 1, d, Rational(-1));
      red.rowAdd(d, d + 1, Rational(2));
      red.rowAdd(d + 1, d, Rational(-1));
    }
    if (red.at(d, d) != Rational(1))
      throw std::logic_error("decompose: column gcd is not 1");
  }
  if (red.at(n - 1, n - 1) != Rational(1))
    throw std::logic_error("decompose: final pivot is not 1");

  for (int d = 1; d < n; ++d) {
    for (int r = 0; r < d; ++r) {
      if (!red.at(r, d).isZero()) red.rowAdd(r, d, -red.at(r, d));
    }
  }

  Decomposition out;
  out.ring = Ring::Integers;
  out.factors = red.inverseFactors();
  mergeAdjacentFactors(out.factors);
  for (const auto& f : out.factors) {
    if (!f.t.isInteger())
      throw std::logic_error("decompose: non-integer factor over Z");
  }
  verifyRoundTrip(out, m);
  return out;
}

namespace {

// Raw mt19937_64 outputs reduced by modulo: deterministic across platforms,
// unlike std::uniform_int_distribution.
long drawRange(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ElementaryMatrix drawElementary(std::mt19937_64& rng, int n, Ring ring,
                                int coeffBound) {
  const int i = static_cast<int>(drawRange(rng, 1, n));
  int j = static_cast<int>(drawRange(rng, 1, n - 1));
  if (j >= i) ++j;
  const long mag = drawRange(rng, 1, coeffBound);
  const bool negative = (rng() & 1) != 0;
  Rational t(negative ? -mag : mag);
  if (ring == Ring::Rationals) t /= Rational(drawRange(rng, 1, coeffBound));
  return ElementaryMatrix(n, i, j, t);
}

SpecialLinearElement randomElement(std::mt19937_64& rng, int n, Ring ring,
                                   int wordLength, int coeffBound) {
  SpecialLinearElement acc = SpecialLinearElement::identity(n);
  for (int step = 0; step < wordLength; ++step)
    acc = acc * drawElementary(rng, n, ring, coeffBound).element();
  return acc;
}

}  // namespace

SpecialLinearElement randomSpecialLinear(int n, Ring ring, int wordLength,
                                         int coeffBound, std::uint64_t seed) {
  if (wordLength < 0) throw std::invalid_argument("random: negative length");
  if (coeffBound < 1) throw std::invalid_argument("random: coeffBound < 1");
  std::mt19937_64 rng(seed);
  return randomElement(rng, n, ring, wordLength, coeffBound);
}

std::optional<Decomposition> minimalDecomposition(
    const SpecialLinearElement& m, int coeffBound, int lengthBound,
    const MinimalSearchConfig& config) {
  if (coeffBound < 1) throw std::invalid_argument("minimal: coeffBound < 1");
  if (lengthBound < 0) throw std::invalid_argument("minimal: lengthBound < 0");
  const int n = m.dim();
  if (m.matrix().isIdentity())
    return Decomposition{{}, Ring::Integers};

  // Generator alphabet in lexicographic (i, j, t) order; BFS expansion in
  // this order makes the first hit the lexicographically least minimal word.
  std::vector<ElementaryMatrix> alphabet;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (long t = -coeffBound; t <= coeffBound; ++t) {
        if (t != 0) alphabet.emplace_back(n, i, j, Rational(t));
      }
    }
  }

  struct Node {
    SpecialLinearElement state;
    int parent;
    int factor;
    int depth;
  };
  std::vector<Node> nodes;
  nodes.push_back({SpecialLinearElement::identity(n), -1, -1, 0});
  std::unordered_map<std::string, int> seen;
  seen[nodes[0].state.matrix().key()] = 0;

  auto reconstruct = [&](int idx) {
    std::vector<ElementaryMatrix> factors;
    for (int cur = idx; nodes[cur].parent >= 0; cur = nodes[cur].parent)
      factors.push_back(alphabet[nodes[cur].factor]);
    std::reverse(factors.begin(), factors.end());
    return Decomposition{std::move(factors), Ring::Integers};
  };

  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    if (nodes[cur].depth >= lengthBound) continue;
    for (int a = 0; a < static_cast<int>(alphabet.size()); ++a) {
      SpecialLinearElement next = nodes[cur].state * alphabet[a].element();
      auto key = next.matrix().key();
      if (seen.contains(key)) continue;
      if (static_cast<long>(nodes.size()) >= config.nodeBudget)
        throw ResourceLimitExceeded("minimal: node budget exhausted");
      const int idx = static_cast<int>(nodes.size());
      nodes.push_back({next, cur, a, nodes[cur].depth + 1});
      seen[key] = idx;
      if (next == m) return reconstruct(idx);
      queue.push_back(idx);
    }
  }
  return std::nullopt;
}

DecompositionStats decompositionStats(int n, int samples, int wordLength,
                                      int coeffBound, std::uint64_t seed) {
  DecompositionStats stats;
  stats.sampleSize = samples;
  std::mt19937_64 rng(seed);
  long total = 0;
  for (int s = 0; s < samples; ++s) {
    auto m = randomElement(rng, n, Ring::Integers, wordLength, coeffBound);
    const int c = decomposeOverIntegers(m).count();
    ++stats.countHistogram[c];
    stats.maxCount = std::max(stats.maxCount, c);
    total += c;
  }
  stats.meanCount = samples > 0 ? Rational(Int(total), Int(samples)) : Rational(0);
  return stats;
}

}  // namespace orderlab
