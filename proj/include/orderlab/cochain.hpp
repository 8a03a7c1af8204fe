#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/circlemap.hpp"

namespace orderlab {

/// Finite slice of a group: explicit elements with identity, inverses, and a
/// partial multiplication table (products may escape the slice). Built either
/// from circle-map generators (word ball) or as an abstract Z-ball for
/// cochain experiments.
class GroupContext {
 public:
  int size() const { return static_cast<int>(names_.size()); }
  int identityIndex() const { return identity_; }
  int inverseOf(int index) const { return inverses_.at(index); }
  /// Product index, or nullopt when it leaves the slice.
  std::optional<int> product(int lhs, int rhs) const;
  const std::string& name(int index) const { return names_.at(index); }

  bool hasMaps() const { return !maps_.empty(); }
  const CircleMap& map(int index) const { return maps_.at(index); }
  /// Indices of the generator elements inside the slice.
  const std::vector<int>& generatorIndices() const { return generators_; }

  /// Ball of the group generated by circle maps: all distinct elements
  /// reachable by words of length <= radius (generators and inverses).
  static GroupContext fromCircleGenerators(const std::vector<CircleMap>& gens,
                                           int radius);

  /// {g^n : |n| <= radius} in the infinite cyclic group.
  static GroupContext integerBall(int radius);

 private:
  std::vector<std::string> names_;
  std::vector<int> inverses_;
  std::map<std::pair<int, int>, int> products_;
  std::vector<CircleMap> maps_;  // empty for abstract contexts
  std::vector<int> generators_;
  int identity_ = 0;
};

/// Bounded integer cochain with finite support on k-tuples of context
/// elements. The bound is always the actual max |value| over the support.
class BoundedCochain {
 public:
  explicit BoundedCochain(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  long bound() const;

  long value(const std::vector<int>& tuple) const;  // 0 off support
  void set(const std::vector<int>& tuple, long value);

  const std::map<std::vector<int>, long>& support() const { return support_; }

  friend bool operator==(const BoundedCochain&, const BoundedCochain&) = default;

 private:
  int arity_;
  std::map<std::vector<int>, long> support_;
};

struct DeltaResult {
  BoundedCochain cochain;
  long escapedTuples = 0;  // tuples dropped because a product left the slice
};

/// Inhomogeneous differential:
/// dc(g0,...,gk) = c(g1,...,gk) + sum_i (-1)^i c(g0,...,g_{i-1}g_i,...,gk)
///                + (-1)^{k+1} c(g0,...,g_{k-1}).
/// Evaluated on every tuple of context elements whose interior products stay
/// in the slice; escaping tuples are counted, not silently zeroed.
DeltaResult delta(const BoundedCochain& c, const GroupContext& context);

/// Homogeneous form: hc(g0,...,gk) = c(g0^-1 g1, ..., g_{k-1}^-1 gk),
/// an arity-(k+1) cochain on the slice (tuples with escaping quotients are
/// skipped).
BoundedCochain homogenize(const BoundedCochain& c, const GroupContext& context);

/// Inverse of homogenize: c(g1,...,gk) = hc(e, g1, g1g2, ..., g1...gk).
BoundedCochain inhomogenize(const BoundedCochain& hc,
                            const GroupContext& context);

}  // namespace orderlab
