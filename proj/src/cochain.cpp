#include "orderlab/cochain.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace orderlab {

std::optional<int> GroupContext::product(int lhs, int rhs) const {
  auto it = products_.find({lhs, rhs});
  if (it == products_.end()) return std::nullopt;
  return it->second;
}

GroupContext GroupContext::fromCircleGenerators(
    const std::vector<CircleMap>& gens, int radius) {
  if (gens.empty()) throw std::invalid_argument("context: no generators");
  GroupContext ctx;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const CircleMap& m, const std::string& name) {
    auto key = m.key();
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(ctx.maps_.size());
    index[key] = id;
    ctx.maps_.push_back(m);
    ctx.names_.push_back(name);
    return id;
  };

  CircleMap identity = gens[0].isPL()
                           ? CircleMap(PLCircleHomeo::identity())
                           : CircleMap(MobiusMap::identity());
  ctx.identity_ = intern(identity, "e");

  std::vector<int> frontier{ctx.identity_};
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<int> next;
    for (int cur : frontier) {
      for (size_t i = 0; i < gens.size(); ++i) {
        for (bool inv : {false, true}) {
          CircleMap step = inv ? gens[i].inverse() : gens[i];
          CircleMap element = compose(ctx.maps_[cur], step);
          int before = static_cast<int>(ctx.maps_.size());
          int id = intern(element,
                          ctx.names_[cur] == "e"
                              ? ("g" + std::to_string(i) + (inv ? "'" : ""))
                              : (ctx.names_[cur] + " g" + std::to_string(i) +
                                 (inv ? "'" : "")));
          if (id == before) next.push_back(id);
        }
      }
    }
    frontier = std::move(next);
  }

  // Generator indices resolve against the finished ball (radius >= 1 always
  // contains them; radius 0 interns them on the spot).
  for (size_t i = 0; i < gens.size(); ++i)
    ctx.generators_.push_back(intern(gens[i], "g" + std::to_string(i)));

  // Inverses and the multiplication table, restricted to the slice.
  const int n = ctx.size();
  ctx.inverses_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    auto invKey = ctx.maps_[i].inverse().key();
    auto it = index.find(invKey);
    if (it == index.end())
      throw std::logic_error("context: ball is not inversion-closed");
    ctx.inverses_[i] = it->second;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto key = compose(ctx.maps_[i], ctx.maps_[j]).key();
      auto it = index.find(key);
      if (it != index.end()) ctx.products_[{i, j}] = it->second;
    }
  }
  return ctx;
}

GroupContext GroupContext::integerBall(int radius) {
  GroupContext ctx;
  // element i represents g^(i - radius)
  for (int p = -radius; p <= radius; ++p)
    ctx.names_.push_back("g^" + std::to_string(p));
  ctx.identity_ = radius;
  ctx.generators_.push_back(radius + 1);
  const int n = 2 * radius + 1;
  ctx.inverses_.resize(n);
  for (int i = 0; i < n; ++i) ctx.inverses_[i] = 2 * radius - i;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int sum = (i - radius) + (j - radius);
      if (sum >= -radius && sum <= radius) ctx.products_[{i, j}] = sum + radius;
    }
  }
  return ctx;
}

long BoundedCochain::bound() const {
  long m = 0;
  for (const auto& [tuple, v] : support_) m = std::max(m, v < 0 ? -v : v);
  return m;
}

long BoundedCochain::value(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != arity_)
    throw std::invalid_argument("cochain: tuple arity mismatch");
  auto it = support_.find(tuple);
  return it == support_.end() ? 0 : it->second;
}

void BoundedCochain::set(const std::vector<int>& tuple, long v) {
  if (static_cast<int>(tuple.size()) != arity_)
    throw std::invalid_argument("cochain: tuple arity mismatch");
  if (v == 0)
    support_.erase(tuple);
  else
    support_[tuple] = v;
}

namespace {

// Enumerate all tuples of the given length over context indices.
bool nextTuple(std::vector<int>& tuple, int size) {
  for (int pos = static_cast<int>(tuple.size()) - 1; pos >= 0; --pos) {
    if (++tuple[pos] < size) return true;
    tuple[pos] = 0;
  }
  return false;
}

}  // namespace

DeltaResult delta(const BoundedCochain& c, const GroupContext& context) {
  const int k = c.arity();
  DeltaResult out{BoundedCochain(k + 1), 0};
  std::vector<int> tuple(k + 1, 0);
  do {
    bool escaped = false;
    long acc = 0;
    // c(g1,...,gk)
    acc += c.value({tuple.begin() + 1, tuple.end()});
    long sign = -1;
    for (int i = 1; i <= k; ++i) {
      auto merged = context.product(tuple[i - 1], tuple[i]);
      if (!merged) {
        escaped = true;
        break;
      }
      std::vector<int> args;
      args.reserve(k);
      for (int pos = 0; pos <= k; ++pos) {
        if (pos == i - 1)
          args.push_back(*merged);
        else if (pos != i)
          args.push_back(tuple[pos]);
      }
      acc += sign * c.value(args);
      sign = -sign;
    }
    if (escaped) {
      ++out.escapedTuples;
      continue;
    }
    // (-1)^{k+1} c(g0,...,g_{k-1})
    acc += sign * c.value({tuple.begin(), tuple.end() - 1});
    out.cochain.set(tuple, acc);
  } while (nextTuple(tuple, context.size()));
  return out;
}

BoundedCochain homogenize(const BoundedCochain& c, const GroupContext& context) {
  const int k = c.arity();
  BoundedCochain out(k + 1);
  std::vector<int> tuple(k + 1, 0);
  do {
    std::vector<int> quotients;
    quotients.reserve(k);
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      auto q = context.product(context.inverseOf(tuple[i]), tuple[i + 1]);
      if (!q) {
        ok = false;
        break;
      }
      quotients.push_back(*q);
    }
    if (ok) out.set(tuple, c.value(quotients));
  } while (nextTuple(tuple, context.size()));
  return out;
}

BoundedCochain inhomogenize(const BoundedCochain& hc,
                            const GroupContext& context) {
  const int k = hc.arity() - 1;
  if (k < 1) throw std::invalid_argument("inhomogenize: arity must be >= 2");
  BoundedCochain out(k);
  std::vector<int> tuple(k, 0);
  do {
    std::vector<int> args{context.identityIndex()};
    int prefix = context.identityIndex();
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      auto p = context.product(prefix, tuple[i]);
      if (!p) {
        ok = false;
        break;
      }
      prefix = *p;
      args.push_back(prefix);
    }
    if (ok) out.set(tuple, hc.value(args));
  } while (nextTuple(tuple, context.size()));
  return out;
}

}  // namespace orderlab
