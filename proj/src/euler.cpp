#include "orderlab/euler.hpp"

#include <algorithm>

namespace orderlab {

int EulerCocycleTable::at(int g, int h) const {
  auto it = values.find({g, h});
  if (it == values.end())
    throw MissingTableEntry("euler table: missing entry (" +
                            context.name(g) + ", " + context.name(h) + ")");
  return it->second;
}

EulerCocycleTable buildEulerTable(const std::vector<CircleMap>& generators,
                                  int ballRadius) {
  EulerCocycleTable table{GroupContext::fromCircleGenerators(generators, ballRadius), {}};
  const int n = table.context.size();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      table.values[{g, h}] =
          eulerZ(table.context.map(g), table.context.map(h));
  return table;
}

CocycleReport checkCocycleIdentity(
    const EulerCocycleTable& table,
    const std::vector<std::array<int, 3>>& triples) {
  CocycleReport report;
  for (const auto& [g1, g2, g3] : triples) {
    auto g12 = table.context.product(g1, g2);
    auto g23 = table.context.product(g2, g3);
    if (!g12 || !g23)
      throw MissingTableEntry("euler table: product escapes the domain");
    ++report.checkedTriples;
    if (table.at(g1, g2) + table.at(*g12, g3) !=
        table.at(g1, *g23) + table.at(g2, g3)) {
      report.holds = false;
      report.firstFailure = {{g1, g2, g3}};
      return report;
    }
  }
  return report;
}

CocycleReport checkCocycleIdentityDirect(const std::vector<CircleMap>& maps) {
  CocycleReport report;
  const int n = static_cast<int>(maps.size());
  // All pairwise products and cocycle values up front; the triple loop then
  // only evaluates the two mixed terms.
  std::vector<std::vector<CircleMap>> products;
  std::vector<std::vector<int>> z(n, std::vector<int>(n));
  products.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<CircleMap> row;
    row.reserve(n);
    for (int j = 0; j < n; ++j) {
      row.push_back(compose(maps[i], maps[j]));
      z[i][j] = eulerZ(maps[i], maps[j]);
    }
    products.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        ++report.checkedTriples;
        if (z[i][j] + eulerZ(products[i][j], maps[l]) !=
            eulerZ(maps[i], products[j][l]) + z[j][l]) {
          report.holds = false;
          report.firstFailure = {{i, j, l}};
          return report;
        }
      }
    }
  }
  return report;
}

namespace {

struct Constraint {
  int g, h, gh;  // phi(h) - phi(gh) + phi(g) = z
  int z;
};

}  // namespace

std::optional<BoundedCochain> coboundarySearch(
    const std::vector<CircleMap>& generators, int ballRadius, long phiBound,
    const CoboundarySearchConfig& config) {
  if (phiBound < 0) throw std::invalid_argument("coboundary: negative bound");
  GroupContext ctx = GroupContext::fromCircleGenerators(generators, ballRadius);
  const int n = ctx.size();

  std::vector<Constraint> constraints;
  std::vector<std::vector<int>> touching(n);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      auto gh = ctx.product(g, h);
      if (!gh) continue;
      const int z = eulerZ(ctx.map(g), ctx.map(h));
      const int idx = static_cast<int>(constraints.size());
      constraints.push_back({g, h, *gh, z});
      touching[g].push_back(idx);
      touching[h].push_back(idx);
      touching[*gh].push_back(idx);
    }
  }

  // phi(e) = z(e, e) = 0 is forced; remaining values are searched with the
  // ordering 0, 1, -1, 2, -2, ... and constraint checks as soon as a
  // constraint's three slots are assigned.
  std::vector<long> phi(n, 0);
  std::vector<bool> assigned(n, false);
  phi[ctx.identityIndex()] = 0;
  assigned[ctx.identityIndex()] = true;

  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (i != ctx.identityIndex()) order.push_back(i);

  auto consistent = [&](int element) {
    for (int idx : touching[element]) {
      const auto& c = constraints[idx];
      if (!assigned[c.g] || !assigned[c.h] || !assigned[c.gh]) continue;
      if (phi[c.h] - phi[c.gh] + phi[c.g] != c.z) return false;
    }
    return true;
  };

  std::vector<long> candidates;
  candidates.push_back(0);
  for (long v = 1; v <= phiBound; ++v) {
    candidates.push_back(v);
    candidates.push_back(-v);
  }

  long steps = 0;
  // Depth-first over `order`, returning the first full assignment.
  std::vector<size_t> choice(order.size(), 0);
  size_t depth = 0;
  while (true) {
    if (depth == order.size()) {
      BoundedCochain result(1);
      for (int i = 0; i < n; ++i) result.set({i}, phi[i]);
      return result;
    }
    if (++steps > config.stepBudget)
      throw SearchBudgetExceeded("coboundary: step budget exhausted");
    const int element = order[depth];
    bool advanced = false;
    while (choice[depth] < candidates.size()) {
      phi[element] = candidates[choice[depth]];
      assigned[element] = true;
      ++choice[depth];
      if (consistent(element)) {
        ++depth;
        advanced = true;
        break;
      }
      assigned[element] = false;
    }
    if (advanced) continue;
    // exhausted this slot: backtrack
    assigned[element] = false;
    choice[depth] = 0;
    if (depth == 0) return std::nullopt;
    --depth;
    assigned[order[depth]] = false;
  }
}

FixedPointResult fixedPointFromCoboundary(const BoundedCochain& phi,
                                          const GroupContext& context,
                                          int maxIterations,
                                          const Rational& limit) {
  if (phi.arity() != 1)
    throw std::invalid_argument("fixed point: phi must have arity 1");
  if (!context.hasMaps())
    throw std::invalid_argument("fixed point: abstract context has no action");
  // Verify delta phi = z on the working slice.
  for (int g = 0; g < context.size(); ++g) {
    if (!context.map(g).isPL())
      throw std::invalid_argument("fixed point: PL carriers only");
    for (int h = 0; h < context.size(); ++h) {
      auto gh = context.product(g, h);
      if (!gh) continue;
      long lhs = phi.value({h}) - phi.value({*gh}) + phi.value({g});
      if (lhs != eulerZ(context.map(g), context.map(h)))
        throw std::invalid_argument("fixed point: phi is not a coboundary of z");
    }
  }

  // Corrected lifts act through the generators and their inverses.
  std::vector<int> movers;
  for (int g : context.generatorIndices()) {
    movers.push_back(g);
    if (context.inverseOf(g) != g) movers.push_back(context.inverseOf(g));
  }

  std::vector<Rational> points{Rational(0)};
  Rational sup(0);
  for (int iter = 0; iter < maxIterations; ++iter) {
    std::vector<Rational> fresh;
    for (const auto& x : points) {
      for (int g : movers) {
        Rational y = context.map(g).pl().liftEval(x) - Rational(phi.value({g}));
        if (y.abs() > limit)
          throw OrbitEscape("fixed point: corrected orbit escaped past " +
                            limit.str());
        if (std::find(points.begin(), points.end(), y) == points.end() &&
            std::find(fresh.begin(), fresh.end(), y) == fresh.end())
          fresh.push_back(y);
      }
    }
    if (fresh.empty()) break;
    points.insert(points.end(), fresh.begin(), fresh.end());
  }
  for (const auto& x : points) sup = max(sup, x);

  bool exact = true;
  for (int g : movers) {
    Rational y = context.map(g).pl().liftEval(sup) - Rational(phi.value({g}));
    if (y != sup) exact = false;
  }
  return {sup.fractionalPart(), sup, exact, static_cast<int>(points.size())};
}

}  // namespace orderlab
