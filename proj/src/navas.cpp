#include "orderlab/navas.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace orderlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa from the raw stream; bit-reproducible across platforms.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SmoothCircleMap::SmoothCircleMap(std::vector<double> c, std::vector<double> d)
    : c_(std::move(c)), d_(std::move(d)) {
  verifyDiffeo();
}

SmoothCircleMap::SmoothCircleMap(std::vector<double> c, std::vector<double> d,
                                 Rough rough)
    : c_(std::move(c)), d_(std::move(d)), hasRough_(true), rough_(rough) {
  if (rough_.alpha <= 1.0 || rough_.alpha >= 2.0)
    throw std::invalid_argument("rough bump: alpha must lie in (1, 2)");
  if (rough_.radius <= 0 || rough_.amplitude < 0)
    throw std::invalid_argument("rough bump: bad radius or amplitude");
  verifyDiffeo();
}

double circleDist(double x) {
  const double f = x - std::floor(x);
  return f < 0.5 ? f : 1.0 - f;
}

SmoothCircleMap SmoothCircleMap::rotation(double offset) {
  SmoothCircleMap out({}, {});
  out.offset_ = offset;
  return out;
}

double SmoothCircleMap::eval(double x) const {
  double y = x + offset_;
  for (size_t j = 0; j < c_.size(); ++j)
    y += c_[j] * std::sin(kTwoPi * (j + 1) * x);
  for (size_t j = 0; j < d_.size(); ++j)
    y += d_[j] * std::cos(kTwoPi * (j + 1) * x);
  if (hasRough_) {
    const double u = circleDist(x - rough_.center);
    if (u < rough_.radius) {
      const double edge = 1.0 - u / rough_.radius;
      y += rough_.amplitude * std::pow(u, rough_.alpha) * edge * edge;
    }
  }
  return y;
}

double SmoothCircleMap::derivative(double x) const {
  double s = 1.0;
  for (size_t j = 0; j < c_.size(); ++j)
    s += c_[j] * kTwoPi * (j + 1) * std::cos(kTwoPi * (j + 1) * x);
  for (size_t j = 0; j < d_.size(); ++j)
    s -= d_[j] * kTwoPi * (j + 1) * std::sin(kTwoPi * (j + 1) * x);
  if (hasRough_) {
    const double signedU = x - rough_.center -
                           std::round(x - rough_.center);  // in [-1/2, 1/2]
    const double u = std::fabs(signedU);
    if (u < rough_.radius && u > 0) {
      const double edge = 1.0 - u / rough_.radius;
      const double dBump =
          rough_.amplitude * (rough_.alpha * std::pow(u, rough_.alpha - 1) * edge * edge -
                              2.0 * std::pow(u, rough_.alpha) * edge / rough_.radius);
      s += (signedU >= 0 ? dBump : -dBump);
    }
  }
  return s;
}

void SmoothCircleMap::verifyDiffeo() const {
  constexpr int kGrid = 1 << 13;
  for (int i = 0; i < kGrid; ++i) {
    if (derivative(static_cast<double>(i) / kGrid) <= 0)
      throw std::invalid_argument("circle map: derivative not positive");
  }
}

SmoothCircleMap SmoothCircleMap::randomSmooth(std::uint64_t seed, int harmonics,
                                              double margin) {
  std::mt19937_64 rng(seed);
  std::vector<double> c(harmonics), d(harmonics);
  double mass = 0;
  for (int j = 0; j < harmonics; ++j) {
    c[j] = 2 * uniform01(rng) - 1;
    d[j] = 2 * uniform01(rng) - 1;
    mass += kTwoPi * (j + 1) * (std::fabs(c[j]) + std::fabs(d[j]));
  }
  const double scale = mass > 0 ? margin / mass : 0;
  for (int j = 0; j < harmonics; ++j) {
    c[j] *= scale;
    d[j] *= scale;
  }
  return SmoothCircleMap(std::move(c), std::move(d));
}

double singularKernel(double x, double y) { return 1.0 / circleDist(x - y); }

KernelFn actOnKernel(KernelFn F, const SmoothCircleMap& g) {
  return [F = std::move(F), &g](double x, double y) {
    const double dx = g.derivative(x);
    const double dy = g.derivative(y);
    if (dx <= 0 || dy <= 0)
      throw std::domain_error("kernel action: nonpositive derivative");
    return F(g.eval(x), g.eval(y)) * std::sqrt(dx) * std::sqrt(dy);
  };
}

std::vector<GridLevel> refinementSchedule(int baseN, double baseDelta,
                                          int levels) {
  std::vector<GridLevel> out;
  int n = baseN;
  double delta = baseDelta;
  for (int l = 0; l < levels; ++l) {
    if (delta < 2.0 / n)
      throw std::invalid_argument("schedule: band below two grid cells");
    out.push_back({n, delta});
    n *= 2;
    delta /= 2;
  }
  return out;
}

namespace {

struct LevelAccumulator {
  double sup = 0;
  double sumSq = 0;
  bool finite = true;
};

LevelAccumulator scanLevel(const SmoothCircleMap& g, const GridLevel& level,
                           int threads) {
  const int n = level.n;
  std::vector<double> gx(n), gd(n);
  for (int i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) / n;
    gx[i] = g.eval(x);
    gd[i] = g.derivative(x);
  }
  // Offsets o with dist(o/n) >= delta; pairs are (i, i+o mod n).
  std::vector<int> offsets;
  for (int o = 0; o < n; ++o)
    if (circleDist(static_cast<double>(o) / n) >= level.delta)
      offsets.push_back(o);

  const int workers = std::max(1, threads);
  std::vector<LevelAccumulator> parts(workers);
  auto work = [&](int w) {
    LevelAccumulator acc;
    for (size_t oi = w; oi < offsets.size(); oi += workers) {
      const int o = offsets[oi];
      const double base = singularKernel(static_cast<double>(o) / n, 0.0);
      for (int i = 0; i < n; ++i) {
        const int j = i + o < n ? i + o : i + o - n;
        const double acted =
            singularKernel(gx[i], gx[j]) * std::sqrt(gd[i] * gd[j]);
        const double diff = acted - base;
        if (!std::isfinite(diff)) {
          acc.finite = false;
          return acc;
        }
        const double a = std::fabs(diff);
        if (a > acc.sup) acc.sup = a;
        acc.sumSq += diff * diff;
      }
    }
    return acc;
  };
  if (workers == 1) {
    parts[0] = work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { parts[w] = work(w); });
    for (auto& t : pool) t.join();
  }
  LevelAccumulator total;
  for (const auto& p : parts) {  // fixed merge order
    total.sup = std::max(total.sup, p.sup);
    total.sumSq += p.sumSq;
    total.finite = total.finite && p.finite;
  }
  return total;
}

}  // namespace

ProbeReport boundednessProbe(const SmoothCircleMap& g,
                             const std::vector<GridLevel>& schedule,
                             const ProbeConfig& config) {
  if (schedule.size() < 3)
    throw std::invalid_argument("probe: need at least three levels");
  ProbeReport report;
  for (const auto& level : schedule) {
    GridLevel attempt = level;
    LevelAccumulator acc;
    bool done = false;
    for (int retry = 0; retry < 3 && !done; ++retry) {
      acc = scanLevel(g, attempt, config.threads);
      if (acc.finite)
        done = true;
      else
        attempt.delta *= 2;  // widen the exclusion band and retry
    }
    if (!done)
      throw std::runtime_error("probe: non-finite values near the diagonal");
    const double cells = static_cast<double>(attempt.n) * attempt.n;
    report.levels.push_back(
        {attempt, acc.sup, std::sqrt(acc.sumSq / cells)});
  }
  const size_t last = report.levels.size() - 1;
  const double prevSup = report.levels[last - 1].sup;
  const double firstSup = report.levels.front().sup;
  report.finalRatioSup =
      prevSup > 0 ? report.levels[last].sup / prevSup : (report.levels[last].sup > 0 ? 1e9 : 1.0);
  const double prevL2 = report.levels[last - 1].l2;
  report.finalRatioL2 =
      prevL2 > 0 ? report.levels[last].l2 / prevL2 : (report.levels[last].l2 > 0 ? 1e9 : 1.0);
  report.growthFactorSup =
      firstSup > 0 ? report.levels[last].sup / firstSup : (report.levels[last].sup > 0 ? 1e9 : 1.0);
  report.stabilized = report.finalRatioSup >= config.ratioLow &&
                      report.finalRatioSup <= config.ratioHigh;
  return report;
}

std::vector<double> kernelSquareIntegrabilityProbe(
    const SmoothCircleMap& g, const std::vector<GridLevel>& schedule,
    const ProbeConfig& config) {
  auto report = boundednessProbe(g, schedule, config);
  std::vector<double> masses;
  masses.reserve(report.levels.size());
  for (const auto& level : report.levels) masses.push_back(level.l2);
  return masses;
}

}  // namespace orderlab
