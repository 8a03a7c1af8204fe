#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace orderlab {

/// Circle diffeomorphism x + sum_j (c_j sin 2pi j x + d_j cos 2pi j x), with
/// an optional Holder-rough bump whose derivative has exponent alpha - 1
/// (the map is C^alpha at the bump center, C^infinity elsewhere). The
/// Fourier coefficients must keep the derivative positive; construction
/// verifies positivity on a fine grid.
class SmoothCircleMap {
 public:
  struct Rough {
    double alpha = 1.3;    // total regularity: |x - center|^alpha bump
    double center = 0.25;
    double amplitude = 0.01;
    double radius = 0.1;
  };

  SmoothCircleMap(std::vector<double> c, std::vector<double> d);
  SmoothCircleMap(std::vector<double> c, std::vector<double> d, Rough rough);

  static SmoothCircleMap rotation(double offset);

  double eval(double x) const;        // lift: eval(x + 1) = eval(x) + 1
  double derivative(double x) const;

  bool hasRough() const { return hasRough_; }
  const Rough& rough() const { return rough_; }
  void setOffset(double offset) { offset_ = offset; }

  /// Coefficients drawn deterministically with sum_j 2 pi j (|c_j|+|d_j|)
  /// scaled to `margin` < 1, so the result is a diffeomorphism.
  static SmoothCircleMap randomSmooth(std::uint64_t seed, int harmonics = 3,
                                      double margin = 0.5);

 private:
  void verifyDiffeo() const;

  std::vector<double> c_, d_;
  double offset_ = 0;
  bool hasRough_ = false;
  Rough rough_;
};

/// Distance to 0 on R/Z.
double circleDist(double x);

/// The singular kernel Phi(x, y) = 1 / dist(x - y, 0).
double singularKernel(double x, double y);

using KernelFn = std::function<double(double, double)>;

/// F^g(x, y) = F(g(x), g(y)) sqrt(g'(x) g'(y)): the half-density action.
KernelFn actOnKernel(KernelFn F, const SmoothCircleMap& g);

struct GridLevel {
  int n = 256;
  double delta = 1.0 / 64;  // diagonal exclusion band, kept >= 2/n
};

/// Doubling refinement schedule (n, delta) -> (2n, delta/2), `levels` deep.
std::vector<GridLevel> refinementSchedule(int baseN, double baseDelta,
                                          int levels);

struct ProbeLevelResult {
  GridLevel level;
  double sup = 0;
  double l2 = 0;
};

struct ProbeReport {
  std::vector<ProbeLevelResult> levels;
  double finalRatioSup = 0;  // sup_L / sup_{L-1}
  double finalRatioL2 = 0;
  double growthFactorSup = 0;  // sup_last / sup_first
  bool stabilized = false;     // final sup ratio within [0.8, 1.25]
};

struct ProbeConfig {
  double ratioLow = 0.8;
  double ratioHigh = 1.25;
  int threads = 1;
};

/// Per-level sup and L2 mass of |Phi^g - Phi| off the diagonal band. For C^2
/// maps the sup sequence stabilizes; below C^{3/2} it grows with the
/// refinement. Non-finite values trigger a band-doubling retry before a hard
/// error.
ProbeReport boundednessProbe(const SmoothCircleMap& g,
                             const std::vector<GridLevel>& schedule,
                             const ProbeConfig& config = {});

/// The discrete L2 masses alone: stabilization is expected down to C^{3/2},
/// divergence below it (exploratory; the threshold itself is at the edge of
/// double precision).
std::vector<double> kernelSquareIntegrabilityProbe(
    const SmoothCircleMap& g, const std::vector<GridLevel>& schedule,
    const ProbeConfig& config = {});

}  // namespace orderlab
