#pragma once

#include <span>
#include <utility>
#include <vector>

#include "annulus/core.hpp"
#include "annulus/zero_mean.hpp"

namespace annulus {

struct DecompositionDiagnostics {
  double c0_residual = 0.0;
  double tail_mass = 0.0;
};

/// Result of splitting f into plus and minus halves. Both halves are exact
/// closed forms built from the fitted coefficients, so they are evaluable
/// anywhere on the annulus without radial interpolation.
struct Decomposition {
  EvaluableFunction plus;
  EvaluableFunction minus;
  ZeroMeanCoefficients coeffs;
  DecompositionDiagnostics diagnostics;
};

/// Largest forbidden Fourier mode of a function restricted to a circle:
/// negative modes for the plus side (which must extend into the disc),
/// modes >= 0 for the minus side (which must extend outside and vanish
/// at infinity).
struct ExtensionResidual {
  CircleSpec circle;
  Side side;
  double offending_coefficient_norm = 0.0;
};

struct AbelConvergenceEntry {
  double t = 0.0;
  double dist_plus = 0.0;   // sup over the grid of |f_t_plus - plus|
  double dist_minus = 0.0;  // sup over the grid of |f_t_minus - minus|
};

struct HoelderEstimate {
  double alpha_hat = 0.0;
  double m_hat = 0.0;
};

/// Splits f = plus + minus by fitting the radial Fourier profiles. Input that
/// fails the zero-mean test is rejected with ZeroMeanRejection carrying the
/// report; the hypothesis is enforced, never projected away.
Decomposition split(const SampledAnnulusFunction& f, int n_max, double tol = 1e-8);

/// Same decomposition recovered through the damped-series route: synthesize the
/// damped halves at the last schedule value, re-analyze, undo the damping, and
/// refit. The log records sup-norm distances of the damped halves to the
/// recovered closed forms at every schedule point. The schedule must be
/// strictly increasing inside (0, 1).
std::pair<Decomposition, std::vector<AbelConvergenceEntry>> abel_path_split(
    const SampledAnnulusFunction& f, int n_max, std::span<const double> t_schedule,
    double tol = 1e-8);

inline constexpr int kDefaultAbelScheduleLength = 12;

/// The default schedule t_k = 1 - 2^{-k}, k = 1..12.
std::vector<double> default_abel_schedule(int length = kDefaultAbelScheduleLength);

/// Probes the one-sided extension property of g on an admissible circle by
/// sampling n_probe points (a power of two) and measuring the largest Fourier
/// coefficient in the forbidden index range.
ExtensionResidual check_circle_extension(const EvaluableFunction& g, const CircleSpec& c,
                                         Side side, int n_probe, const Annulus& annulus);

/// Diagnostic log-log regression of the max increment per dyadic separation
/// scale. Separations are capped at the ring width r2 - r1; the slope is
/// clamped to (0, 1]. Returns (1, 0) by convention when all increments vanish.
HoelderEstimate hoelder_estimate(const SampledAnnulusFunction& f);

}  // namespace annulus
