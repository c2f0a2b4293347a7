#pragma once

#include <span>
#include <vector>

#include "annulus/core.hpp"

namespace annulus {

inline constexpr int kDefaultQuadratureNodes = 256;

/// Damping parameter t in (0, 1).
struct AbelParameter {
  double t;
  explicit AbelParameter(double value);
};

/// Per-radius Fourier coefficients c_k(r) for k_min <= k <= k_max.
/// Row index is k - k_min, column index is the radius index.
struct RadialFourierTable {
  PolarGrid grid;
  int k_min = 0;
  int k_max = 0;
  std::vector<Complex> coeffs;  // (k - k_min) * n_r + i

  int n_rows() const { return k_max - k_min + 1; }
  Complex coeff(int k, int i) const;
  Complex& coeff_ref(int k, int i);
};

/// Equal-weight trapezoid quadrature of (1/2pi) * integral of f over the circle.
Complex circle_mean(const EvaluableFunction& f, const CircleSpec& c,
                    int n_nodes = kDefaultQuadratureNodes);

/// Discrete realization of c_k(r) on every grid radius:
///   coeffs[k][i] = (1/n_theta) * sum_j values[i][j] * e^{-i k theta_j}.
/// Requires |k_min|, k_max <= n_theta/2 - 1 (below the aliasing cutoff).
RadialFourierTable radial_fourier(const SampledAnnulusFunction& f, int k_min, int k_max);

/// Trapezoid quadrature of (1/2pi i) * integral over |zeta| = r of f(zeta)/(zeta - z).
/// Gives the holomorphic extension inside the circle for |z| < r and minus the
/// extension vanishing at infinity for |z| > r. Refuses | |z| - r | < 1e-9; the
/// boundary values are reached through the spectral path, not singular quadrature.
Complex cauchy_integral(const EvaluableFunction& f, double r, Complex z,
                        int n_nodes = kDefaultQuadratureNodes);

/// Damped positive-harmonic sum on the table's grid:
///   values[i][j] = sum_{k=1}^{k_max} t^k c_k(r_i) e^{i k theta_j}.
SampledAnnulusFunction abel_plus(const RadialFourierTable& table, AbelParameter t);

/// Mirror of abel_plus over k <= -1 with damping t^{|k|}.
SampledAnnulusFunction abel_minus(const RadialFourierTable& table, AbelParameter t);

/// Discrete Poisson integral of the circle samples at radius fraction t, angle theta:
///   (1/n) * sum_j f_j * P_t(theta - theta_j),  P_t the unit-disc Poisson kernel.
Complex poisson_circle(std::span<const Complex> f_on_circle, AbelParameter t, double theta);

}  // namespace annulus
