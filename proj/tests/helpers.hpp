#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "annulus/circle_transform.hpp"
#include "annulus/core.hpp"

namespace annulus::testing {

inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Complex random_in_disc(std::mt19937_64& rng, double radius) {
  const double mag = radius * std::sqrt(unit_double(rng));
  const double phase = 2.0 * std::numbers::pi * unit_double(rng);
  return std::polar(mag, phase);
}

// Random circle surrounding the origin whose trace stays inside the ring with
// a comfortable margin relative to the ring width.
inline CircleSpec random_admissible_circle(std::mt19937_64& rng, const Annulus& a,
                                           double margin = 0.02) {
  const double width = a.r2 - a.r1;
  const Complex center = random_in_disc(rng, 0.9 * a.center_bound());
  const double d = std::abs(center);
  const double lo = a.r1 + d + margin * width;
  const double hi = a.r2 - d - margin * width;
  const double rho = lo + (hi - lo) * unit_double(rng);
  return CircleSpec(center, rho);
}

// Slow trapezoid quadrature of the k-th Fourier coefficient of f on |z| = r.
inline Complex fourier_coefficient_quadrature(const EvaluableFunction& f, double r, int k,
                                              int n_nodes = 10000) {
  Complex acc(0.0, 0.0);
  for (int j = 0; j < n_nodes; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n_nodes;
    const Complex z = r * Complex(std::cos(th), std::sin(th));
    acc += f(z) * Complex(std::cos(k * th), -std::sin(k * th));
  }
  return acc / static_cast<double>(n_nodes);
}

inline EvaluableFunction one_over_z_plus_one_over_conj() {
  return {[](Complex z) { return 1.0 / z + 1.0 / std::conj(z); }, "1/z + 1/conj(z)"};
}

inline EvaluableFunction two_mode_second_harmonic() {
  return {[](Complex z) { return z / std::conj(z) + std::conj(z) / (z * z); },
          "z/conj(z) + conj(z)/z^2"};
}

}  // namespace annulus::testing
