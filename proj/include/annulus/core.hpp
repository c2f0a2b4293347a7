#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "annulus/errors.hpp"

namespace annulus {

using Complex = std::complex<double>;

constexpr bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// Which half of a splitting (or of the variety complement) a quantity belongs to.
enum class Side { plus, minus };

const char* to_string(Side side);

/// Closed ring { z : r1 <= |z| <= r2 } with 0 < r1 < r2.
struct Annulus {
  double r1;
  double r2;

  Annulus(double inner, double outer);

  /// Radius (r1 + r2)/2 of the canonical circle family used by the membership solver.
  double mid_radius() const { return 0.5 * (r1 + r2); }

  /// Largest center modulus for which a circle of radius mid_radius() stays in the open ring.
  double center_bound() const { return 0.5 * (r2 - r1); }

  bool contains(Complex z) const;
};

/// Circle { zeta : |zeta - center| = radius }.
struct CircleSpec {
  Complex center;
  double radius;

  CircleSpec(Complex a, double rho);

  Complex point(double theta) const;
};

enum class RadialLayout { uniform, chebyshev_r2 };

RadialLayout radial_layout_from_string(const std::string& name);
const char* to_string(RadialLayout layout);

/// Tensor grid over an annulus: a strictly increasing radius list spanning
/// [r1, r2] crossed with n_theta equispaced angles theta_j = 2*pi*j/n_theta.
struct PolarGrid {
  std::vector<double> radii;
  int n_theta = 0;

  int n_r() const { return static_cast<int>(radii.size()); }
  double theta(int j) const;
  Complex point(int i, int j) const;
  Annulus annulus() const { return Annulus(radii.front(), radii.back()); }

  /// Throws ParameterError if any grid invariant fails.
  void validate() const;
};

/// Builds a grid with radii[0] = r1 and radii[n_r-1] = r2. The chebyshev_r2
/// layout places the squared radii at Chebyshev-Lobatto nodes on [r1^2, r2^2],
/// which keeps the radial least-squares fits well conditioned.
PolarGrid make_grid(const Annulus& a, int n_r, int n_theta,
                    RadialLayout layout = RadialLayout::chebyshev_r2);

/// Complex samples on a polar grid, values[i*n_theta + j] = f(radii[i] * e^{i theta_j}).
struct SampledAnnulusFunction {
  PolarGrid grid;
  std::vector<Complex> values;

  Complex& at(int i, int j) {
    return values[static_cast<std::size_t>(i) * grid.n_theta + j];
  }
  const Complex& at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * grid.n_theta + j];
  }

  double max_abs() const;
  void validate() const;
};

/// Point-evaluable function on the annulus. Evaluation must be deterministic:
/// equal inputs yield equal outputs.
struct EvaluableFunction {
  std::function<Complex(Complex)> fn;
  std::string description;

  Complex operator()(Complex z) const { return fn(z); }
};

/// Point (z, w) in C^2.
struct C2Point {
  Complex z;
  Complex w;
};

/// The reflection (z, w) -> (conj w, conj z) exchanging the plus and minus domains.
C2Point reflect_c2(const C2Point& p);

/// Evaluates f on every grid node. Throws EvaluationError naming the grid point
/// if f returns a non-finite value.
SampledAnnulusFunction sample(const EvaluableFunction& f, const PolarGrid& grid);

/// True iff the circle surrounds the origin (|center| < radius) and its trace
/// lies inside the ring; with strict set, inside the open ring.
bool circle_in_annulus_surrounding_origin(const CircleSpec& c, const Annulus& a,
                                          bool strict = false);

}  // namespace annulus
