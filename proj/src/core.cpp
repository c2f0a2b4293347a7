#include "annulus/core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace annulus {

const char* to_string(Side side) { return side == Side::plus ? "plus" : "minus"; }

Annulus::Annulus(double inner, double outer) : r1(inner), r2(outer) {
  if (!std::isfinite(inner) || !std::isfinite(outer) || !(0.0 < inner) || !(inner < outer)) {
    std::ostringstream oss;
    oss << "annulus radii must satisfy 0 < r1 < r2, got r1=" << inner << " r2=" << outer;
    throw ParameterError(oss.str());
  }
}

bool Annulus::contains(Complex z) const {
  const double r = std::abs(z);
  return r1 <= r && r <= r2;
}

CircleSpec::CircleSpec(Complex a, double rho) : center(a), radius(rho) {
  if (!std::isfinite(rho) || rho <= 0.0 || !std::isfinite(a.real()) || !std::isfinite(a.imag())) {
    throw ParameterError("circle requires a finite center and a positive radius");
  }
}

Complex CircleSpec::point(double theta) const {
  return center + radius * Complex(std::cos(theta), std::sin(theta));
}

RadialLayout radial_layout_from_string(const std::string& name) {
  if (name == "uniform") return RadialLayout::uniform;
  if (name == "cheb" || name == "chebyshev-in-r2") return RadialLayout::chebyshev_r2;
  throw ParameterError("unknown radial layout: " + name);
}

const char* to_string(RadialLayout layout) {
  return layout == RadialLayout::uniform ? "uniform" : "cheb";
}

double PolarGrid::theta(int j) const {
  return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_theta);
}

Complex PolarGrid::point(int i, int j) const {
  const double th = theta(j);
  return radii[i] * Complex(std::cos(th), std::sin(th));
}

void PolarGrid::validate() const {
  if (radii.size() < 2) throw ParameterError("grid needs at least 2 radii");
  if (n_theta < 8 || !is_power_of_two(n_theta)) {
    throw ParameterError("n_theta must be a power of two >= 8");
  }
  if (!(radii.front() > 0.0) || !std::isfinite(radii.front())) {
    throw ParameterError("grid radii must be positive and finite");
  }
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!std::isfinite(radii[i]) || !(radii[i] > radii[i - 1])) {
      throw ParameterError("grid radii must be strictly increasing");
    }
  }
}

PolarGrid make_grid(const Annulus& a, int n_r, int n_theta, RadialLayout layout) {
  if (n_r < 2) throw ParameterError("n_r must be >= 2");
  if (n_theta < 8 || !is_power_of_two(n_theta)) {
    throw ParameterError("n_theta must be a power of two >= 8");
  }
  PolarGrid grid;
  grid.n_theta = n_theta;
  grid.radii.resize(n_r);
  const int last = n_r - 1;
  if (layout == RadialLayout::uniform) {
    for (int i = 1; i < last; ++i) {
      grid.radii[i] = a.r1 + (a.r2 - a.r1) * static_cast<double>(i) / last;
    }
  } else {
    // squared radii at Chebyshev-Lobatto nodes on [r1^2, r2^2], ascending
    const double mid = 0.5 * (a.r1 * a.r1 + a.r2 * a.r2);
    const double half = 0.5 * (a.r2 * a.r2 - a.r1 * a.r1);
    for (int i = 1; i < last; ++i) {
      const double x = mid - half * std::cos(std::numbers::pi * static_cast<double>(i) / last);
      grid.radii[i] = std::sqrt(x);
    }
  }
  grid.radii[0] = a.r1;
  grid.radii[last] = a.r2;
  grid.validate();
  return grid;
}

double SampledAnnulusFunction::max_abs() const {
  double m = 0.0;
  for (const Complex& v : values) m = std::max(m, std::abs(v));
  return m;
}

void SampledAnnulusFunction::validate() const {
  grid.validate();
  const std::size_t expected =
      static_cast<std::size_t>(grid.n_r()) * static_cast<std::size_t>(grid.n_theta);
  if (values.size() != expected) {
    throw ParameterError("sample array shape does not match the grid");
  }
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ParameterError("sample array contains non-finite entries");
    }
  }
}

C2Point reflect_c2(const C2Point& p) { return {std::conj(p.w), std::conj(p.z)}; }

SampledAnnulusFunction sample(const EvaluableFunction& f, const PolarGrid& grid) {
  grid.validate();
  SampledAnnulusFunction out;
  out.grid = grid;
  out.values.resize(static_cast<std::size_t>(grid.n_r()) * grid.n_theta);
  for (int i = 0; i < grid.n_r(); ++i) {
    for (int j = 0; j < grid.n_theta; ++j) {
      const Complex z = grid.point(i, j);
      const Complex v = f(z);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream oss;
        oss << "non-finite value at grid point i=" << i << " j=" << j << " z=(" << z.real()
            << "," << z.imag() << ")";
        if (!f.description.empty()) oss << " while sampling " << f.description;
        throw EvaluationError(oss.str());
      }
      out.at(i, j) = v;
    }
  }
  return out;
}

bool circle_in_annulus_surrounding_origin(const CircleSpec& c, const Annulus& a, bool strict) {
  const double d = std::abs(c.center);
  if (!(d < c.radius)) return false;
  // closed-form extremes of |zeta| on the circle: radius -/+ |center|
  if (strict) return (c.radius - d > a.r1) && (c.radius + d < a.r2);
  return (c.radius - d >= a.r1) && (c.radius + d <= a.r2);
}

}  // namespace annulus
