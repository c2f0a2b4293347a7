#include "annulus/lambda_domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace annulus {

namespace {

Complex horner(const std::vector<Complex>& coeffs, Complex x) {
  Complex acc(0.0, 0.0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

}  // namespace

const char* to_string(OmegaRegion region) {
  switch (region) {
    case OmegaRegion::plus: return "plus";
    case OmegaRegion::minus: return "minus";
    case OmegaRegion::boundary_sigma: return "boundary_sigma";
    default: return "outside";
  }
}

bool lambda_contains(const C2Point& p, const LambdaSpec& spec, double tol) {
  const Complex a = spec.circle.center;
  const double rho = spec.circle.radius;
  const Complex defect = (p.z - a) * (p.w - std::conj(a)) - rho * rho;
  if (std::abs(defect) > tol * rho * rho) return false;
  const double dz = std::abs(p.z - a);
  return spec.side == Side::plus ? (0.0 < dz && dz < rho) : (dz > rho);
}

PlusWitnessSearch solve_plus_witness(const C2Point& p, const Annulus& annulus,
                                     double solver_tol) {
  const double gamma = annulus.mid_radius();
  const double g2 = gamma * gamma;
  const double rc = annulus.center_bound();
  constexpr int kMaxIter = 50;
  constexpr int kGridSide = 5;

  std::optional<Complex> best;
  double best_residual = std::numeric_limits<double>::infinity();
  double best_attempt = std::numeric_limits<double>::infinity();

  auto defect_at = [&](Complex a) { return (p.z - a) * (p.w - std::conj(a)) - g2; };

  for (int gx = 0; gx < kGridSide; ++gx) {
    for (int gy = 0; gy < kGridSide; ++gy) {
      // 5x5 start grid inscribed in the admissible center disc
      Complex a(0.6 * rc * (2.0 * gx / (kGridSide - 1) - 1.0),
                0.6 * rc * (2.0 * gy / (kGridSide - 1) - 1.0));
      Complex g = defect_at(a);
      for (int iter = 0; iter < kMaxIter; ++iter) {
        if (std::abs(g) <= 1e-14 * g2) break;
        const Complex da = -(p.w - std::conj(a));   // derivative in a
        const Complex dab = -(p.z - a);             // derivative in conj(a)
        const double det = std::norm(da) - std::norm(dab);
        if (std::abs(det) < 1e-14 * (std::norm(da) + std::norm(dab) + 1e-300)) break;
        const Complex step = (dab * std::conj(g) - std::conj(da) * g) / det;
        // backtracking keeps the defect decreasing
        Complex a_next = a + step;
        Complex g_next = defect_at(a_next);
        Complex scaled = step;
        bool improved = std::abs(g_next) < std::abs(g);
        for (int half = 0; !improved && half < 20; ++half) {
          scaled *= 0.5;
          a_next = a + scaled;
          g_next = defect_at(a_next);
          improved = std::abs(g_next) < std::abs(g);
        }
        if (!improved) break;
        a = a_next;
        g = g_next;
      }
      const double residual = std::abs(g);
      const double dz = std::abs(p.z - a);
      const bool admissible =
          residual <= solver_tol && std::abs(a) < rc && 0.0 < dz && dz < gamma;
      if (admissible) {
        if (residual < best_residual) {
          best = a;
          best_residual = residual;
        }
      } else {
        best_attempt = std::min(best_attempt, residual);
      }
    }
  }
  if (best) return {best, best_residual};
  return {std::nullopt, best_attempt};
}

OmegaMembership omega_membership(const C2Point& p, const Annulus& annulus, double solver_tol) {
  if (p.w == std::conj(p.z) && annulus.contains(p.z)) {
    return {OmegaRegion::boundary_sigma, std::nullopt, 0.0};
  }
  const auto plus = solve_plus_witness(p, annulus, solver_tol);
  if (plus.center) return {OmegaRegion::plus, plus.center, plus.residual};
  // the minus sheet through center a holds p exactly when the plus sheet holds
  // the reflected point, with the same center
  const auto minus = solve_plus_witness(reflect_c2(p), annulus, solver_tol);
  if (minus.center) return {OmegaRegion::minus, minus.center, minus.residual};
  return {OmegaRegion::outside, std::nullopt, std::min(plus.residual, minus.residual)};
}

bool lambda_intersect_plus_plus(const CircleSpec& c1, const CircleSpec& c2) {
  if (c1.center == c2.center && c1.radius == c2.radius) {
    throw ParameterError("intersection predicate requires distinct sheets");
  }
  const double d = std::abs(c1.center - c2.center);
  if (d == 0.0) return false;
  return (d + c1.radius < c2.radius) || (d + c2.radius < c1.radius);
}

bool lambda_intersect_plus_minus(const CircleSpec& c1, const CircleSpec& c2) {
  return std::abs(c1.center - c2.center) > c1.radius + c2.radius;
}

Complex eval_g_plus(const ZeroMeanCoefficients& coeffs, const C2Point& p) {
  if (p.w == Complex(0.0, 0.0)) throw PoleError("plus-side extension has a pole at w = 0");
  const Complex zw = p.z * p.w;
  const Complex inv = 1.0 / p.w;
  Complex pw(1.0, 0.0);
  Complex acc(0.0, 0.0);
  for (int n = 1; n <= coeffs.n_max; ++n) {
    acc += pw * horner(coeffs.plus[n - 1], zw);
    pw *= inv;
  }
  return acc;
}

Complex eval_g_minus(const ZeroMeanCoefficients& coeffs, const C2Point& p) {
  if (p.z == Complex(0.0, 0.0)) throw PoleError("minus-side extension has a pole at z = 0");
  const Complex zw = p.z * p.w;
  const Complex inv = 1.0 / p.z;
  Complex pw(1.0, 0.0);
  Complex acc(0.0, 0.0);
  for (int n = 1; n <= coeffs.n_max; ++n) {
    acc += pw * horner(coeffs.minus[n - 1], zw);
    pw *= inv;
  }
  return acc;
}

namespace {

Complex eval_f_series(const ZeroMeanCoefficients& coeffs, Side side, double t,
                      const C2Point& p) {
  const Complex pole = side == Side::plus ? p.w : p.z;
  if (pole == Complex(0.0, 0.0)) {
    throw PoleError(side == Side::plus ? "plus-side series has a pole at w = 0"
                                       : "minus-side series has a pole at z = 0");
  }
  const Complex zw = p.z * p.w;
  const Complex step = t / pole;
  Complex pw = step;
  Complex acc(0.0, 0.0);
  for (int n = 1; n <= coeffs.n_max; ++n) {
    const auto& arr = side == Side::plus ? coeffs.plus[n - 1] : coeffs.minus[n - 1];
    acc += pw * horner(arr, zw);
    pw *= step;
  }
  return acc;
}

}  // namespace

Complex eval_f_t(const ZeroMeanCoefficients& coeffs, Side side, AbelParameter t,
                 const C2Point& p) {
  return eval_f_series(coeffs, side, t.t, p);
}

Complex eval_f_limit(const ZeroMeanCoefficients& coeffs, Side side, const C2Point& p) {
  return eval_f_series(coeffs, side, 1.0, p);
}

Complex eval_psi(const ZeroMeanCoefficients& coeffs, const C2Point& p) {
  return eval_f_limit(coeffs, Side::plus, p) +
         eval_f_limit(coeffs, Side::minus, reflect_c2(p));
}

Complex reflect(Complex zeta, const CircleSpec& c) {
  if (zeta == c.center) throw PoleError("reflection undefined at the circle center");
  return c.center + c.radius * c.radius / (std::conj(zeta) - std::conj(c.center));
}

std::vector<C2Point> boundary_approach_path(Complex z0, const Annulus& annulus,
                                            std::span<const double> distances) {
  const double r = std::abs(z0);
  if (!(annulus.r1 < r && r < annulus.r2)) {
    throw ParameterError("approach target must lie strictly inside the ring");
  }
  const double gamma = annulus.mid_radius();
  const Complex dir = z0 / r;
  const Complex a = z0 - gamma * dir;  // circle through z0 along the radial fiber

  auto fiber_point = [&](double s) {
    return C2Point{a + s * gamma * dir, std::conj(a) + (gamma / s) * std::conj(dir)};
  };
  auto dist_at = [&](double s) {
    return gamma * std::hypot(1.0 - s, 1.0 / s - 1.0);
  };

  std::vector<C2Point> path;
  path.reserve(distances.size());
  for (double d : distances) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw ParameterError("approach distances must be positive");
    }
    // dist_at decreases monotonically in s on (0, 1); bisect for the fiber parameter
    double lo = 1e-9, hi = 1.0 - 1e-15;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (dist_at(mid) > d) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    path.push_back(fiber_point(0.5 * (lo + hi)));
  }
  return path;
}

}  // namespace annulus
