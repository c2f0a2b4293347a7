#include "annulus/validation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace annulus {

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

OracleReport check_cauchy_abel(const EvaluableFunction& f, const RadialFourierTable& table,
                               std::span<const double> t_values, int n_samples, double tol,
                               std::uint64_t seed) {
  if (t_values.empty()) throw ParameterError("need at least one t value");
  if (n_samples < 1) throw ParameterError("need at least one sample");
  // quadrature kept far above the band limit so aliasing stays below tol
  constexpr int kNodes = 1024;

  std::vector<SampledAnnulusFunction> plus_parts;
  std::vector<SampledAnnulusFunction> minus_parts;
  for (double t : t_values) {
    plus_parts.push_back(abel_plus(table, AbelParameter(t)));
    minus_parts.push_back(abel_minus(table, AbelParameter(t)));
  }

  std::mt19937_64 rng(seed);
  const int n_r = table.grid.n_r();
  const int n_theta = table.grid.n_theta;
  double max_err = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const std::size_t ti = rng() % t_values.size();
    const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n_r));
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n_theta));
    const double t = t_values[ti];
    const double r = table.grid.radii[i];
    const double th = table.grid.theta(j);
    const Complex dir(std::cos(th), std::sin(th));
    const Complex inside = cauchy_integral(f, r, t * r * dir, kNodes);
    const Complex outside = cauchy_integral(f, r, (r / t) * dir, kNodes);
    max_err = std::max(max_err, std::abs(inside - plus_parts[ti].at(i, j)));
    max_err = std::max(max_err, std::abs(outside + minus_parts[ti].at(i, j)));
  }
  OracleReport report;
  report.identity_name = "cauchy_integral_vs_abel_means";
  report.max_abs_error = max_err;
  report.samples_tested = n_samples;
  report.tolerance = tol;
  report.pass = max_err <= tol;
  return report;
}

OracleReport check_poisson_identity(const SampledAnnulusFunction& f,
                                    std::span<const double> t_values, double tol) {
  f.validate();
  if (t_values.empty()) throw ParameterError("need at least one t value");
  const int cutoff = f.grid.n_theta / 2 - 1;
  const auto table = radial_fourier(f, -cutoff, cutoff);
  const int n_r = f.grid.n_r();
  const int n_theta = f.grid.n_theta;
  double max_err = 0.0;
  int tested = 0;
  std::vector<Complex> row(n_theta);
  for (double t : t_values) {
    const AbelParameter at(t);
    const auto plus = abel_plus(table, at);
    const auto minus = abel_minus(table, at);
    for (int i = 0; i < n_r; ++i) {
      for (int j = 0; j < n_theta; ++j) row[j] = f.at(i, j);
      for (int j = 0; j < n_theta; ++j) {
        const Complex damped = plus.at(i, j) + minus.at(i, j);
        const Complex poisson = poisson_circle(row, at, f.grid.theta(j));
        max_err = std::max(max_err, std::abs(damped - poisson));
        ++tested;
      }
    }
  }
  OracleReport report;
  report.identity_name = "abel_sums_vs_poisson_integral";
  report.max_abs_error = max_err;
  report.samples_tested = tested;
  report.tolerance = tol;
  report.pass = max_err <= tol;
  return report;
}

bool brute_force_lambda_intersection(const LambdaSpec& s1, const LambdaSpec& s2, int n_starts,
                                     std::uint64_t seed) {
  if (s1.circle.center == s2.circle.center && s1.circle.radius == s2.circle.radius &&
      s1.side == s2.side) {
    throw ParameterError("intersection oracle requires distinct sheets");
  }
  if (n_starts < 1) throw ParameterError("need at least one start");
  const Complex a = s1.circle.center;
  const double rho = s1.circle.radius;
  const Complex b = s2.circle.center;
  const double delta = s2.circle.radius;
  const Complex b_conj = std::conj(b);
  const double d2 = delta * delta;
  const double rho2 = rho * rho;

  // first sheet parametrized by u = z - a, so w = conj(a) + rho^2 / u; the
  // second sheet's equation becomes one holomorphic equation in u
  auto defect = [&](Complex u) {
    const Complex z = a + u;
    const Complex w = std::conj(a) + rho2 / u;
    return (z - b) * (w - b_conj) - d2;
  };
  auto derivative = [&](Complex u) {
    const Complex z = a + u;
    const Complex w = std::conj(a) + rho2 / u;
    return (w - b_conj) - (z - b) * rho2 / (u * u);
  };
  // Boundary solutions of the defect equation lie exactly on the excluded
  // circle |z - center| = radius; a small strictness margin keeps them out
  // while genuine witnesses (which sit O(sqrt(tangency margin)) away) pass.
  auto side_ok = [](Side side, double dist, double radius) {
    return side == Side::plus ? (1e-9 * radius < dist && dist < radius * (1.0 - 1e-6))
                              : (dist > radius * (1.0 + 1e-6));
  };

  std::mt19937_64 rng(seed);
  for (int s = 0; s < n_starts; ++s) {
    // log-uniform fiber modulus inside the required side range
    double mag;
    if (s1.side == Side::plus) {
      mag = rho * std::exp(std::log(0.02) + unit_double(rng) * (std::log(0.98) - std::log(0.02)));
    } else {
      mag = rho * std::exp(std::log(1.02) + unit_double(rng) * (std::log(40.0) - std::log(1.02)));
    }
    const double phase = 2.0 * std::numbers::pi * unit_double(rng);
    Complex u = std::polar(mag, phase);
    Complex g = defect(u);
    for (int iter = 0; iter < 60; ++iter) {
      if (std::abs(g) <= 1e-13 * d2) break;
      const Complex dg = derivative(u);
      if (std::abs(dg) < 1e-300) break;
      Complex step = -g / dg;
      Complex u_next = u + step;
      bool improved = false;
      for (int half = 0; half < 25; ++half) {
        if (std::abs(u_next) > 1e-12 * rho) {
          const Complex g_next = defect(u_next);
          if (std::abs(g_next) < std::abs(g)) {
            u = u_next;
            g = g_next;
            improved = true;
            break;
          }
        }
        step *= 0.5;
        u_next = u + step;
      }
      if (!improved) break;
    }
    if (std::abs(g) > 1e-10) continue;
    if (!side_ok(s1.side, std::abs(u), rho)) continue;
    const Complex z = a + u;
    if (!side_ok(s2.side, std::abs(z - b), delta)) continue;
    return true;
  }
  return false;
}

OracleReport check_reflection_poisson(std::span<const Complex> f_on_circle, const CircleSpec& c,
                                      int n_probe, double tol, std::uint64_t seed) {
  const int n = static_cast<int>(f_on_circle.size());
  if (n < 8) throw ParameterError("need at least 8 circle samples");
  if (n_probe < 1) throw ParameterError("need at least one probe point");

  auto cauchy_from_samples = [&](Complex at) {
    Complex acc(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
      const double th = 2.0 * std::numbers::pi * j / n;
      const Complex dir(std::cos(th), std::sin(th));
      const Complex zeta = c.center + c.radius * dir;
      acc += f_on_circle[j] * (c.radius * dir) / (zeta - at);
    }
    return acc / static_cast<double>(n);
  };

  std::mt19937_64 rng(seed);
  double max_err = 0.0;
  int tested = 0;
  int excluded = 0;
  for (int k = 0; k < n_probe; ++k) {
    const double s = 0.05 + 0.85 * unit_double(rng);
    const double phi = 2.0 * std::numbers::pi * unit_double(rng);
    const Complex z = c.center + s * c.radius * Complex(std::cos(phi), std::sin(phi));
    if (c.radius - std::abs(z - c.center) < 1e-3 * c.radius) {
      ++excluded;
      continue;
    }
    const Complex z_star = reflect(z, c);
    const Complex inside = cauchy_from_samples(z);
    const Complex outside = -cauchy_from_samples(z_star);
    const Complex poisson = poisson_circle(f_on_circle, AbelParameter(s), phi);
    max_err = std::max(max_err, std::abs(inside + outside - poisson));
    ++tested;
  }
  OracleReport report;
  report.identity_name = "cauchy_reflection_sum_vs_poisson";
  report.max_abs_error = max_err;
  report.samples_tested = tested;
  report.tolerance = tol;
  report.pass = max_err <= tol;
  report.excluded = excluded;
  return report;
}

}  // namespace annulus
