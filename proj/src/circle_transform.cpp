#include "annulus/circle_transform.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "annulus/fft.hpp"

namespace annulus {

AbelParameter::AbelParameter(double value) : t(value) {
  if (!std::isfinite(value) || !(0.0 < value && value < 1.0)) {
    throw ParameterError("abel parameter must lie in (0, 1)");
  }
}

Complex RadialFourierTable::coeff(int k, int i) const {
  if (k < k_min || k > k_max) throw ParameterError("harmonic index outside table range");
  return coeffs[static_cast<std::size_t>(k - k_min) * grid.n_r() + i];
}

Complex& RadialFourierTable::coeff_ref(int k, int i) {
  if (k < k_min || k > k_max) throw ParameterError("harmonic index outside table range");
  return coeffs[static_cast<std::size_t>(k - k_min) * grid.n_r() + i];
}

Complex circle_mean(const EvaluableFunction& f, const CircleSpec& c, int n_nodes) {
  if (n_nodes < 8) throw ParameterError("circle_mean needs n_nodes >= 8");
  Complex acc(0.0, 0.0);
  for (int j = 0; j < n_nodes; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n_nodes;
    const Complex node = c.point(th);
    const Complex v = f(node);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream oss;
      oss << "non-finite value on circle node theta=" << th << " zeta=(" << node.real() << ","
          << node.imag() << ")";
      throw EvaluationError(oss.str());
    }
    acc += v;
  }
  return acc / static_cast<double>(n_nodes);
}

RadialFourierTable radial_fourier(const SampledAnnulusFunction& f, int k_min, int k_max) {
  f.validate();
  const int n = f.grid.n_theta;
  const int cutoff = n / 2 - 1;
  if (k_min > 0 || k_max < 0) throw ParameterError("table must bracket k = 0");
  if (-k_min > cutoff || k_max > cutoff) {
    throw ParameterError("harmonic bounds exceed the aliasing cutoff n_theta/2 - 1");
  }
  const int n_r = f.grid.n_r();
  RadialFourierTable table;
  table.grid = f.grid;
  table.k_min = k_min;
  table.k_max = k_max;
  table.coeffs.resize(static_cast<std::size_t>(k_max - k_min + 1) * n_r);
  std::vector<Complex> row(n);
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n; ++j) row[j] = f.at(i, j);
    const auto bins = dft_forward_scaled(row);
    for (int k = k_min; k <= k_max; ++k) {
      table.coeff_ref(k, i) = dft_coefficient(bins, k);
    }
  }
  return table;
}

Complex cauchy_integral(const EvaluableFunction& f, double r, Complex z, int n_nodes) {
  if (!(r > 0.0) || !std::isfinite(r)) throw ParameterError("integration radius must be positive");
  if (n_nodes < 8) throw ParameterError("cauchy_integral needs n_nodes >= 8");
  if (std::abs(std::abs(z) - r) < 1e-9) {
    throw SingularProximityError(
        "evaluation point within 1e-9 of the integration circle; use the spectral path");
  }
  Complex acc(0.0, 0.0);
  for (int j = 0; j < n_nodes; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n_nodes;
    const Complex zeta = r * Complex(std::cos(th), std::sin(th));
    acc += f(zeta) * zeta / (zeta - z);
  }
  return acc / static_cast<double>(n_nodes);
}

namespace {

SampledAnnulusFunction abel_sum(const RadialFourierTable& table, double t, Side side) {
  const int n_r = table.grid.n_r();
  const int n = table.grid.n_theta;
  SampledAnnulusFunction out;
  out.grid = table.grid;
  out.values.assign(static_cast<std::size_t>(n_r) * n, Complex(0.0, 0.0));
  const int k_top = side == Side::plus ? table.k_max : -table.k_min;
  if (k_top < 1) return out;
  for (int i = 0; i < n_r; ++i) {
    for (int j = 0; j < n; ++j) {
      const double th = table.grid.theta(j);
      const Complex u = side == Side::plus ? t * Complex(std::cos(th), std::sin(th))
                                           : t * Complex(std::cos(th), -std::sin(th));
      // Horner over the damped harmonics: sum_{k=1}^{K} c_{+-k} u^k
      Complex acc(0.0, 0.0);
      for (int k = k_top; k >= 1; --k) {
        const Complex c = side == Side::plus ? table.coeff(k, i) : table.coeff(-k, i);
        acc = acc * u + c;
      }
      out.at(i, j) = acc * u;
    }
  }
  return out;
}

}  // namespace

SampledAnnulusFunction abel_plus(const RadialFourierTable& table, AbelParameter t) {
  return abel_sum(table, t.t, Side::plus);
}

SampledAnnulusFunction abel_minus(const RadialFourierTable& table, AbelParameter t) {
  return abel_sum(table, t.t, Side::minus);
}

Complex poisson_circle(std::span<const Complex> f_on_circle, AbelParameter t, double theta) {
  const int n = static_cast<int>(f_on_circle.size());
  if (n < 8) throw ParameterError("poisson_circle needs at least 8 samples");
  const double tt = t.t;
  const double num = 1.0 - tt * tt;
  Complex acc(0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    const double phi = theta - 2.0 * std::numbers::pi * j / n;
    const double kernel = num / (1.0 - 2.0 * tt * std::cos(phi) + tt * tt);
    acc += f_on_circle[j] * kernel;
  }
  return acc / static_cast<double>(n);
}

}  // namespace annulus
