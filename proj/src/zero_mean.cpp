#include "annulus/zero_mean.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

namespace annulus {

namespace {

// Rows whose normalized profile norm falls below this multiple of the spectral
// scale are treated as identically zero harmonics; the threshold sits well
// above transform roundoff and well below any resolvable coefficient.
constexpr double kZeroRowFloor = 1e-12;

Complex horner(const std::vector<Complex>& coeffs, double x) {
  Complex acc(0.0, 0.0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

using LComplex = std::complex<long double>;
using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// Power-basis coefficients of the Chebyshev polynomials, T[m][p] = coeff of u^p.
// Extended precision: the basis change is the worst-conditioned step of the fit.
std::vector<std::vector<long double>> chebyshev_power_table(int max_degree) {
  std::vector<std::vector<long double>> T(static_cast<std::size_t>(max_degree) + 1);
  T[0] = {1.0L};
  if (max_degree >= 1) T[1] = {0.0L, 1.0L};
  for (int m = 2; m <= max_degree; ++m) {
    std::vector<long double> c(static_cast<std::size_t>(m) + 1, 0.0L);
    for (std::size_t p = 0; p < T[m - 1].size(); ++p) c[p + 1] += 2.0L * T[m - 1][p];
    for (std::size_t p = 0; p < T[m - 2].size(); ++p) c[p] -= T[m - 2][p];
    T[m] = std::move(c);
  }
  return T;
}

// p(u) -> q(x) under the substitution u = alpha*x + gamma.
std::vector<LComplex> compose_affine(const std::vector<LComplex>& p, long double alpha,
                                     long double gamma) {
  std::vector<LComplex> q;
  for (std::size_t k = p.size(); k-- > 0;) {
    std::vector<LComplex> next(q.size() + 1, LComplex(0.0L, 0.0L));
    for (std::size_t i = 0; i < q.size(); ++i) {
      next[i + 1] += alpha * q[i];
      next[i] += gamma * q[i];
    }
    next[0] += p[k];
    q = std::move(next);
  }
  if (q.empty()) q.emplace_back(0.0L, 0.0L);
  return q;
}

}  // namespace

ZeroMeanCoefficients ZeroMeanCoefficients::zeros(int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  ZeroMeanCoefficients c;
  c.n_max = n_max;
  c.plus.resize(n_max);
  c.minus.resize(n_max);
  for (int n = 1; n <= n_max; ++n) {
    c.plus[n - 1].assign(n, Complex(0.0, 0.0));
    c.minus[n - 1].assign(n, Complex(0.0, 0.0));
  }
  return c;
}

void ZeroMeanCoefficients::validate() const {
  if (n_max < 1) throw ParameterError("coefficients need n_max >= 1");
  if (plus.size() != static_cast<std::size_t>(n_max) ||
      minus.size() != static_cast<std::size_t>(n_max)) {
    throw ParameterError("coefficient arrays do not match n_max");
  }
  for (int n = 1; n <= n_max; ++n) {
    if (plus[n - 1].size() != static_cast<std::size_t>(n) ||
        minus[n - 1].size() != static_cast<std::size_t>(n)) {
      throw ParameterError("harmonic " + std::to_string(n) + " must carry exactly " +
                           std::to_string(n) + " entries");
    }
    for (const auto& arr : {plus[n - 1], minus[n - 1]}) {
      for (const Complex& v : arr) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
          throw ParameterError("coefficient entries must be finite");
        }
      }
    }
  }
}

double ZeroMeanReport::max_residual() const {
  double m = scale > 0.0 ? c0_norm / scale : 0.0;
  for (const auto& [n, r] : residuals) m = std::max(m, r);
  return m;
}

ZeroMeanRejection::ZeroMeanRejection(ZeroMeanReport report)
    : Error([&report] {
        std::ostringstream oss;
        oss << "input fails the zero-circle-means hypothesis (c0_norm=" << report.c0_norm
            << ", max residual=" << report.max_residual() << ", tol=" << report.tolerance
            << ")";
        return oss.str();
      }()),
      report_(std::move(report)) {}

std::pair<ZeroMeanCoefficients, ZeroMeanReport> fit_radial_profiles(
    const RadialFourierTable& table, const Annulus& annulus, int n_max, double tol) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  if (table.k_max < n_max || table.k_min > -n_max) {
    throw ParameterError("table harmonic range does not cover n_max");
  }
  const int n_r = table.grid.n_r();
  if (n_r < n_max + 1) {
    throw ParameterError("need at least n_max + 1 radii so every fit is determined");
  }

  const double x_lo = annulus.r1 * annulus.r1;
  const double x_hi = annulus.r2 * annulus.r2;
  const double alpha = 2.0 / (x_hi - x_lo);
  const double gamma = -(x_hi + x_lo) / (x_hi - x_lo);

  VectorXld u(n_r);
  for (int i = 0; i < n_r; ++i) {
    const long double r = table.grid.radii[i];
    u[i] = static_cast<long double>(alpha) * r * r + static_cast<long double>(gamma);
  }

  // spectral scale: largest per-radius L2 norm of the coefficient column,
  // a lower bound for max |f| on that circle
  double scale = 0.0;
  for (int i = 0; i < n_r; ++i) {
    double s = 0.0;
    for (int k = table.k_min; k <= table.k_max; ++k) s += std::norm(table.coeff(k, i));
    scale = std::max(scale, std::sqrt(s));
  }

  ZeroMeanCoefficients coeffs = ZeroMeanCoefficients::zeros(n_max);
  ZeroMeanReport report;
  report.tolerance = tol;
  report.scale = scale;

  for (int i = 0; i < n_r; ++i) {
    report.c0_norm = std::max(report.c0_norm, std::abs(table.coeff(0, i)));
  }

  const auto cheb = chebyshev_power_table(std::max(0, n_max - 1));

  for (int deg = 1; deg <= n_max; ++deg) {
    MatrixXld design(n_r, deg);
    for (int i = 0; i < n_r; ++i) {
      design(i, 0) = 1.0L;
      if (deg > 1) design(i, 1) = u[i];
      for (int m = 2; m < deg; ++m) {
        design(i, m) = 2.0L * u[i] * design(i, m - 1) - design(i, m - 2);
      }
    }
    Eigen::ColPivHouseholderQR<MatrixXld> qr(design);
    if (qr.rank() < deg) {
      throw ConditioningError("radial design matrix is rank deficient (duplicate radii?)");
    }

    for (int sign : {+1, -1}) {
      const int n = sign * deg;
      VectorXld y_re(n_r), y_im(n_r);
      for (int i = 0; i < n_r; ++i) {
        const long double rpow = std::pow(static_cast<long double>(table.grid.radii[i]),
                                          static_cast<long double>(deg));
        const Complex c = table.coeff(n, i);
        y_re[i] = rpow * static_cast<long double>(c.real());
        y_im[i] = rpow * static_cast<long double>(c.imag());
      }
      const VectorXld b_re = qr.solve(y_re);
      const VectorXld b_im = qr.solve(y_im);
      const double misfit = static_cast<double>(
          std::sqrt((design * b_re - y_re).squaredNorm() + (design * b_im - y_im).squaredNorm()));
      const double y_norm =
          static_cast<double>(std::sqrt(y_re.squaredNorm() + y_im.squaredNorm()));
      const double zero_floor = kZeroRowFloor * scale * std::pow(annulus.r2, deg);
      double residual = 0.0;
      if (misfit > 0.0 && y_norm > zero_floor) residual = misfit / y_norm;
      report.residuals[n] = residual;

      std::vector<LComplex> in_u(deg, LComplex(0.0L, 0.0L));
      for (int m = 0; m < deg; ++m) {
        const LComplex beta(b_re[m], b_im[m]);
        for (std::size_t p = 0; p < cheb[m].size(); ++p) in_u[p] += beta * cheb[m][p];
      }
      const std::vector<LComplex> in_x =
          compose_affine(in_u, static_cast<long double>(alpha), static_cast<long double>(gamma));
      std::vector<Complex>& target = sign > 0 ? coeffs.plus[deg - 1] : coeffs.minus[deg - 1];
      for (int p = 0; p < deg; ++p) {
        const LComplex v = p < static_cast<int>(in_x.size()) ? in_x[p] : LComplex(0.0L, 0.0L);
        target[p] = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
      }
    }
  }

  for (int k = table.k_min; k <= table.k_max; ++k) {
    if (std::abs(k) <= n_max) continue;
    double mx = 0.0;
    for (int i = 0; i < n_r; ++i) mx = std::max(mx, std::abs(table.coeff(k, i)));
    report.tail_mass += mx;
  }

  bool ok = report.c0_norm <= tol;
  for (const auto& [n, r] : report.residuals) ok = ok && (r <= tol);
  report.verdict = ok;
  return {std::move(coeffs), std::move(report)};
}

ZeroMeanReport check_zero_means(const SampledAnnulusFunction& f, int n_max, double tol) {
  f.validate();
  const int cutoff = f.grid.n_theta / 2 - 1;
  if (n_max < 1 || n_max > cutoff) {
    throw ParameterError("n_max exceeds the angular resolution of the grid");
  }
  const auto table = radial_fourier(f, -cutoff, cutoff);
  return fit_radial_profiles(table, f.grid.annulus(), n_max, tol).second;
}

EvaluableFunction synthesize(const ZeroMeanCoefficients& coeffs) {
  coeffs.validate();
  std::string desc = "synthesized(n_max=" + std::to_string(coeffs.n_max) + ")";
  return EvaluableFunction{
      [c = coeffs](Complex z) -> Complex {
        const double x = std::norm(z);
        const Complex inv_conj = 1.0 / std::conj(z);
        const Complex inv = 1.0 / z;
        Complex acc(0.0, 0.0);
        Complex pw_plus(1.0, 0.0);
        Complex pw_minus(1.0, 0.0);
        // per harmonic: conj(z)^{-n} p_n(|z|^2) + z^{-n} q_n(|z|^2)
        for (int n = 1; n <= c.n_max; ++n) {
          pw_plus *= inv_conj;
          pw_minus *= inv;
          acc += pw_plus * horner(c.plus[n - 1], x);
          acc += pw_minus * horner(c.minus[n - 1], x);
        }
        return acc;
      },
      std::move(desc)};
}

ZeroMeanCoefficients random_zero_mean(std::uint64_t seed, int n_max, double decay,
                                      const Annulus& annulus) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
  if (!(decay > 0.0) || !std::isfinite(decay)) throw ParameterError("decay must be positive");
  std::mt19937_64 rng(seed);
  // explicit bit mapping keeps the stream identical across platforms
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto draw = [&]() {
    const double mag = 0.3 + 0.7 * std::sqrt(unit());
    const double phase = 2.0 * std::numbers::pi * unit();
    return std::polar(mag, phase);
  };
  ZeroMeanCoefficients c = ZeroMeanCoefficients::zeros(n_max);
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 0; j < n; ++j) {
      const int e = 2 * j - n;  // monomial grows like r^e on the ring
      const double sup = std::max(std::pow(annulus.r1, e), std::pow(annulus.r2, e));
      c.plus[n - 1][j] = draw() * std::exp(-decay * n) / sup;
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 0; j < n; ++j) {
      const int e = 2 * j - n;
      const double sup = std::max(std::pow(annulus.r1, e), std::pow(annulus.r2, e));
      c.minus[n - 1][j] = draw() * std::exp(-decay * n) / sup;
    }
  }
  return c;
}

}  // namespace annulus
