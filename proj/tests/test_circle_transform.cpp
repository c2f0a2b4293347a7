#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "annulus/circle_transform.hpp"
#include "annulus/fft.hpp"
#include "annulus/zero_mean.hpp"
#include "helpers.hpp"

using namespace annulus;
using namespace annulus::testing;

TEST_CASE("transform convention against a 3-node hand computation") {
  // x = {0, 1, 0}: out[m] = (1/3) e^{-2 pi i m / 3}
  const std::vector<Complex> x{Complex(0, 0), Complex(1, 0), Complex(0, 0)};
  const auto bins = dft_forward_scaled(x);
  const double s3 = std::sqrt(3.0) / 6.0;
  CHECK(std::abs(bins[0] - Complex(1.0 / 3.0, 0.0)) < 1e-15);
  CHECK(std::abs(bins[1] - Complex(-1.0 / 6.0, -s3)) < 1e-15);
  CHECK(std::abs(bins[2] - Complex(-1.0 / 6.0, s3)) < 1e-15);
  // signed harmonic lookup wraps: c_{-1} sits in the last bin
  CHECK(dft_coefficient(bins, -1) == bins[2]);
  CHECK(dft_coefficient(bins, 1) == bins[1]);
}

TEST_CASE("radix-2 path agrees with direct summation") {
  std::mt19937_64 rng(42);
  std::vector<Complex> x(256);
  for (auto& v : x) v = Complex(2.0 * unit_double(rng) - 1.0, 2.0 * unit_double(rng) - 1.0);
  const auto fast = dft_forward_scaled(x);
  // direct reference sum
  const int n = static_cast<int>(x.size());
  for (int m = 0; m < n; ++m) {
    Complex acc(0, 0);
    for (int j = 0; j < n; ++j) {
      const double ang = -2.0 * std::numbers::pi * j * m / n;
      acc += x[j] * Complex(std::cos(ang), std::sin(ang));
    }
    acc /= static_cast<double>(n);
    CHECK(std::abs(fast[m] - acc) < 1e-13);
  }
}

TEST_CASE("circle_mean basics") {
  const EvaluableFunction five{[](Complex) { return Complex(5.0, 0.0); }, "5"};
  CHECK(std::abs(circle_mean(five, CircleSpec(Complex(0.3, -0.7), 2.0)) - Complex(5, 0)) <
        1e-14);

  // mean-value property: the mean of z over any circle is the center
  const EvaluableFunction ident{[](Complex z) { return z; }, "z"};
  CHECK(std::abs(circle_mean(ident, CircleSpec(Complex(0.0, 0.4), 1.2)) - Complex(0.0, 0.4)) <
        1e-14);

  // 1/z over a circle surrounding the origin: the two residues cancel
  const EvaluableFunction inv{[](Complex z) { return 1.0 / z; }, "1/z"};
  const CircleSpec c(Complex(0.2, 0.0), 1.5);
  CHECK(std::abs(circle_mean(inv, c)) < 1e-13);
  CHECK(std::abs(circle_mean(inv, c, 10000)) < 1e-13);

  CHECK_THROWS_AS(circle_mean(five, CircleSpec(0.0, 1.0), 4), ParameterError);
}

TEST_CASE("radial_fourier isolates single modes") {
  const auto grid = make_grid(Annulus(1.0, 2.0), 9, 64, RadialLayout::chebyshev_r2);

  SUBCASE("1/z has only the k=-1 mode with profile 1/r") {
    const EvaluableFunction f{[](Complex z) { return 1.0 / z; }, "1/z"};
    const auto table = radial_fourier(sample(f, grid), -5, 5);
    for (int i = 0; i < grid.n_r(); ++i) {
      CHECK(std::abs(table.coeff(-1, i) - Complex(1.0 / grid.radii[i], 0.0)) < 1e-14);
      for (int k = -5; k <= 5; ++k) {
        if (k != -1) CHECK(std::abs(table.coeff(k, i)) <= 1e-13);
      }
    }
    // slow quadrature cross-check at one interior radius
    const double r = grid.radii[4];
    CHECK(std::abs(fourier_coefficient_quadrature(f, r, -1) - table.coeff(-1, 4)) < 1e-12);
  }

  SUBCASE("conj(z)^2 has only the k=-2 mode with profile r^2") {
    const EvaluableFunction f{[](Complex z) { return std::conj(z) * std::conj(z); }, "conj^2"};
    const auto table = radial_fourier(sample(f, grid), -5, 5);
    for (int i = 0; i < grid.n_r(); ++i) {
      const double r = grid.radii[i];
      CHECK(std::abs(table.coeff(-2, i) - Complex(r * r, 0.0)) < 1e-13);
      for (int k = -5; k <= 5; ++k) {
        if (k != -2) CHECK(std::abs(table.coeff(k, i)) <= 1e-13);
      }
    }
    CHECK(std::abs(fourier_coefficient_quadrature(f, grid.radii[2], -2) - table.coeff(-2, 2)) <
          1e-11);
  }

  SUBCASE("zero function gives an all-zero table") {
    const auto table =
        radial_fourier(sample({[](Complex) { return Complex(0, 0); }, "0"}, grid), -3, 3);
    for (const auto& v : table.coeffs) CHECK(v == Complex(0, 0));
  }

  SUBCASE("bounds beyond the aliasing cutoff are rejected") {
    const auto s = sample({[](Complex z) { return z; }, "z"}, grid);
    CHECK_THROWS_AS(radial_fourier(s, -32, 5), ParameterError);
    CHECK_THROWS_AS(radial_fourier(s, -5, 32), ParameterError);
    CHECK_THROWS_AS(radial_fourier(s, 1, 5), ParameterError);
  }
}

TEST_CASE("cauchy_integral against residue values") {
  const EvaluableFunction one{[](Complex) { return Complex(1, 0); }, "1"};
  CHECK(std::abs(cauchy_integral(one, 1.5, Complex(0.3, 0.2)) - Complex(1, 0)) < 1e-14);

  const EvaluableFunction inv{[](Complex z) { return 1.0 / z; }, "1/z"};
  // inside: residues at 0 and z cancel
  CHECK(std::abs(cauchy_integral(inv, 1.5, Complex(0.5, 0.0))) < 1e-13);
  // outside: single residue at 0 gives -1/z
  CHECK(std::abs(cauchy_integral(inv, 1.5, Complex(3.0, 0.0)) - Complex(-1.0 / 3.0, 0.0)) <
        1e-12);

  CHECK_THROWS_AS(cauchy_integral(inv, 1.5, Complex(1.5 + 5e-10, 0.0)), SingularProximityError);
  CHECK_THROWS_AS(cauchy_integral(inv, 1.5, std::polar(1.5, 1.0)), SingularProximityError);
}

TEST_CASE("abel sums damp single harmonics") {
  const auto grid = make_grid(Annulus(1.0, 2.0), 9, 64, RadialLayout::chebyshev_r2);

  SUBCASE("two-mode function splits into damped exponentials") {
    const auto table = radial_fourier(sample(one_over_z_plus_one_over_conj(), grid), -31, 31);
    const auto plus = abel_plus(table, AbelParameter(0.5));
    const auto minus = abel_minus(table, AbelParameter(0.5));
    for (int i = 0; i < grid.n_r(); ++i) {
      for (int j = 0; j < grid.n_theta; ++j) {
        const double r = grid.radii[i];
        const double th = grid.theta(j);
        const Complex expected_plus = 0.5 / r * Complex(std::cos(th), std::sin(th));
        const Complex expected_minus = 0.5 / r * Complex(std::cos(th), -std::sin(th));
        CHECK(std::abs(plus.at(i, j) - expected_plus) < 1e-13);
        CHECK(std::abs(minus.at(i, j) - expected_minus) < 1e-13);
      }
    }
  }

  SUBCASE("tables without positive modes sum to zero") {
    const EvaluableFunction f{[](Complex z) { return 1.0 / z; }, "1/z"};
    const auto table = radial_fourier(sample(f, grid), -31, 31);
    const auto plus = abel_plus(table, AbelParameter(0.9));
    for (const auto& v : plus.values) CHECK(std::abs(v) < 1e-13);
  }

  SUBCASE("k=2 harmonic picks up t^2") {
    const EvaluableFunction f{[](Complex z) { return z / std::conj(z); }, "z/conj(z)"};
    const auto table = radial_fourier(sample(f, grid), -31, 31);
    const auto plus = abel_plus(table, AbelParameter(0.9));
    for (int i = 0; i < grid.n_r(); ++i) {
      for (int j = 0; j < grid.n_theta; ++j) {
        const double th = grid.theta(j);
        const Complex expected = 0.81 * Complex(std::cos(2 * th), std::sin(2 * th));
        CHECK(std::abs(plus.at(i, j) - expected) < 1e-13);
      }
    }
  }

  SUBCASE("k=-3 harmonic from conj(z)/z^2, profile checked by quadrature first") {
    const EvaluableFunction f{[](Complex z) { return std::conj(z) / (z * z); }, "conj(z)/z^2"};
    // oracle: the only mode is k=-3 with c_{-3}(r) = 1/r
    const double r_probe = grid.radii[3];
    CHECK(std::abs(fourier_coefficient_quadrature(f, r_probe, -3) -
                   Complex(1.0 / r_probe, 0.0)) < 1e-12);
    CHECK(std::abs(fourier_coefficient_quadrature(f, r_probe, -1)) < 1e-12);

    const auto table = radial_fourier(sample(f, grid), -31, 31);
    const auto minus = abel_minus(table, AbelParameter(0.7));
    const double damp = 0.7 * 0.7 * 0.7;
    for (int i = 0; i < grid.n_r(); ++i) {
      for (int j = 0; j < grid.n_theta; ++j) {
        const double r = grid.radii[i];
        const double th = grid.theta(j);
        const Complex expected = damp / r * Complex(std::cos(3 * th), -std::sin(3 * th));
        CHECK(std::abs(minus.at(i, j) - expected) < 1e-13);
      }
    }
  }
}

TEST_CASE("poisson_circle closed forms") {
  const int n = 512;
  std::vector<Complex> constant(n, Complex(2.5, -1.0));
  CHECK(std::abs(poisson_circle(constant, AbelParameter(0.5), 0.9) - Complex(2.5, -1.0)) <
        1e-13);
  CHECK(std::abs(poisson_circle(constant, AbelParameter(0.9), 2.3) - Complex(2.5, -1.0)) <
        1e-10);

  std::vector<Complex> cosine(n);
  for (int j = 0; j < n; ++j) cosine[j] = std::cos(2.0 * std::numbers::pi * j / n);
  CHECK(std::abs(poisson_circle(cosine, AbelParameter(0.5), 0.0) - Complex(0.5, 0.0)) < 1e-12);

  std::vector<Complex> sine2(n);
  for (int j = 0; j < n; ++j) sine2[j] = std::sin(2.0 * 2.0 * std::numbers::pi * j / n);
  CHECK(std::abs(poisson_circle(sine2, AbelParameter(0.9), std::numbers::pi / 4) -
                 Complex(0.81, 0.0)) < 1e-12);

  CHECK_THROWS_AS(AbelParameter(0.0), ParameterError);
  CHECK_THROWS_AS(AbelParameter(1.0), ParameterError);
  CHECK_THROWS_AS(AbelParameter(-0.5), ParameterError);
}

TEST_CASE("cauchy quadrature matches the damped sums on the grid") {
  // band-limited random function; quadrature uses many more nodes than the band
  const auto grid = make_grid(Annulus(1.0, 2.0), 17, 64, RadialLayout::chebyshev_r2);
  const auto f = synthesize(random_zero_mean(3, 6, 0.5, Annulus(1.0, 2.0)));
  const auto table = radial_fourier(sample(f, grid), -31, 31);
  for (double t : {0.3, 0.7, 0.95}) {
    const auto plus = abel_plus(table, AbelParameter(t));
    const auto minus = abel_minus(table, AbelParameter(t));
    for (int i = 0; i < grid.n_r(); ++i) {
      const double r = grid.radii[i];
      for (int j = 0; j < grid.n_theta; ++j) {
        const Complex dir(std::cos(grid.theta(j)), std::sin(grid.theta(j)));
        const Complex inside = cauchy_integral(f, r, t * r * dir, 2048);
        const Complex outside = cauchy_integral(f, r, (r / t) * dir, 2048);
        CHECK(std::abs(inside - plus.at(i, j)) <= 1e-8);
        CHECK(std::abs(outside + minus.at(i, j)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("abel sums against the poisson integral per row") {
  const Annulus a(1.0, 2.0);
  const auto grid = make_grid(a, 9, 256, RadialLayout::chebyshev_r2);
  const auto f = sample(synthesize(random_zero_mean(5, 6, 0.5, a)), grid);
  const auto table = radial_fourier(f, -127, 127);
  std::vector<Complex> row(grid.n_theta);
  for (double t : {0.3, 0.7, 0.9}) {
    const AbelParameter at(t);
    const auto plus = abel_plus(table, at);
    const auto minus = abel_minus(table, at);
    for (int i = 0; i < grid.n_r(); ++i) {
      for (int j = 0; j < grid.n_theta; ++j) row[j] = f.at(i, j);
      for (int j = 0; j < grid.n_theta; j += 7) {
        const Complex lhs = plus.at(i, j) + minus.at(i, j);
        const Complex rhs = poisson_circle(row, at, grid.theta(j));
        CHECK(std::abs(lhs - rhs) <= 1e-10);
      }
    }
  }
}

TEST_CASE("parseval bound per radius") {
  const auto grid = make_grid(Annulus(1.0, 2.0), 9, 64, RadialLayout::chebyshev_r2);
  const auto f = sample(one_over_z_plus_one_over_conj(), grid);
  const auto table = radial_fourier(f, -31, 31);
  for (int i = 0; i < grid.n_r(); ++i) {
    double sum = 0.0;
    for (int k = -31; k <= 31; ++k) sum += std::norm(table.coeff(k, i));
    double row_max = 0.0;
    for (int j = 0; j < grid.n_theta; ++j) row_max = std::max(row_max, std::abs(f.at(i, j)));
    CHECK(sum <= row_max * row_max + 1e-10);
  }
}

TEST_CASE("transform linearity with a fixed summation order") {
  const auto grid = make_grid(Annulus(1.0, 2.0), 5, 32, RadialLayout::uniform);
  std::mt19937_64 rng(77);
  SampledAnnulusFunction f, g;
  f.grid = g.grid = grid;
  const std::size_t total = static_cast<std::size_t>(grid.n_r()) * grid.n_theta;
  for (std::size_t idx = 0; idx < total; ++idx) {
    f.values.emplace_back(2.0 * unit_double(rng) - 1.0, 2.0 * unit_double(rng) - 1.0);
    g.values.emplace_back(2.0 * unit_double(rng) - 1.0, 2.0 * unit_double(rng) - 1.0);
  }
  const Complex alpha(1.25, -0.5);
  const Complex beta(-0.75, 2.0);
  SampledAnnulusFunction combo;
  combo.grid = grid;
  for (std::size_t idx = 0; idx < total; ++idx) {
    combo.values.push_back(alpha * f.values[idx] + beta * g.values[idx]);
  }
  const auto tf = radial_fourier(f, -15, 15);
  const auto tg = radial_fourier(g, -15, 15);
  const auto tc = radial_fourier(combo, -15, 15);
  for (std::size_t idx = 0; idx < tc.coeffs.size(); ++idx) {
    CHECK(std::abs(tc.coeffs[idx] - (alpha * tf.coeffs[idx] + beta * tg.coeffs[idx])) < 1e-13);
  }
}
