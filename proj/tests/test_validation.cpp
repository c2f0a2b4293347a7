#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "annulus/validation.hpp"
#include "annulus/zero_mean.hpp"
#include "helpers.hpp"

using namespace annulus;
using namespace annulus::testing;

TEST_CASE("cauchy vs abel cross-check") {
  const Annulus a(1.0, 2.0);
  const auto grid = make_grid(a, 17, 128, RadialLayout::chebyshev_r2);
  const std::vector<double> t_values{0.3, 0.7, 0.95};

  SUBCASE("two-mode closed form") {
    const auto f = one_over_z_plus_one_over_conj();
    const auto table = radial_fourier(sample(f, grid), -63, 63);
    const auto report = check_cauchy_abel(f, table, t_values, 500);
    CHECK(report.pass);
    CHECK(report.max_abs_error <= 1e-8);
    CHECK(report.samples_tested == 500);
    CHECK(report.pass == (report.max_abs_error <= report.tolerance));
  }

  SUBCASE("zero function is exact") {
    const EvaluableFunction f{[](Complex) { return Complex(0, 0); }, "0"};
    const auto table = radial_fourier(sample(f, grid), -63, 63);
    const auto report = check_cauchy_abel(f, table, t_values, 50);
    CHECK(report.max_abs_error == 0.0);
  }

  SUBCASE("random synthesized function") {
    const auto f = synthesize(random_zero_mean(7, 8, 0.5, a));
    const auto table = radial_fourier(sample(f, grid), -63, 63);
    const auto report = check_cauchy_abel(f, table, t_values, 500);
    CHECK(report.pass);
  }
}

TEST_CASE("abel sums vs poisson integral") {
  const Annulus a(1.0, 2.0);
  const auto grid = make_grid(a, 9, 256, RadialLayout::chebyshev_r2);
  const std::vector<double> t_values{0.3, 0.6, 0.9};

  SUBCASE("single harmonic closed form") {
    const auto f = sample(one_over_z_plus_one_over_conj(), grid);
    const auto report = check_poisson_identity(f, t_values, 1e-10);
    CHECK(report.pass);
    // direct closed form: the damped sum of 2 cos(theta)/r is 2 t cos(theta)/r
    const auto table = radial_fourier(f, -127, 127);
    const auto plus = abel_plus(table, AbelParameter(0.6));
    const auto minus = abel_minus(table, AbelParameter(0.6));
    for (int j = 0; j < grid.n_theta; j += 11) {
      const double expected = 2.0 * 0.6 * std::cos(grid.theta(j)) / grid.radii[2];
      CHECK(std::abs(plus.at(2, j) + minus.at(2, j) - Complex(expected, 0.0)) < 1e-12);
    }
  }

  SUBCASE("zero function") {
    const auto f = sample({[](Complex) { return Complex(0, 0); }, "0"}, grid);
    CHECK(check_poisson_identity(f, t_values, 1e-10).max_abs_error == 0.0);
  }

  SUBCASE("random synthesized function at 1e-9") {
    const auto f = sample(synthesize(random_zero_mean(7, 8, 0.5, a)), grid);
    const auto report = check_poisson_identity(f, t_values, 1e-9);
    CHECK(report.pass);
  }
}

TEST_CASE("brute-force sheet intersection oracle") {
  SUBCASE("surrounding circles intersect on the plus side") {
    const LambdaSpec s1{CircleSpec(0.0, 1.0), Side::plus};
    const LambdaSpec s2{CircleSpec(0.2, 1.5), Side::plus};
    CHECK(brute_force_lambda_intersection(s1, s2, 64));
  }
  SUBCASE("disjoint closed discs intersect plus against minus") {
    const LambdaSpec s1{CircleSpec(0.0, 1.0), Side::plus};
    const LambdaSpec s2{CircleSpec(3.0, 1.0), Side::minus};
    CHECK(brute_force_lambda_intersection(s1, s2, 64));
  }
  SUBCASE("overlapping discs give no plus-minus witness") {
    const LambdaSpec s1{CircleSpec(0.0, 1.0), Side::plus};
    const LambdaSpec s2{CircleSpec(1.5, 1.0), Side::minus};
    CHECK_FALSE(brute_force_lambda_intersection(s1, s2, 64));
  }
}

TEST_CASE("predicates agree with the oracle on random circle pairs") {
  std::mt19937_64 rng(601);
  int tested = 0;
  while (tested < 50) {
    const Complex a(3.0 * (2.0 * unit_double(rng) - 1.0), 3.0 * (2.0 * unit_double(rng) - 1.0));
    const Complex b(3.0 * (2.0 * unit_double(rng) - 1.0), 3.0 * (2.0 * unit_double(rng) - 1.0));
    const double rho = 0.3 + 2.2 * unit_double(rng);
    const double delta = 0.3 + 2.2 * unit_double(rng);
    const double d = std::abs(a - b);
    // stay clear of tangency/equality margins
    if (d < 1e-3) continue;
    if (std::abs(d + rho - delta) < 1e-3 || std::abs(d + delta - rho) < 1e-3) continue;
    if (std::abs(d - (rho + delta)) < 1e-3) continue;
    ++tested;
    const CircleSpec c1(a, rho), c2(b, delta);
    const bool pp_pred = lambda_intersect_plus_plus(c1, c2);
    const bool pp_oracle = brute_force_lambda_intersection({c1, Side::plus}, {c2, Side::plus},
                                                           128, 9000 + tested);
    CHECK(pp_pred == pp_oracle);
    const bool pm_pred = lambda_intersect_plus_minus(c1, c2);
    const bool pm_oracle = brute_force_lambda_intersection({c1, Side::plus}, {c2, Side::minus},
                                                           128, 9500 + tested);
    CHECK(pm_pred == pm_oracle);
  }
}

TEST_CASE("reflection sum reproduces the poisson integral inside a disc") {
  const CircleSpec c(Complex(0.2, -0.1), 1.5);
  const int n = 256;

  SUBCASE("trace of an analytic function") {
    std::vector<Complex> trace(n);
    for (int j = 0; j < n; ++j) {
      const Complex zeta = c.point(2.0 * std::numbers::pi * j / n);
      trace[j] = zeta * zeta + Complex(1.0, 0.5);
    }
    const auto report = check_reflection_poisson(trace, c, 64);
    CHECK(report.pass);
    CHECK(report.max_abs_error <= 1e-8);
    CHECK(report.samples_tested + report.excluded == 64);
  }

  SUBCASE("constant trace is reproduced to quadrature accuracy") {
    std::vector<Complex> trace(n, Complex(3.0, -2.0));
    const auto report = check_reflection_poisson(trace, c, 32);
    CHECK(report.max_abs_error <= 1e-12);
  }

  SUBCASE("pure negative harmonic, against the closed-form image") {
    // trace e^{-2 i theta}: the inside part vanishes, the reflected outside part
    // carries everything, and the poisson image at (s, phi) is s^2 e^{-2 i phi}
    std::vector<Complex> trace(n);
    for (int j = 0; j < n; ++j) {
      const double th = 2.0 * std::numbers::pi * j / n;
      trace[j] = Complex(std::cos(2 * th), -std::sin(2 * th));
    }
    const auto report = check_reflection_poisson(trace, c, 64);
    CHECK(report.pass);
    CHECK(report.max_abs_error <= 1e-9);
    for (double s : {0.3, 0.8}) {
      for (double phi : {0.4, 2.2}) {
        const Complex expected = s * s * Complex(std::cos(2 * phi), -std::sin(2 * phi));
        CHECK(std::abs(poisson_circle(trace, AbelParameter(s), phi) - expected) < 1e-12);
      }
    }
  }
}
