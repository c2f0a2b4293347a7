#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "annulus/core.hpp"
#include "helpers.hpp"

using namespace annulus;

TEST_CASE("annulus invariants") {
  CHECK_THROWS_AS(Annulus(0.0, 1.0), ParameterError);
  CHECK_THROWS_AS(Annulus(-1.0, 2.0), ParameterError);
  CHECK_THROWS_AS(Annulus(2.0, 2.0), ParameterError);
  CHECK_THROWS_AS(Annulus(2.0, 1.0), ParameterError);
  const Annulus a(1.0, 3.0);
  CHECK(a.mid_radius() == doctest::Approx(2.0));
  CHECK(a.center_bound() == doctest::Approx(1.0));
}

TEST_CASE("uniform grid endpoints and midpoints") {
  const auto grid = make_grid(Annulus(1.0, 2.0), 3, 8, RadialLayout::uniform);
  REQUIRE(grid.n_r() == 3);
  CHECK(grid.radii[0] == 1.0);
  CHECK(grid.radii[1] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(grid.radii[2] == 2.0);

  const auto two = make_grid(Annulus(1.0, 2.0), 2, 8, RadialLayout::uniform);
  CHECK(two.radii[0] == 1.0);
  CHECK(two.radii[1] == 2.0);
  const auto two_cheb = make_grid(Annulus(1.0, 2.0), 2, 8, RadialLayout::chebyshev_r2);
  CHECK(two_cheb.radii[0] == 1.0);
  CHECK(two_cheb.radii[1] == 2.0);
}

TEST_CASE("chebyshev-in-r2 nodes match the cosine formula") {
  const int n_r = 33;
  const auto grid = make_grid(Annulus(1.0, 3.0), n_r, 64, RadialLayout::chebyshev_r2);
  // oracle: Chebyshev-Lobatto nodes on [1, 9] directly from the cosine formula
  for (int i = 0; i < n_r; ++i) {
    const double expected = 5.0 - 4.0 * std::cos(std::numbers::pi * i / (n_r - 1));
    CHECK(grid.radii[i] * grid.radii[i] == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(grid.radii.front() == 1.0);
  CHECK(grid.radii.back() == 3.0);
  for (int i = 1; i < n_r; ++i) CHECK(grid.radii[i] > grid.radii[i - 1]);
}

TEST_CASE("grid parameter validation") {
  CHECK_THROWS_AS(make_grid(Annulus(1.0, 2.0), 1, 8, RadialLayout::uniform), ParameterError);
  CHECK_THROWS_AS(make_grid(Annulus(1.0, 2.0), 3, 12, RadialLayout::uniform), ParameterError);
  CHECK_THROWS_AS(make_grid(Annulus(1.0, 2.0), 3, 4, RadialLayout::uniform), ParameterError);
  CHECK_THROWS_AS(radial_layout_from_string("spiral"), ParameterError);
  CHECK(radial_layout_from_string("cheb") == RadialLayout::chebyshev_r2);
  CHECK(radial_layout_from_string("uniform") == RadialLayout::uniform);
}

TEST_CASE("sampling evaluates on the grid nodes") {
  const auto grid = make_grid(Annulus(1.0, 2.0), 2, 8, RadialLayout::uniform);

  const auto zero = sample({[](Complex) { return Complex(0.0, 0.0); }, "zero"}, grid);
  for (const auto& v : zero.values) CHECK(v == Complex(0.0, 0.0));

  const auto ident = sample({[](Complex z) { return z; }, "z"}, grid);
  CHECK(std::abs(ident.at(0, 2) - Complex(0.0, 1.0)) < 1e-15);  // r=1, theta=pi/2

  const auto inv_conj = sample({[](Complex z) { return 1.0 / std::conj(z); }, "1/conj(z)"}, grid);
  CHECK(inv_conj.at(1, 0) == Complex(0.5, 0.0));  // r=2, theta=0

  CHECK_THROWS_AS(
      sample({[](Complex z) { return z == Complex(1.0, 0.0) ? Complex(NAN, 0.0) : z; }, "bad"},
             grid),
      EvaluationError);
}

TEST_CASE("sampling is deterministic bit for bit") {
  const auto grid = make_grid(Annulus(1.0, 2.0), 9, 32, RadialLayout::chebyshev_r2);
  const EvaluableFunction f{[](Complex z) { return std::sin(z) / z + std::exp(0.3 * z); }, "mix"};
  const auto s1 = sample(f, grid);
  const auto s2 = sample(f, grid);
  REQUIRE(s1.values.size() == s2.values.size());
  CHECK(std::memcmp(s1.values.data(), s2.values.data(),
                    s1.values.size() * sizeof(Complex)) == 0);
}

TEST_CASE("circle containment predicate") {
  const Annulus a(1.0, 2.0);
  CHECK(circle_in_annulus_surrounding_origin(CircleSpec(0.0, 1.5), a));
  CHECK_FALSE(circle_in_annulus_surrounding_origin(CircleSpec(0.6, 1.5), a));
  CHECK(circle_in_annulus_surrounding_origin(CircleSpec(0.2, 1.7), a));
  // non-surrounding circle fails outright
  CHECK_FALSE(circle_in_annulus_surrounding_origin(CircleSpec(Complex(1.5, 0.0), 0.3), a));
  // boundary-touching circle passes only the closed version
  CHECK(circle_in_annulus_surrounding_origin(CircleSpec(0.0, 1.0), a, false));
  CHECK_FALSE(circle_in_annulus_surrounding_origin(CircleSpec(0.0, 1.0), a, true));
}

TEST_CASE("contained circles stay inside the ring at every angle") {
  const Annulus a(1.0, 2.0);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = annulus::testing::random_admissible_circle(rng, a);
    REQUIRE(circle_in_annulus_surrounding_origin(c, a));
    for (int j = 0; j < 720; ++j) {
      const double r = std::abs(c.point(2.0 * std::numbers::pi * j / 720.0));
      CHECK(r >= a.r1 - 1e-12);
      CHECK(r <= a.r2 + 1e-12);
    }
  }
}
