#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "annulus/circle_transform.hpp"
#include "annulus/core.hpp"
#include "annulus/lambda_domains.hpp"

namespace annulus {

// Brute-force oracles and cross-identity checks. Everything here stays
// independent of the fitting/splitting path it is used to validate: only
// quadrature, transforms, and the geometric predicates are touched.

struct OracleReport {
  std::string identity_name;
  double max_abs_error = 0.0;
  int samples_tested = 0;
  double tolerance = 0.0;
  bool pass = false;
  int excluded = 0;  // samples skipped near singular configurations
};

/// Compares the Cauchy-integral quadrature against the damped spectral sums on
/// randomly sampled (radius, angle, t) triples, both inside (factor t) and
/// outside (factor 1/t, with the sign flip) the circle.
OracleReport check_cauchy_abel(const EvaluableFunction& f, const RadialFourierTable& table,
                               std::span<const double> t_values, int n_samples,
                               double tol = 1e-8, std::uint64_t seed = 20240901);

/// Compares abel_plus + abel_minus against the discrete Poisson integral of
/// each radius row.
OracleReport check_poisson_identity(const SampledAnnulusFunction& f,
                                    std::span<const double> t_values, double tol = 1e-9);

/// Searches for a common point of two sheets by parametrizing the first by its
/// z-fiber coordinate and running damped Newton on the second sheet's equation
/// from n_starts random starts. True iff a witness satisfying both side
/// conditions is found with defect below 1e-10.
bool brute_force_lambda_intersection(const LambdaSpec& s1, const LambdaSpec& s2,
                                     int n_starts, std::uint64_t seed = 20240902);

/// For interior points z of the disc: the Cauchy extension inside at z plus the
/// outside extension at the reflected point must reproduce the Poisson integral
/// of the circle samples. Points within 1e-3 * radius of the circle are
/// excluded and counted.
OracleReport check_reflection_poisson(std::span<const Complex> f_on_circle,
                                      const CircleSpec& c, int n_probe,
                                      double tol = 1e-8, std::uint64_t seed = 20240903);

}  // namespace annulus
