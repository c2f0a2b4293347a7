#pragma once

#include <json.hpp>
#include <string>

#include "annulus/circle_transform.hpp"
#include "annulus/core.hpp"
#include "annulus/decompose.hpp"
#include "annulus/lambda_domains.hpp"
#include "annulus/validation.hpp"
#include "annulus/zero_mean.hpp"

namespace annulus {

// JSON schemas (all carry "schema_version": 1; complex numbers are [re, im]):
//   sampled function: {"r1", "r2", "radii", "n_theta", "values"} with
//                     values[i][j] the sample at (radii[i], theta_j)
//   fourier table:    {"k_min", "k_max", "radii", "coeffs"} with row index k - k_min
//   coefficients:     {"n_max", "plus", "minus"} with plus[n-1] = a_n array
//   decomposition:    {"coeffs", "diagnostics": {"c0_residual", "tail_mass"}}

inline constexpr int kSchemaVersion = 1;

nlohmann::json complex_to_json(Complex v);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json sampled_to_json(const SampledAnnulusFunction& f);
SampledAnnulusFunction sampled_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const RadialFourierTable& table);

nlohmann::json coeffs_to_json(const ZeroMeanCoefficients& coeffs);
/// Accepts either the bare coefficient object or a decomposition wrapper
/// holding it under "coeffs".
ZeroMeanCoefficients coeffs_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const Decomposition& d);

nlohmann::json report_to_json(const ZeroMeanReport& report);
nlohmann::json oracle_report_to_json(const OracleReport& report);
nlohmann::json membership_to_json(const OmegaMembership& membership);

nlohmann::json c2point_to_json(const C2Point& p);
C2Point c2point_from_json(const nlohmann::json& j);

/// Throws ParameterError on unreadable files or parse failures.
nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace annulus
