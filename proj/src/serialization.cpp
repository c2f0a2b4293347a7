#include "annulus/serialization.hpp"

#include <cmath>
#include <fstream>

namespace annulus {

using nlohmann::json;

namespace {

void require_schema(const json& j) {
  if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion) {
    throw ParameterError("unsupported schema_version");
  }
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ParameterError(std::string("missing or non-numeric field: ") + key);
  }
  return j.at(key).get<double>();
}

}  // namespace

json complex_to_json(Complex v) { return json::array({v.real(), v.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParameterError("complex values must be [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json sampled_to_json(const SampledAnnulusFunction& f) {
  json values = json::array();
  for (int i = 0; i < f.grid.n_r(); ++i) {
    json row = json::array();
    for (int j = 0; j < f.grid.n_theta; ++j) row.push_back(complex_to_json(f.at(i, j)));
    values.push_back(std::move(row));
  }
  return json{{"schema_version", kSchemaVersion},
              {"r1", f.grid.radii.front()},
              {"r2", f.grid.radii.back()},
              {"radii", f.grid.radii},
              {"n_theta", f.grid.n_theta},
              {"values", std::move(values)}};
}

SampledAnnulusFunction sampled_from_json(const json& j) {
  require_schema(j);
  if (!j.contains("radii") || !j.at("radii").is_array() || !j.contains("values") ||
      !j.at("values").is_array()) {
    throw ParameterError("sampled function needs 'radii' and 'values' arrays");
  }
  SampledAnnulusFunction f;
  f.grid.n_theta = static_cast<int>(number_field(j, "n_theta"));
  f.grid.radii = j.at("radii").get<std::vector<double>>();
  f.grid.validate();
  const double r1 = number_field(j, "r1");
  const double r2 = number_field(j, "r2");
  if (r1 != f.grid.radii.front() || r2 != f.grid.radii.back()) {
    throw ParameterError("r1/r2 fields disagree with the radii array");
  }
  const auto& values = j.at("values");
  if (values.size() != f.grid.radii.size()) {
    throw ParameterError("values row count does not match the radii");
  }
  f.values.reserve(values.size() * f.grid.n_theta);
  for (const auto& row : values) {
    if (!row.is_array() || static_cast<int>(row.size()) != f.grid.n_theta) {
      throw ParameterError("values row length does not match n_theta");
    }
    for (const auto& entry : row) f.values.push_back(complex_from_json(entry));
  }
  f.validate();
  return f;
}

json table_to_json(const RadialFourierTable& table) {
  json rows = json::array();
  for (int k = table.k_min; k <= table.k_max; ++k) {
    json row = json::array();
    for (int i = 0; i < table.grid.n_r(); ++i) row.push_back(complex_to_json(table.coeff(k, i)));
    rows.push_back(std::move(row));
  }
  return json{{"schema_version", kSchemaVersion},
              {"k_min", table.k_min},
              {"k_max", table.k_max},
              {"radii", table.grid.radii},
              {"coeffs", std::move(rows)}};
}

json coeffs_to_json(const ZeroMeanCoefficients& coeffs) {
  coeffs.validate();
  auto dump_side = [](const std::vector<std::vector<Complex>>& side) {
    json out = json::array();
    for (const auto& arr : side) {
      json row = json::array();
      for (const Complex& v : arr) row.push_back(complex_to_json(v));
      out.push_back(std::move(row));
    }
    return out;
  };
  return json{{"schema_version", kSchemaVersion},
              {"n_max", coeffs.n_max},
              {"plus", dump_side(coeffs.plus)},
              {"minus", dump_side(coeffs.minus)}};
}

ZeroMeanCoefficients coeffs_from_json(const json& j) {
  const json& body = j.contains("coeffs") ? j.at("coeffs") : j;
  require_schema(body);
  if (!body.contains("n_max") || !body.contains("plus") || !body.contains("minus")) {
    throw ParameterError("coefficients need 'n_max', 'plus', and 'minus'");
  }
  ZeroMeanCoefficients c;
  c.n_max = body.at("n_max").get<int>();
  auto load_side = [&](const json& side) {
    std::vector<std::vector<Complex>> out;
    if (!side.is_array()) throw ParameterError("coefficient sides must be arrays");
    for (const auto& arr : side) {
      std::vector<Complex> row;
      for (const auto& v : arr) row.push_back(complex_from_json(v));
      out.push_back(std::move(row));
    }
    return out;
  };
  c.plus = load_side(body.at("plus"));
  c.minus = load_side(body.at("minus"));
  c.validate();
  return c;
}

json decomposition_to_json(const Decomposition& d) {
  return json{{"schema_version", kSchemaVersion},
              {"coeffs", coeffs_to_json(d.coeffs)},
              {"diagnostics",
               {{"c0_residual", d.diagnostics.c0_residual},
                {"tail_mass", d.diagnostics.tail_mass}}}};
}

json report_to_json(const ZeroMeanReport& report) {
  json residuals = json::object();
  for (const auto& [n, r] : report.residuals) residuals[std::to_string(n)] = r;
  return json{{"schema_version", kSchemaVersion},
              {"verdict", report.verdict},
              {"c0_norm", report.c0_norm},
              {"tolerance", report.tolerance},
              {"scale", report.scale},
              {"tail_mass", report.tail_mass},
              {"max_residual", report.max_residual()},
              {"residuals", std::move(residuals)}};
}

json oracle_report_to_json(const OracleReport& report) {
  return json{{"identity_name", report.identity_name},
              {"max_abs_error", report.max_abs_error},
              {"samples_tested", report.samples_tested},
              {"tolerance", report.tolerance},
              {"pass", report.pass},
              {"excluded", report.excluded}};
}

json membership_to_json(const OmegaMembership& membership) {
  json out{{"region", to_string(membership.region)}, {"residual", membership.residual}};
  if (membership.witness_center) {
    out["witness_center"] = complex_to_json(*membership.witness_center);
  } else {
    out["witness_center"] = nullptr;
  }
  return out;
}

json c2point_to_json(const C2Point& p) {
  return json{{"z", complex_to_json(p.z)}, {"w", complex_to_json(p.w)}};
}

C2Point c2point_from_json(const json& j) {
  if (!j.contains("z") || !j.contains("w")) throw ParameterError("point needs 'z' and 'w'");
  return C2Point{complex_from_json(j.at("z")), complex_from_json(j.at("w"))};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParameterError("invalid JSON in file: " + path);
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write file: " + path);
  out << j.dump() << "\n";
  if (!out) throw ParameterError("write failed: " + path);
}

}  // namespace annulus
