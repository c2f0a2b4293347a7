// Command line front end: synthesize / check / decompose / omega.
// Exit codes: 0 success, 1 mathematical rejection, 2 I/O or format error,
// 3 internal error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "annulus/decompose.hpp"
#include "annulus/lambda_domains.hpp"
#include "annulus/serialization.hpp"
#include "annulus/validation.hpp"
#include "annulus/zero_mean.hpp"

using namespace annulus;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitFormat = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
  double r1 = 1.0;
  double r2 = 2.0;
  int n_r = 33;
  int n_theta = 256;
  std::string layout = "cheb";
  int n_max = 8;
  double zero_mean_tol = 1e-8;
  double extension_tol = 1e-8;
  double solver_tol = 1e-10;
  std::uint64_t seed = 0;
  double decay = 0.5;

  Annulus annulus() const { return Annulus(r1, r2); }
  PolarGrid grid() const {
    return make_grid(annulus(), n_r, n_theta, radial_layout_from_string(layout));
  }
  void validate() const {
    if (!(zero_mean_tol > 0.0) || !(extension_tol > 0.0) || !(solver_tol > 0.0)) {
      throw ParameterError("tolerances must be positive");
    }
    if (n_max < 1) throw ParameterError("n_max must be >= 1");
  }
};

struct ConfigCli {
  std::string config_path;
  std::optional<double> r1, r2;
  std::optional<std::string> grid_spec;
  std::optional<std::string> layout;
  std::optional<int> n_max;
  std::optional<double> tol;
  std::optional<double> extension_tol;
  std::optional<double> solver_tol;
  std::optional<std::uint64_t> seed;
};

void add_config_options(CLI::App* cmd, ConfigCli& cli) {
  cmd->add_option("--config", cli.config_path, "JSON run configuration file");
  cmd->add_option("--r1", cli.r1, "inner radius");
  cmd->add_option("--r2", cli.r2, "outer radius");
  cmd->add_option("--grid", cli.grid_spec, "grid size as NRxNTHETA, e.g. 33x256");
  cmd->add_option("--layout", cli.layout, "radial layout: uniform | cheb");
  cmd->add_option("--nmax", cli.n_max, "harmonic truncation order");
  cmd->add_option("--tol", cli.tol, "zero-mean verdict tolerance");
  cmd->add_option("--extension-tol", cli.extension_tol, "extension residual tolerance");
  cmd->add_option("--solver-tol", cli.solver_tol, "membership solver tolerance");
  cmd->add_option("--seed", cli.seed, "seed for randomized sweeps");
}

RunConfig resolve_config(const ConfigCli& cli) {
  RunConfig cfg;
  if (!cli.config_path.empty()) {
    const json j = load_json_file(cli.config_path);
    if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion) {
      throw ParameterError("unsupported config schema_version");
    }
    if (j.contains("r1")) cfg.r1 = j.at("r1").get<double>();
    if (j.contains("r2")) cfg.r2 = j.at("r2").get<double>();
    if (j.contains("n_r")) cfg.n_r = j.at("n_r").get<int>();
    if (j.contains("n_theta")) cfg.n_theta = j.at("n_theta").get<int>();
    if (j.contains("layout")) cfg.layout = j.at("layout").get<std::string>();
    if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<int>();
    if (j.contains("zero_mean_tol")) cfg.zero_mean_tol = j.at("zero_mean_tol").get<double>();
    if (j.contains("extension_tol")) cfg.extension_tol = j.at("extension_tol").get<double>();
    if (j.contains("solver_tol")) cfg.solver_tol = j.at("solver_tol").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("decay")) cfg.decay = j.at("decay").get<double>();
  }
  if (cli.r1) cfg.r1 = *cli.r1;
  if (cli.r2) cfg.r2 = *cli.r2;
  if (cli.grid_spec) {
    const auto& s = *cli.grid_spec;
    const auto x = s.find('x');
    if (x == std::string::npos) throw ParameterError("--grid expects NRxNTHETA");
    try {
      cfg.n_r = std::stoi(s.substr(0, x));
      cfg.n_theta = std::stoi(s.substr(x + 1));
    } catch (const std::exception&) {
      throw ParameterError("--grid expects NRxNTHETA");
    }
  }
  if (cli.layout) cfg.layout = *cli.layout;
  if (cli.n_max) cfg.n_max = *cli.n_max;
  if (cli.tol) cfg.zero_mean_tol = *cli.tol;
  if (cli.extension_tol) cfg.extension_tol = *cli.extension_tol;
  if (cli.solver_tol) cfg.solver_tol = *cli.solver_tol;
  if (cli.seed) cfg.seed = *cli.seed;
  cfg.validate();
  return cfg;
}

CircleSpec random_admissible_circle(std::mt19937_64& rng, const Annulus& a) {
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double width = a.r2 - a.r1;
  const double mag = 0.9 * a.center_bound() * std::sqrt(unit());
  const Complex center = std::polar(mag, 2.0 * 3.14159265358979323846 * unit());
  const double lo = a.r1 + std::abs(center) + 0.02 * width;
  const double hi = a.r2 - std::abs(center) - 0.02 * width;
  return CircleSpec(center, lo + (hi - lo) * unit());
}

void print_report_table(const ZeroMeanReport& report) {
  std::printf("zero-mean check: %s (tol %.3e)\n", report.verdict ? "PASS" : "FAIL",
              report.tolerance);
  std::printf("  c0_norm      %.6e\n", report.c0_norm);
  std::printf("  tail_mass    %.6e\n", report.tail_mass);
  std::printf("  %6s  %s\n", "n", "residual");
  for (const auto& [n, r] : report.residuals) {
    std::printf("  %6d  %.6e\n", n, r);
  }
}

int cmd_synthesize(const RunConfig& cfg, const std::string& coeffs_path,
                   std::optional<std::uint64_t> random_seed, const std::string& out_path,
                   const std::string& coeffs_out) {
  ZeroMeanCoefficients coeffs =
      random_seed ? random_zero_mean(*random_seed, cfg.n_max, cfg.decay, cfg.annulus())
                  : coeffs_from_json(load_json_file(coeffs_path));
  const auto f = synthesize(coeffs);
  const auto samples = sample(f, cfg.grid());
  save_json_file(out_path, sampled_to_json(samples));
  const json echo = coeffs_to_json(coeffs);
  std::cout << echo.dump() << "\n";
  if (!coeffs_out.empty()) save_json_file(coeffs_out, echo);
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, const std::string& path, const std::string& table_out) {
  const auto samples = sampled_from_json(load_json_file(path));
  if (!table_out.empty()) {
    const int cutoff = samples.grid.n_theta / 2 - 1;
    save_json_file(table_out, table_to_json(radial_fourier(samples, -cutoff, cutoff)));
  }
  const auto report = check_zero_means(samples, cfg.n_max, cfg.zero_mean_tol);
  print_report_table(report);
  std::cout << report_to_json(report).dump() << "\n";
  return report.verdict ? kExitOk : kExitRejected;
}

// one JSON line per identity over the golden corpus, machine-readable
int cmd_validate(const RunConfig& cfg) {
  const auto grid = cfg.grid();
  const Annulus a = cfg.annulus();
  std::vector<std::pair<std::string, ZeroMeanCoefficients>> corpus;
  {
    auto c = ZeroMeanCoefficients::zeros(1);
    c.plus[0][0] = Complex(1, 0);
    c.minus[0][0] = Complex(1, 0);
    corpus.emplace_back("two_first_harmonics", std::move(c));
  }
  {
    auto c = ZeroMeanCoefficients::zeros(2);
    c.plus[1][1] = Complex(1, 0);
    c.minus[1][1] = Complex(1, 0);
    corpus.emplace_back("two_second_harmonics", std::move(c));
  }
  corpus.emplace_back("seed_" + std::to_string(cfg.seed == 0 ? 7 : cfg.seed),
                      random_zero_mean(cfg.seed == 0 ? 7 : cfg.seed, cfg.n_max, cfg.decay, a));

  bool all_pass = true;
  std::mt19937_64 rng(2024);
  const std::vector<double> t_cauchy{0.3, 0.7, 0.95};
  const std::vector<double> t_poisson{0.3, 0.6, 0.9};
  for (const auto& [name, coeffs] : corpus) {
    const auto f = synthesize(coeffs);
    const auto samples = sample(f, grid);
    const int cutoff = grid.n_theta / 2 - 1;
    const auto table = radial_fourier(samples, -cutoff, cutoff);

    auto emit = [&](OracleReport rep) {
      rep.identity_name = name + ":" + rep.identity_name;
      std::cout << oracle_report_to_json(rep).dump() << "\n";
      all_pass = all_pass && rep.pass;
    };
    emit(check_cauchy_abel(f, table, t_cauchy, 500));
    emit(check_poisson_identity(samples, t_poisson));
    const auto c = random_admissible_circle(rng, a);
    std::vector<Complex> trace(256);
    for (int j = 0; j < 256; ++j) {
      trace[j] = f(c.point(2.0 * 3.14159265358979323846 * j / 256.0));
    }
    emit(check_reflection_poisson(trace, c, 64));
  }
  return all_pass ? kExitOk : kExitRejected;
}

int cmd_decompose(const RunConfig& cfg, const std::string& path, const std::string& out_path,
                  const std::string& plus_out, const std::string& minus_out, int verify_n) {
  const auto samples = sampled_from_json(load_json_file(path));
  const auto d = split(samples, cfg.n_max, cfg.zero_mean_tol);
  save_json_file(out_path, decomposition_to_json(d));
  std::printf("decomposition: c0_residual %.6e, tail_mass %.6e\n", d.diagnostics.c0_residual,
              d.diagnostics.tail_mass);
  if (!plus_out.empty()) {
    save_json_file(plus_out, sampled_to_json(sample(d.plus, samples.grid)));
  }
  if (!minus_out.empty()) {
    save_json_file(minus_out, sampled_to_json(sample(d.minus, samples.grid)));
  }
  if (verify_n > 0) {
    std::mt19937_64 rng(cfg.seed);
    const Annulus a = samples.grid.annulus();
    double worst_plus = 0.0, worst_minus = 0.0;
    for (int trial = 0; trial < verify_n; ++trial) {
      const auto c = random_admissible_circle(rng, a);
      worst_plus = std::max(
          worst_plus, check_circle_extension(d.plus, c, Side::plus, 256, a).offending_coefficient_norm);
      worst_minus = std::max(
          worst_minus,
          check_circle_extension(d.minus, c, Side::minus, 256, a).offending_coefficient_norm);
    }
    std::printf("extension sweep over %d circles: plus %.6e, minus %.6e (tol %.3e)\n", verify_n,
                worst_plus, worst_minus, cfg.extension_tol);
    if (worst_plus > cfg.extension_tol || worst_minus > cfg.extension_tol) return kExitRejected;
  }
  return kExitOk;
}

int cmd_omega_member(const RunConfig& cfg, double z_re, double z_im, double w_re, double w_im) {
  const C2Point p{Complex(z_re, z_im), Complex(w_re, w_im)};
  const auto m = omega_membership(p, cfg.annulus(), cfg.solver_tol);
  json out = membership_to_json(m);
  out["point"] = c2point_to_json(p);
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_omega_intersect(const RunConfig& cfg, const std::string& kind,
                        const std::vector<double>& v) {
  const CircleSpec c1(Complex(v[0], v[1]), v[2]);
  const CircleSpec c2(Complex(v[3], v[4]), v[5]);
  bool predicate = false;
  bool oracle = false;
  if (kind == "pp") {
    predicate = lambda_intersect_plus_plus(c1, c2);
    oracle = brute_force_lambda_intersection({c1, Side::plus}, {c2, Side::plus}, 128,
                                             cfg.seed + 1);
  } else if (kind == "pm") {
    predicate = lambda_intersect_plus_minus(c1, c2);
    oracle = brute_force_lambda_intersection({c1, Side::plus}, {c2, Side::minus}, 128,
                                             cfg.seed + 1);
  } else {
    throw ParameterError("intersect kind must be pp or pm");
  }
  const json out{{"kind", kind}, {"predicate", predicate}, {"oracle", oracle}};
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_omega_psi(const RunConfig& cfg, const std::string& coeffs_path, double z_re, double z_im,
                  const std::string& out_path, int n_points, double closest) {
  const auto coeffs = coeffs_from_json(load_json_file(coeffs_path));
  const auto f = synthesize(coeffs);
  const Complex z0(z_re, z_im);
  if (n_points < 2) throw ParameterError("need at least 2 path points");
  if (!(closest > 0.0)) throw ParameterError("closest distance must be positive");

  std::vector<double> distances(n_points);
  const double start = 0.3;
  for (int m = 0; m < n_points; ++m) {
    distances[m] = start * std::pow(closest / start, static_cast<double>(m) / (n_points - 1));
  }
  const auto path = boundary_approach_path(z0, cfg.annulus(), distances);
  const Complex target = f(z0);

  std::ofstream out(out_path);
  if (!out) throw ParameterError("cannot write file: " + out_path);
  out << "# psi_path v1: distance,abs_psi_minus_f\n";
  double final_err = 0.0;
  for (std::size_t m = 0; m < path.size(); ++m) {
    const double err = std::abs(eval_psi(coeffs, path[m]) - target);
    final_err = err;
    out << distances[m] << "," << err << "\n";
  }
  const double sup = sample(f, cfg.grid()).max_abs();
  std::printf("psi approach to z0=(%g,%g): final |psi - f| %.6e at distance %.3e (sup |f| %.6e)\n",
              z_re, z_im, final_err, distances.back(), sup);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-circle-means toolkit on annuli"};
  app.require_subcommand(1);

  ConfigCli cli;

  // synthesize
  auto* syn = app.add_subcommand("synthesize", "sample a certified zero-mean function");
  std::string syn_coeffs;
  std::optional<std::uint64_t> syn_random;
  std::string syn_out, syn_coeffs_out;
  syn->add_option("coeffs-file", syn_coeffs, "coefficients JSON file");
  syn->add_option("--random", syn_random, "generate coefficients from this seed");
  syn->add_option("--out", syn_out, "output sampled-function JSON")->required();
  syn->add_option("--coeffs-out", syn_coeffs_out, "also write the coefficients here");
  add_config_options(syn, cli);

  // check
  auto* chk = app.add_subcommand("check", "test the zero-circle-means property");
  std::string chk_file, chk_table_out;
  chk->add_option("function-file", chk_file, "sampled-function JSON")->required();
  chk->add_option("--table-out", chk_table_out, "also write the radial Fourier table here");
  add_config_options(chk, cli);

  // validate
  auto* val = app.add_subcommand("validate",
                                 "run the cross-identity oracles over the golden corpus");
  add_config_options(val, cli);

  // decompose
  auto* dec = app.add_subcommand("decompose", "split into plus and minus halves");
  std::string dec_file, dec_out, dec_plus, dec_minus;
  int dec_verify = 0;
  dec->add_option("function-file", dec_file, "sampled-function JSON")->required();
  dec->add_option("--out", dec_out, "decomposition JSON output")->required();
  dec->add_option("--plus-out", dec_plus, "sampled plus half output");
  dec->add_option("--minus-out", dec_minus, "sampled minus half output");
  dec->add_option("--verify", dec_verify, "sweep N random circles for extension residuals");
  add_config_options(dec, cli);

  // omega member|intersect|psi
  auto* omega = app.add_subcommand("omega", "geometry of the attached domains");
  omega->require_subcommand(1);

  auto* member = omega->add_subcommand("member", "classify a point of C^2");
  std::vector<double> member_coords;
  member->add_option("coords", member_coords, "z_re z_im w_re w_im")->expected(4);
  add_config_options(member, cli);

  auto* inter = omega->add_subcommand("intersect", "sheet intersection predicate vs oracle");
  std::string inter_kind;
  std::vector<double> inter_coords;
  inter->add_option("kind", inter_kind, "pp or pm")->required();
  inter->add_option("circles", inter_coords, "a_re a_im rho b_re b_im delta")->expected(6);
  add_config_options(inter, cli);

  auto* psi = omega->add_subcommand("psi", "evaluate the extension along a boundary approach");
  std::string psi_coeffs, psi_out;
  std::vector<double> psi_target;
  int psi_points = 10;
  double psi_closest = 1e-3;
  psi->add_option("target", psi_target, "z_re z_im")->expected(2);
  psi->add_option("--coeffs", psi_coeffs, "coefficients JSON file")->required();
  psi->add_option("--out", psi_out, "CSV output path")->required();
  psi->add_option("--points", psi_points, "number of path points");
  psi->add_option("--closest", psi_closest, "final distance to the boundary point");
  add_config_options(psi, cli);

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig cfg = resolve_config(cli);
    if (*syn) {
      if (syn_coeffs.empty() && !syn_random) {
        std::cerr << "error: provide a coefficients file or --random SEED\n";
        return kExitFormat;
      }
      if (!syn_coeffs.empty() && syn_random) {
        std::cerr << "error: coefficients file and --random are mutually exclusive\n";
        return kExitFormat;
      }
      return cmd_synthesize(cfg, syn_coeffs, syn_random, syn_out, syn_coeffs_out);
    }
    if (*chk) return cmd_check(cfg, chk_file, chk_table_out);
    if (*val) return cmd_validate(cfg);
    if (*dec) return cmd_decompose(cfg, dec_file, dec_out, dec_plus, dec_minus, dec_verify);
    if (*member) {
      if (member_coords.size() != 4) throw ParameterError("member needs z_re z_im w_re w_im");
      return cmd_omega_member(cfg, member_coords[0], member_coords[1], member_coords[2],
                              member_coords[3]);
    }
    if (*inter) {
      if (inter_coords.size() != 6) throw ParameterError("intersect needs 6 circle numbers");
      return cmd_omega_intersect(cfg, inter_kind, inter_coords);
    }
    if (*psi) {
      if (psi_target.size() != 2) throw ParameterError("psi needs target z_re z_im");
      return cmd_omega_psi(cfg, psi_coeffs, psi_target[0], psi_target[1], psi_out, psi_points,
                           psi_closest);
    }
    std::cerr << "error: no subcommand\n";
    return kExitFormat;
  } catch (const ZeroMeanRejection& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    std::cout << report_to_json(e.report()).dump() << "\n";
    return kExitRejected;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
