#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "annulus/decompose.hpp"
#include "annulus/lambda_domains.hpp"
#include "annulus/serialization.hpp"
#include "annulus/validation.hpp"
#include "annulus/zero_mean.hpp"

namespace py = pybind11;
using namespace annulus;

namespace {

py::array_t<Complex> values_array(const SampledAnnulusFunction& f) {
  py::array_t<Complex> out({f.grid.n_r(), f.grid.n_theta});
  auto view = out.mutable_unchecked<2>();
  for (int i = 0; i < f.grid.n_r(); ++i) {
    for (int j = 0; j < f.grid.n_theta; ++j) view(i, j) = f.at(i, j);
  }
  return out;
}

SampledAnnulusFunction sampled_from_array(const PolarGrid& grid,
                                          const py::array_t<Complex>& values) {
  if (values.ndim() != 2 || values.shape(0) != grid.n_r() || values.shape(1) != grid.n_theta) {
    throw ParameterError("values array shape must be (n_r, n_theta)");
  }
  SampledAnnulusFunction f;
  f.grid = grid;
  f.values.resize(static_cast<std::size_t>(grid.n_r()) * grid.n_theta);
  auto view = values.unchecked<2>();
  for (int i = 0; i < grid.n_r(); ++i) {
    for (int j = 0; j < grid.n_theta; ++j) f.at(i, j) = view(i, j);
  }
  f.validate();
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero-circle-means toolkit on annuli: testing, splitting, and extension evaluation";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_ArithmeticError);
  py::register_exception<SingularProximityError>(m, "SingularProximityError", PyExc_ValueError);
  py::register_exception<ConditioningError>(m, "ConditioningError", PyExc_ArithmeticError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
  py::register_exception<EstimationError>(m, "EstimationError", PyExc_ArithmeticError);
  static py::exception<ZeroMeanRejection> rejection(m, "ZeroMeanRejection", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ZeroMeanRejection& e) {
      rejection(e.what());
    }
  });

  py::enum_<Side>(m, "Side").value("plus", Side::plus).value("minus", Side::minus);

  py::enum_<RadialLayout>(m, "RadialLayout")
      .value("uniform", RadialLayout::uniform)
      .value("chebyshev_r2", RadialLayout::chebyshev_r2);

  py::enum_<OmegaRegion>(m, "OmegaRegion")
      .value("plus", OmegaRegion::plus)
      .value("minus", OmegaRegion::minus)
      .value("boundary_sigma", OmegaRegion::boundary_sigma)
      .value("outside", OmegaRegion::outside);

  py::class_<Annulus>(m, "Annulus")
      .def(py::init<double, double>(), py::arg("r1"), py::arg("r2"))
      .def_readonly("r1", &Annulus::r1)
      .def_readonly("r2", &Annulus::r2)
      .def_property_readonly("mid_radius", &Annulus::mid_radius)
      .def_property_readonly("center_bound", &Annulus::center_bound)
      .def("contains", &Annulus::contains)
      .def("__repr__", [](const Annulus& a) {
        return "Annulus(" + std::to_string(a.r1) + ", " + std::to_string(a.r2) + ")";
      });

  py::class_<CircleSpec>(m, "CircleSpec")
      .def(py::init<Complex, double>(), py::arg("center"), py::arg("radius"))
      .def_readonly("center", &CircleSpec::center)
      .def_readonly("radius", &CircleSpec::radius)
      .def("point", &CircleSpec::point);

  py::class_<PolarGrid>(m, "PolarGrid")
      .def_readonly("radii", &PolarGrid::radii)
      .def_readonly("n_theta", &PolarGrid::n_theta)
      .def_property_readonly("n_r", &PolarGrid::n_r)
      .def("theta", &PolarGrid::theta)
      .def("point", &PolarGrid::point)
      .def("annulus", &PolarGrid::annulus);

  py::class_<SampledAnnulusFunction>(m, "SampledAnnulusFunction")
      .def(py::init(&sampled_from_array), py::arg("grid"), py::arg("values"))
      .def_readonly("grid", &SampledAnnulusFunction::grid)
      .def_property_readonly("values", &values_array)
      .def("max_abs", &SampledAnnulusFunction::max_abs);

  py::class_<EvaluableFunction>(m, "EvaluableFunction")
      .def(py::init([](std::function<Complex(Complex)> fn, const std::string& description) {
             return EvaluableFunction{std::move(fn), description};
           }),
           py::arg("fn"), py::arg("description") = "")
      .def_readonly("description", &EvaluableFunction::description)
      .def("__call__", [](const EvaluableFunction& f, Complex z) { return f(z); });

  py::class_<C2Point>(m, "C2Point")
      .def(py::init<Complex, Complex>(), py::arg("z"), py::arg("w"))
      .def_readonly("z", &C2Point::z)
      .def_readonly("w", &C2Point::w);

  py::class_<AbelParameter>(m, "AbelParameter")
      .def(py::init<double>(), py::arg("t"))
      .def_readonly("t", &AbelParameter::t);
  py::implicitly_convertible<double, AbelParameter>();

  py::class_<RadialFourierTable>(m, "RadialFourierTable")
      .def_readonly("grid", &RadialFourierTable::grid)
      .def_readonly("k_min", &RadialFourierTable::k_min)
      .def_readonly("k_max", &RadialFourierTable::k_max)
      .def("coeff", &RadialFourierTable::coeff, py::arg("k"), py::arg("radius_index"));

  py::class_<ZeroMeanCoefficients>(m, "ZeroMeanCoefficients")
      .def_static("zeros", &ZeroMeanCoefficients::zeros, py::arg("n_max"))
      .def_readonly("n_max", &ZeroMeanCoefficients::n_max)
      .def_readwrite("plus", &ZeroMeanCoefficients::plus)
      .def_readwrite("minus", &ZeroMeanCoefficients::minus)
      .def("validate", &ZeroMeanCoefficients::validate);

  py::class_<ZeroMeanReport>(m, "ZeroMeanReport")
      .def_readonly("c0_norm", &ZeroMeanReport::c0_norm)
      .def_readonly("residuals", &ZeroMeanReport::residuals)
      .def_readonly("verdict", &ZeroMeanReport::verdict)
      .def_readonly("tolerance", &ZeroMeanReport::tolerance)
      .def_readonly("scale", &ZeroMeanReport::scale)
      .def_readonly("tail_mass", &ZeroMeanReport::tail_mass)
      .def("max_residual", &ZeroMeanReport::max_residual);

  py::class_<DecompositionDiagnostics>(m, "DecompositionDiagnostics")
      .def_readonly("c0_residual", &DecompositionDiagnostics::c0_residual)
      .def_readonly("tail_mass", &DecompositionDiagnostics::tail_mass);

  py::class_<Decomposition>(m, "Decomposition")
      .def_readonly("plus", &Decomposition::plus)
      .def_readonly("minus", &Decomposition::minus)
      .def_readonly("coeffs", &Decomposition::coeffs)
      .def_readonly("diagnostics", &Decomposition::diagnostics);

  py::class_<ExtensionResidual>(m, "ExtensionResidual")
      .def_readonly("circle", &ExtensionResidual::circle)
      .def_readonly("side", &ExtensionResidual::side)
      .def_readonly("offending_coefficient_norm",
                    &ExtensionResidual::offending_coefficient_norm);

  py::class_<AbelConvergenceEntry>(m, "AbelConvergenceEntry")
      .def_readonly("t", &AbelConvergenceEntry::t)
      .def_readonly("dist_plus", &AbelConvergenceEntry::dist_plus)
      .def_readonly("dist_minus", &AbelConvergenceEntry::dist_minus);

  py::class_<HoelderEstimate>(m, "HoelderEstimate")
      .def_readonly("alpha_hat", &HoelderEstimate::alpha_hat)
      .def_readonly("m_hat", &HoelderEstimate::m_hat);

  py::class_<LambdaSpec>(m, "LambdaSpec")
      .def(py::init([](const CircleSpec& c, Side s) { return LambdaSpec{c, s}; }),
           py::arg("circle"), py::arg("side"))
      .def_readonly("circle", &LambdaSpec::circle)
      .def_readonly("side", &LambdaSpec::side);

  py::class_<OmegaMembership>(m, "OmegaMembership")
      .def_readonly("region", &OmegaMembership::region)
      .def_readonly("witness_center", &OmegaMembership::witness_center)
      .def_readonly("residual", &OmegaMembership::residual);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("identity_name", &OracleReport::identity_name)
      .def_readonly("max_abs_error", &OracleReport::max_abs_error)
      .def_readonly("samples_tested", &OracleReport::samples_tested)
      .def_readonly("tolerance", &OracleReport::tolerance)
      .def_readonly("pass_", &OracleReport::pass)
      .def_readonly("excluded", &OracleReport::excluded);

  // grid and sampling
  m.def("make_grid", &make_grid, py::arg("annulus"), py::arg("n_r"), py::arg("n_theta"),
        py::arg("layout") = RadialLayout::chebyshev_r2);
  m.def(
      "make_grid",
      [](const Annulus& a, int n_r, int n_theta, const std::string& layout) {
        return make_grid(a, n_r, n_theta, radial_layout_from_string(layout));
      },
      py::arg("annulus"), py::arg("n_r"), py::arg("n_theta"), py::arg("layout"));
  m.def("sample", &sample, py::arg("f"), py::arg("grid"));
  m.def("circle_in_annulus_surrounding_origin", &circle_in_annulus_surrounding_origin,
        py::arg("circle"), py::arg("annulus"), py::arg("strict") = false);

  // circle transforms
  m.def("circle_mean", &circle_mean, py::arg("f"), py::arg("circle"),
        py::arg("n_nodes") = kDefaultQuadratureNodes);
  m.def("radial_fourier", &radial_fourier, py::arg("f"), py::arg("k_min"), py::arg("k_max"));
  m.def("cauchy_integral", &cauchy_integral, py::arg("f"), py::arg("r"), py::arg("z"),
        py::arg("n_nodes") = kDefaultQuadratureNodes);
  m.def("abel_plus", &abel_plus, py::arg("table"), py::arg("t"));
  m.def("abel_minus", &abel_minus, py::arg("table"), py::arg("t"));
  m.def(
      "poisson_circle",
      [](const std::vector<Complex>& values, AbelParameter t, double theta) {
        return poisson_circle(values, t, theta);
      },
      py::arg("f_on_circle"), py::arg("t"), py::arg("theta"));

  // zero-mean engine
  m.def("fit_radial_profiles", &fit_radial_profiles, py::arg("table"), py::arg("annulus"),
        py::arg("n_max"), py::arg("tol") = 1e-8);
  m.def("check_zero_means", &check_zero_means, py::arg("f"), py::arg("n_max"),
        py::arg("tol") = 1e-8);
  m.def("synthesize", &synthesize, py::arg("coeffs"));
  m.def("random_zero_mean", &random_zero_mean, py::arg("seed"), py::arg("n_max"),
        py::arg("decay"), py::arg("annulus") = Annulus(1.0, 2.0));

  // decomposition
  m.def("split", &split, py::arg("f"), py::arg("n_max"), py::arg("tol") = 1e-8);
  m.def(
      "abel_path_split",
      [](const SampledAnnulusFunction& f, int n_max, const std::vector<double>& schedule,
         double tol) { return abel_path_split(f, n_max, schedule, tol); },
      py::arg("f"), py::arg("n_max"), py::arg("t_schedule"), py::arg("tol") = 1e-8);
  m.def("default_abel_schedule", &default_abel_schedule,
        py::arg("length") = kDefaultAbelScheduleLength);
  m.def("check_circle_extension", &check_circle_extension, py::arg("g"), py::arg("circle"),
        py::arg("side"), py::arg("n_probe"), py::arg("annulus"));
  m.def("hoelder_estimate", &hoelder_estimate, py::arg("f"));

  // attached-domain geometry and extensions
  m.def("lambda_contains", &lambda_contains, py::arg("p"), py::arg("spec"), py::arg("tol"));
  m.def("omega_membership", &omega_membership, py::arg("p"), py::arg("annulus"),
        py::arg("solver_tol") = 1e-10);
  m.def("lambda_intersect_plus_plus", &lambda_intersect_plus_plus, py::arg("c1"), py::arg("c2"));
  m.def("lambda_intersect_plus_minus", &lambda_intersect_plus_minus, py::arg("c1"),
        py::arg("c2"));
  m.def("eval_g_plus", &eval_g_plus, py::arg("coeffs"), py::arg("p"));
  m.def("eval_g_minus", &eval_g_minus, py::arg("coeffs"), py::arg("p"));
  m.def("eval_f_t", &eval_f_t, py::arg("coeffs"), py::arg("side"), py::arg("t"), py::arg("p"));
  m.def("eval_f_limit", &eval_f_limit, py::arg("coeffs"), py::arg("side"), py::arg("p"));
  m.def("eval_psi", &eval_psi, py::arg("coeffs"), py::arg("p"));
  m.def("reflect", &reflect, py::arg("zeta"), py::arg("circle"));
  m.def(
      "boundary_approach_path",
      [](Complex z0, const Annulus& a, const std::vector<double>& distances) {
        return boundary_approach_path(z0, a, distances);
      },
      py::arg("z0"), py::arg("annulus"), py::arg("distances"));

  // oracles
  m.def(
      "check_cauchy_abel",
      [](const EvaluableFunction& f, const RadialFourierTable& table,
         const std::vector<double>& t_values, int n_samples, double tol, std::uint64_t seed) {
        return check_cauchy_abel(f, table, t_values, n_samples, tol, seed);
      },
      py::arg("f"), py::arg("table"), py::arg("t_values"), py::arg("n_samples"),
      py::arg("tol") = 1e-8, py::arg("seed") = 20240901);
  m.def(
      "check_poisson_identity",
      [](const SampledAnnulusFunction& f, const std::vector<double>& t_values, double tol) {
        return check_poisson_identity(f, t_values, tol);
      },
      py::arg("f"), py::arg("t_values"), py::arg("tol") = 1e-9);
  m.def("brute_force_lambda_intersection", &brute_force_lambda_intersection, py::arg("spec1"),
        py::arg("spec2"), py::arg("n_starts"), py::arg("seed") = 20240902);
  m.def(
      "check_reflection_poisson",
      [](const std::vector<Complex>& trace, const CircleSpec& c, int n_probe, double tol,
         std::uint64_t seed) { return check_reflection_poisson(trace, c, n_probe, tol, seed); },
      py::arg("f_on_circle"), py::arg("circle"), py::arg("n_probe"), py::arg("tol") = 1e-8,
      py::arg("seed") = 20240903);

  // JSON bridges (strings; file layout matches the CLI)
  m.def("sampled_to_json", [](const SampledAnnulusFunction& f) { return sampled_to_json(f).dump(); });
  m.def("sampled_from_json",
        [](const std::string& s) { return sampled_from_json(nlohmann::json::parse(s)); });
  m.def("coeffs_to_json", [](const ZeroMeanCoefficients& c) { return coeffs_to_json(c).dump(); });
  m.def("coeffs_from_json",
        [](const std::string& s) { return coeffs_from_json(nlohmann::json::parse(s)); });

  m.attr("__version__") = "0.1.0";
}
