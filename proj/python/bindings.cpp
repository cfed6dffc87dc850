#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hypmeans/ball_geometry.hpp"
#include "hypmeans/fields.hpp"
#include "hypmeans/harmonics.hpp"
#include "hypmeans/harness.hpp"
#include "hypmeans/lorentz_group.hpp"
#include "hypmeans/quadrature.hpp"
#include "hypmeans/radial_calculus.hpp"
#include "hypmeans/rho_profile.hpp"
#include "hypmeans/spherical_means.hpp"

namespace py = pybind11;
using namespace hypmeans;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

Rational from_python(const py::handle& h) {
  Rational q(py::str(h).cast<std::string>());
  q.canonicalize();
  return q;
}

RhoProfile profile_from_dict(const py::dict& d) {
  RhoProfile::Terms terms;
  for (auto [m, c] : d) terms[m.cast<int>()] = from_python(c);
  return RhoProfile(std::move(terms));
}

py::dict profile_to_dict(const RhoProfile& p) {
  py::dict d;
  for (const auto& [m, c] : p.terms()) d[py::int_(m)] = to_fraction(c);
  return d;
}

AnnulusSpec annulus(double r, std::optional<double> outer) { return AnnulusSpec(r, outer); }

// a(rho) Y_kj with a the i-th kernel member and Y_kj the j-th basis harmonic.
SeparableField kernel_field(int n, int k, int i, int j) {
  const auto& b = basis(n, k);
  if (j < 1 || j > static_cast<int>(b.size())) throw std::invalid_argument("harmonic index j out of range");
  return SeparableField::harmonic(family_member_factored(n, k, i), b[static_cast<std::size_t>(j - 1)]);
}

Suite suite_from_name(const std::string& name) {
  for (Suite s : all_suites())
    if (suite_name(s) == name) return s;
  throw std::invalid_argument("unknown suite: " + name);
}

ExperimentConfig config_from_text(const std::string& text) {
  std::istringstream in(text);
  return ExperimentConfig::parse(in);
}

py::dict record_to_dict(const Record& r) {
  py::dict d;
  d["experiment"] = r.experiment;
  d["n"] = r.n < 0 ? py::object(py::none()) : py::object(py::int_(r.n));
  d["k"] = r.k < 0 ? py::object(py::none()) : py::object(py::int_(r.k));
  d["j"] = r.j < 0 ? py::object(py::none()) : py::object(py::int_(r.j));
  d["i"] = r.i < 0 ? py::object(py::none()) : py::object(py::int_(r.i));
  d["x"] = r.x;
  d["s"] = r.s;
  d["value"] = r.value;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hypmeans, m) {
  m.doc() = "Spherical means on the Poincare ball: geometry, exact radial calculus and verification suites";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("hyperbolic_distance", [](std::vector<double> x, std::vector<double> y) {
    return hyperbolic_distance(PointBall(std::move(x)), PointBall(std::move(y)));
  }, py::arg("x"), py::arg("y"));
  m.def("rho_of_s", &rho_of_s, py::arg("s"));
  m.def("s_of_rho", &s_of_rho, py::arg("rho"));
  m.def("admissible", [](std::vector<double> x, double s, double r, std::optional<double> outer) {
    return admissible(SphereSpec(PointBall(std::move(x)), s), annulus(r, outer));
  }, py::arg("x"), py::arg("s"), py::arg("r"), py::arg("R") = std::nullopt);

  m.def("boost", [](int n, double t, int p) { return LorentzMatrix::boost(n, t, p).matrix(); },
        py::arg("n"), py::arg("t"), py::arg("p"));
  m.def("transport_to", [](std::vector<double> x) { return transport_to(PointBall(std::move(x))).matrix(); },
        py::arg("x"));
  m.def("apply_isometry", [](const Eigen::MatrixXd& g, std::vector<double> x) {
    const PointBall y = apply(LorentzMatrix(g), PointBall(std::move(x)));
    return std::vector<double>(y.coords().begin(), y.coords().end());
  }, py::arg("g"), py::arg("x"));

  m.def("family_member", [](int n, int k, int i) { return profile_to_dict(family_member(n, k, i)); },
        py::arg("n"), py::arg("k"), py::arg("i"),
        "Exponent -> Fraction map of (1-rho^2)^(n+i-2) / rho^(n+k-2).");
  m.def("apply_Am", [](int mm, const py::dict& a) { return profile_to_dict(apply_Am(mm, profile_from_dict(a))); },
        py::arg("m"), py::arg("profile"));
  m.def("apply_Am_product_form",
        [](int mm, const py::dict& a) { return profile_to_dict(apply_Am_product_form(mm, profile_from_dict(a))); },
        py::arg("m"), py::arg("profile"));
  m.def("apply_Lk_radial",
        [](int n, int k, const py::dict& a) { return profile_to_dict(apply_Lk_radial(n, k, profile_from_dict(a))); },
        py::arg("n"), py::arg("k"), py::arg("profile"));
  m.def("ladder_holds", [](int n, int k) { return kernel_ladder_check(n, k).all_ok(); }, py::arg("n"), py::arg("k"));
  m.def("eigen_shift", &eigen_shift, py::arg("n"), py::arg("k"));
  m.def("harmonic_dimension", &dimension, py::arg("n"), py::arg("k"));

  m.def("indicial_exponents", [](int n, int k) {
    const IndicialExponents e = indicial_exponents(n, k);
    return py::make_tuple(e.alpha, e.beta);
  }, py::arg("n"), py::arg("k"));
  m.def("decay_slope", [](int n, int k, int i, double s_lo, double s_hi, int samples) {
    return decay_fit(family_member_factored(n, k, i), s_lo, s_hi, samples);
  }, py::arg("n"), py::arg("k"), py::arg("i"), py::arg("s_lo") = 3.0, py::arg("s_hi") = 6.0, py::arg("samples") = 61);

  m.def("mean", [](const std::function<double(std::vector<double>)>& f, std::vector<double> x, double s, int order) {
    const BallFunction fn{[&f](std::span<const double> y) { return f(std::vector<double>(y.begin(), y.end())); },
                          std::nullopt};
    const int n = static_cast<int>(x.size());
    return mean(fn, PointBall(std::move(x)), s, build_rule(n, order));
  }, py::arg("f"), py::arg("x"), py::arg("s"), py::arg("order"),
        "Quadrature spherical mean of a Python callable f(list) over S_s(x).");
  m.def("kernel_mean", [](int n, int k, int i, int j, std::vector<double> x, double s, int order) {
    const SeparableField f = kernel_field(n, k, i, j);
    return mean(f.as_function(), PointBall(std::move(x)), s, build_rule(n, order));
  }, py::arg("n"), py::arg("k"), py::arg("i"), py::arg("j"), py::arg("x"), py::arg("s"), py::arg("order"));
  m.def("kernel_value", [](int n, int k, int i, int j, const std::vector<double>& x) {
    return kernel_field(n, k, i, j).value(x);
  }, py::arg("n"), py::arg("k"), py::arg("i"), py::arg("j"), py::arg("x"));

  m.def("suite_names", [] {
    std::vector<std::string> names;
    for (Suite s : all_suites()) names.push_back(suite_name(s));
    return names;
  });
  m.def("run_suite", [](const std::string& name, const std::string& config) {
    SuiteReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(suite_from_name(name), config_from_text(config));
    }
    py::dict d;
    d["suite"] = r.suite;
    d["passed"] = r.passed();
    d["failed"] = r.failed();
    d["ok"] = r.ok();
    d["notes"] = r.notes;
    py::list records;
    for (const Record& rec : r.records) records.append(record_to_dict(rec));
    d["records"] = records;
    return d;
  }, py::arg("name"), py::arg("config") = "", "Runs one suite; config is INI text (empty for defaults).");
  m.def("report_csv", [](const std::vector<std::string>& names, const std::string& config) {
    const ExperimentConfig cfg = config_from_text(config);
    std::vector<SuiteReport> reports;
    {
      py::gil_scoped_release release;
      for (const auto& name : names) reports.push_back(run_suite(suite_from_name(name), cfg));
    }
    std::ostringstream out;
    write_csv(out, cfg, reports);
    return out.str();
  }, py::arg("names"), py::arg("config") = "");
}
