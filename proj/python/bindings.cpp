#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resum/anharmonic.hpp"
#include "resum/errors.hpp"
#include "resum/laplace.hpp"
#include "resum/pade.hpp"
#include "resum/polyroot.hpp"

namespace py = pybind11;
using namespace resum;

namespace {

py::object fraction(const BigRat& r) { return py::module_::import("fractions").attr("Fraction")(rat_to_string(r)); }

py::object scalar(const Scalar& s, int digits) {
  if (s.is_exact()) return fraction(s.rat());
  return py::str(s.flt().to_string(digits));
}

/// Estimates travel as dicts: exact decimal strings plus float shortcuts.
py::dict estimate(const Estimate& e, int digits) {
  py::dict d;
  d["value"] = e.value.to_string(digits);
  d["location"] = e.location_t.to_string(digits);
  d["criterion"] = to_string(e.criterion);
  d["N"] = e.order_N;
  d["L"] = e.L;
  d["pole_on_axis"] = e.pole_on_axis;
  d["value_float"] = e.value.to_double();
  return d;
}

py::list series(const GenSeries& s, int digits) {
  py::list out;
  const GenSeries flat = s.folded();
  for (const auto& t : flat.terms()) out.append(py::make_tuple(fraction(t.exponent), scalar(t.coeff, digits)));
  return out;
}

/// Accepts anything whose str() is a rational: Fractions, ints, 'p/q' strings.
std::vector<Scalar> parse_thetas(const py::iterable& thetas) {
  std::vector<Scalar> out;
  for (const auto& t : thetas) out.emplace_back(parse_rat(py::str(t).cast<std::string>()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_resum, m) {
  m.doc() = "Resummation of divergent series by the generalized binomial transform";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<NoCandidate>(m, "NoCandidate", PyExc_RuntimeError);
  py::register_exception<NoStationaryPoint>(m, "NoStationaryPoint", PyExc_RuntimeError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_RuntimeError);

  m.def(
      "fbar_poly", [](long N) { return series(laplace::fbar_poly(N), 20); }, py::arg("N"),
      "Transformed Laplace-type polynomial as (exponent, coefficient) pairs.");
  m.def(
      "laplace_pms", [](long N, long L, int digits) { return estimate(laplace::pms_estimate(N, L), digits); },
      py::arg("N"), py::arg("L") = 0, py::arg("digits") = 20, "Plateau-top estimate of the reduced transformed function.");
  m.def(
      "laplace_pade_limit",
      [](long N, long L, int digits) {
        return scalar(limit_at_infinity(pade(laplace::psi(N, L), N / 2, N / 2)), digits);
      },
      py::arg("N"), py::arg("L") = 0, py::arg("digits") = 20, "Diagonal Pade limit of the reduced polynomial.");
  m.def(
      "c_max", [](long bits, int digits) { return laplace::c_max(bits).to_string(digits); }, py::arg("bits") = 256,
      py::arg("digits") = 30);

  m.def(
      "perturbation_coefficients",
      [](long N) {
        py::list out;
        for (const auto& c : anharmonic::bender_wu(N).coeffs) out.append(fraction(c));
        return out;
      },
      py::arg("N"), "Exact ground-state perturbation coefficients a_0..a_N.");
  m.def(
      "estimate_energy",
      [](long N, const std::string& scheme, long bits, int digits) {
        return estimate(anharmonic::estimate_E(N, anharmonic::parse_scheme(scheme), bits), digits);
      },
      py::arg("N"), py::arg("scheme") = "binomial", py::arg("bits") = 0, py::arg("digits") = 30);
  m.def(
      "estimate_alpha",
      [](long N, long k, long bits, int digits) { return estimate(anharmonic::estimate_alpha(N, k, bits), digits); },
      py::arg("N"), py::arg("k"), py::arg("bits") = 0, py::arg("digits") = 30);
  m.def(
      "estimate_theta1", [](long N, int digits) { return estimate(anharmonic::estimate_theta1(N), digits); },
      py::arg("N"), py::arg("digits") = 20);
  m.def(
      "estimate_energy_coupling",
      [](long N, const py::iterable& thetas, int digits) {
        return estimate(anharmonic::estimate_E_lambda(N, parse_thetas(thetas)), digits);
      },
      py::arg("N"), py::arg("thetas"), py::arg("digits") = 30,
      "Coupling-side estimate with reduction exponents as Fractions or 'p/q' strings.");
  m.def(
      "theta_ladder",
      [](long count) {
        py::list out;
        for (const auto& t : anharmonic::theta_ladder(count)) out.append(fraction(t));
        return out;
      },
      py::arg("count"));
  m.def("reference_energy", [](int digits) { return anharmonic::reference_E(256).to_string(digits); },
        py::arg("digits") = 38);

  m.def(
      "polynomial_roots",
      [](const std::vector<std::string>& coeffs, long bits, int digits) {
        std::vector<Scalar> c;
        for (const auto& s : coeffs) {
          if (s.find_first_of(".eE") == std::string::npos) {
            c.emplace_back(parse_rat(s));
          } else {
            c.emplace_back(BigFloat::from_string(s, bits));
          }
        }
        py::list out;
        const RootSet rs = all_roots(Poly(std::move(c)), bits);
        for (const auto& r : rs.roots) {
          out.append(py::make_tuple(r.re.to_string(digits), r.im.to_string(digits)));
        }
        return out;
      },
      py::arg("coeffs"), py::arg("bits") = 256, py::arg("digits") = 20,
      "Complex roots of a polynomial with ascending coefficients given as strings.");
}
