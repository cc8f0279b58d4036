#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crofton/api.hpp"
#include "crofton/errors.hpp"

namespace py = pybind11;
using namespace crofton;

namespace {

PathSpec spec_of(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return path_from_json(j);
}

py::tuple outcome(const Outcome& o) { return py::make_tuple(o.json.dump(), o.certified); }

}  // namespace

PYBIND11_MODULE(_crofton, m) {
  m.doc() = "Certified lengths and directional variations of plane paths";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CertificationUnavailable>(m, "CertificationUnavailable", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<OracleError>(m, "OracleError", PyExc_RuntimeError);

  m.def(
      "length",
      [](const std::string& spec, const std::string& eps, unsigned workers, int digits) {
        PathSpec path = spec_of(spec);
        Dyadic e = parse_tolerance(eps);
        py::gil_scoped_release release;
        return length_report(path, e, workers, digits);
      },
      py::arg("spec"), py::arg("eps") = "1e-6", py::arg("workers") = 1, py::arg("digits") = 12);
  m.def(
      "variation",
      [](const std::string& spec, const std::string& theta, const std::string& eps, const std::string& route,
         int digits) {
        PathSpec path = spec_of(spec);
        Direction d = to_direction(parse_angle(theta));
        Dyadic e = parse_tolerance(eps);
        py::gil_scoped_release release;
        return variation_report(path, d, e, route, digits);
      },
      py::arg("spec"), py::arg("theta"), py::arg("eps") = "1e-6", py::arg("route") = "auto",
      py::arg("digits") = 12);
  m.def(
      "profile",
      [](const std::string& spec, int count, const std::string& eps, int digits) {
        PathSpec path = spec_of(spec);
        Dyadic e = parse_tolerance(eps);
        return profile_json(profile_samples(path, count, e, 1), digits).dump();
      },
      py::arg("spec"), py::arg("count") = 16, py::arg("eps") = "1e-6", py::arg("digits") = 12);
  m.def(
      "decide",
      [](const std::string& spec, const std::string& theta, const std::string& a, const std::string& b) {
        PathSpec path = spec_of(spec);
        return decide_report(path, to_direction(parse_angle(theta)), parse_rational(a), parse_rational(b), 12);
      },
      py::arg("spec"), py::arg("theta"), py::arg("a"), py::arg("b"));
  m.def(
      "demo", [](int n, int k, int digits) { return demo_to_json(adversarial_demo(n, k), digits).dump(); },
      py::arg("n"), py::arg("k"), py::arg("digits") = 12);
  m.def(
      "generate",
      [](const std::string& family, int n, const std::vector<int>& bits, bool tilted) {
        return path_to_json(generate(family, n, bits, tilted)).dump();
      },
      py::arg("family"), py::arg("n") = 1, py::arg("bits") = std::vector<int>{}, py::arg("tilt") = false);

  py::class_<Outcome>(m, "Outcome")
      .def_property_readonly("json", [](const Outcome& o) { return o.json.dump(); })
      .def_readonly("certified", &Outcome::certified);
}
