#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "rodrigues/bilateral.hpp"
#include "rodrigues/genfun.hpp"
#include "rodrigues/json_io.hpp"
#include "rodrigues/kernel.hpp"
#include "rodrigues/ode.hpp"
#include "rodrigues/recurrence.hpp"

namespace py = pybind11;
using namespace rodrigues;

namespace {

// Structured values cross the boundary as JSON text; the package wrapper
// turns them into Python objects.
FamilySpec family(const std::string& text) { return family_from_json(json::parse(text)); }

std::string dump(const json& j) { return j.dump(); }

std::string reports(const std::vector<VerificationReport>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(report_to_json(r));
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rodrigues-type function families: exact kernels, identities and ODEs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("normalize_family", [](const std::string& f) { return dump(family_to_json(family(f))); });

  m.def("kernels", [](const std::string& f, int n) {
    json out = json::array();
    for (const auto& q : reduced_kernels(family(f), n)) out.push_back(poly_to_json(q));
    return dump(out);
  }, py::arg("family"), py::arg("n"));

  m.def("kernel_strings", [](const std::string& f, int n) {
    std::vector<std::string> out;
    for (const auto& q : reduced_kernels(family(f), n)) out.push_back(q.str());
    return out;
  }, py::arg("family"), py::arg("n"));

  m.def("theta_eval", [](const std::string& f, int n, double x) { return theta_eval(family(f), n, x); },
        py::arg("family"), py::arg("n"), py::arg("x"));

  m.def("verify_genfun", [](const std::string& f, int order) {
    return dump(report_to_json(verify_genfun(family(f), order)));
  }, py::arg("family"), py::arg("order"));

  m.def("sweep", [](const std::string& f, int n_max) { return reports(sweep(family(f), n_max)); },
        py::arg("family"), py::arg("n_max"));

  m.def("residual", [](const std::string& id, const std::string& f, int n) {
    const auto rid = parse_recurrence_id(id);
    if (!rid) throw InputError("unknown identity '" + id + "'");
    return dump(poly_to_json(residual(*rid, family(f), n)));
  }, py::arg("identity"), py::arg("family"), py::arg("n"));

  m.def("synthesize_ode", [](const std::string& f, int m, bool specialize) {
    const FamilySpec fam = family(f);
    OdeSpec ode = synthesize_ode(fam, m);
    if (specialize)
      for (auto& c : ode.coeffs) c = specialize_logs(c, fam);
    return dump(ode_to_json(ode));
  }, py::arg("family"), py::arg("m"), py::arg("specialize") = false);

  m.def("ode_residual", [](const std::string& ode, const std::string& f, int n) {
    return dump(poly_to_json(ode_residual(ode_from_json(json::parse(ode)), family(f), n)));
  }, py::arg("ode"), py::arg("family"), py::arg("n"));

  m.def("verify_bilateral", [](const std::string& spec, const std::string& f, int order_t, int order_eta) {
    return dump(report_to_json(
        verify_bilateral(bilateral_spec_from_json(json::parse(spec)), family(f), order_t, order_eta)));
  }, py::arg("spec"), py::arg("family"), py::arg("order_t"), py::arg("order_eta"));

  m.def("apostol_bernoulli", [](int n, unsigned order, const std::string& lambda) {
    const Poly b = apostol_bernoulli(n, order, Rational::parse(lambda));
    std::vector<std::string> out;
    for (const auto& c : b.coeffs())
      out.push_back(c.as_rational()->str());
    return out;
  }, py::arg("n"), py::arg("order") = 1, py::arg("lam") = "1");
}
