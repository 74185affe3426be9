#include "pentaflag/census.hpp"
#include "pentaflag/certificate.hpp"
#include "pentaflag/cut_metric.hpp"
#include "pentaflag/extremal.hpp"
#include "pentaflag/graph.hpp"
#include "pentaflag/parallel.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pentaflag;

// Rationals cross the boundary as "p/q" strings; the Python package wraps them in Fraction.

namespace {

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["pass"] = r.pass;
  d["level"] = r.level;
  d["bound"] = r.bound.to_string();
  d["target_coefficient"] = r.target_coefficient.to_string();
  d["derived_bound"] = r.derived_bound.to_string();
  d["max_coefficient"] = r.max_coefficient.to_string();
  d["all_psd"] = r.all_psd;
  d["coefficients_within_bound"] = r.coefficients_within_bound;
  d["failure"] = r.failure ? py::object(py::str(*r.failure)) : py::object(py::none());
  py::list coefficients;
  for (const auto& mc : r.coefficients) coefficients.append(py::make_tuple(to_graph6(mc.model), mc.coefficient.to_string()));
  d["coefficients"] = coefficients;
  py::list blocks;
  for (const auto& b : r.blocks) {
    py::dict bd;
    bd["name"] = b.name;
    bd["dimension"] = b.dimension;
    bd["symmetric"] = b.symmetric;
    bd["psd"] = b.psd;
    blocks.append(bd);
  }
  d["blocks"] = blocks;
  return d;
}

py::int_ big(const BigInt& z) { return py::int_(py::str(z.get_str())); }

}  // namespace

PYBIND11_MODULE(_pentaflag, m) {
  m.doc() = "Exact flag-algebra certificate checker and pentagon toolkit for triangle-free graphs";

  py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);
  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);

  m.def("bundled_certificate", [] { return save_certificate(bundled_pentagon_certificate()); },
        "The bundled certificate as a JSON document.");
  m.def(
      "verify",
      [](const std::string& json_text, unsigned workers) {
        const Certificate cert = load_certificate(json_text);
        py::gil_scoped_release release;
        VerificationReport r = verify(cert, workers);
        py::gil_scoped_acquire acquire;
        return report_dict(r);
      },
      py::arg("certificate_json"), py::arg("workers") = 1);

  m.def(
      "enumerate_models",
      [](int n, unsigned workers) {
        std::vector<std::string> out;
        enumerate_models_stream(n, [&](const SmallGraph& g) { out.push_back(to_graph6(g)); }, workers);
        return out;
      },
      py::arg("n"), py::arg("workers") = 1, "Triangle-free graphs on n vertices up to isomorphism, as graph6.");

  m.def("canonical_form", [](const std::string& g) { return to_graph6(canonical_form(from_graph6(g))); });
  m.def("automorphism_count", [](const std::string& g) { return big(automorphism_count(from_graph6(g))); });
  m.def("count_induced", [](const std::string& h, const std::string& g) {
    return count_induced(from_graph6(h), from_graph6(g));
  });
  m.def("density", [](const std::string& h, const std::string& g) {
    return density(from_graph6(h), from_graph6(g)).to_string();
  });
  m.def("blowup_limit_density", [](const std::string& h, const std::string& g) {
    return phi_blowup_density(from_graph6(h), from_graph6(g)).to_string();
  });
  m.def("strong_hom_expansion", [](const std::string& h) { return strong_hom_expansion(from_graph6(h)).to_string(); });

  m.def("count_pentagons", [](const std::string& g) { return count_pentagons(dense_from_graph6(g)); });
  m.def("blowup", [](const std::string& spec) { return to_graph6(blowup(parse_blowup_spec(spec))); },
        "Blow-up from 'graph6:k1,k2,...', as graph6.");
  m.def("chi", [](int n) { return big(chi(n)); });
  m.def(
      "extremal",
      [](int n, unsigned workers) {
        ExtremalReport r;
        {
          py::gil_scoped_release release;
          r = exhaustive_max_pentagons(n, workers);
        }
        py::dict d;
        d["n"] = r.n;
        d["max_pentagons"] = r.max_pentagons;
        d["chi"] = big(r.chi);
        d["extremal_graph6"] = r.extremal_graph6;
        d["sporadic_graph6"] = r.sporadic_graph6;
        d["sporadic"] = r.sporadic_present;
        return d;
      },
      py::arg("n"), py::arg("workers") = 1);

  m.def("cut_distance", [](const std::string& a, const std::string& b) {
    const SmallGraph g1 = from_graph6(a), g2 = from_graph6(b);
    const CutNormResult r = d_box(g1, g2);
    return py::make_tuple(r.value.to_string(), mask_string(r.rows, g1.order()), mask_string(r.cols, g1.order()));
  });
  m.def(
      "delta_hat",
      [](const std::string& a, const std::string& b, unsigned workers) {
        return delta_hat(from_graph6(a), from_graph6(b), workers).value.to_string();
      },
      py::arg("g1"), py::arg("g2"), py::arg("workers") = 1);

  m.attr("__version__") = PENTAFLAG_VERSION;
}
