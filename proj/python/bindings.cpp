#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadcurves/errors.hpp"
#include "quadcurves/fixtures.hpp"
#include "quadcurves/report.hpp"

namespace py = pybind11;
using namespace qc;

namespace {

FieldSpec field_of(std::uint64_t p) { return p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p); }

std::vector<std::string> to_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

py::dict report_dict(const ClassificationReport& r) {
  py::dict d;
  d["contains_quadric"] = r.contains_quadric;
  d["quadric_rank"] = r.quadric_rank ? py::cast(*r.quadric_rank) : py::none();
  d["extremal"] = r.extremal;
  d["acm"] = r.acm ? py::cast(*r.acm) : py::none();
  d["mu"] = r.mu;
  d["degree"] = r.degree;
  d["arithmetic_genus"] = r.arithmetic_genus;
  d["rao_dims"] = r.rao_dims ? py::cast(*r.rao_dims) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_quadcurves, m) {
  m.doc() = "Exact computations for space curves on quadrics in P^3";

  py::exception<MathError>(m, "MathError", PyExc_ValueError);
  py::exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const MathError& e) {
      py::object cls = py::module_::import("quadcurves._quadcurves").attr("MathError");
      py::object inst = cls(e.what());
      inst.attr("reason") = e.reason();
      PyErr_SetObject(cls.ptr(), inst.ptr());
    } catch (const ParseError& e) {
      py::object cls = py::module_::import("quadcurves._quadcurves").attr("ParseError");
      py::object inst = cls(e.what());
      inst.attr("line") = e.line();
      inst.attr("column") = e.column();
      PyErr_SetObject(cls.ptr(), inst.ptr());
    }
  });

  m.def("normalize", [](const std::string& s, std::uint64_t p) { return parse_polynomial(s, field_of(p)).to_string(); },
        py::arg("poly"), py::arg("p") = 0, "Parse a polynomial and print it canonically.");

  m.def(
      "groebner_basis",
      [](const std::vector<std::string>& gens, std::uint64_t p) {
        return to_strings(Ideal::from_strings(gens, field_of(p)).groebner_basis());
      },
      py::arg("generators"), py::arg("p") = 0, "Reduced grevlex Groebner basis.");

  m.def(
      "ideals_equal",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return Ideal::from_strings(a) == Ideal::from_strings(b);
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "intersect",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return to_strings(ideal_intersection(Ideal::from_strings(a), Ideal::from_strings(b)).groebner_basis());
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "hilbert",
      [](const std::vector<std::string>& gens, int upto) {
        const Ideal i = Ideal::from_strings(gens);
        std::vector<std::int64_t> values;
        for (int j = 0; j <= upto; ++j) values.push_back(hilbert_function(i, j));
        return values;
      },
      py::arg("generators"), py::arg("upto") = 10, "dim (R/I)_j for j = 0..upto.");

  m.def(
      "construct",
      [](const std::string& spec_text) { return to_strings(construct_ideal(parse_curve_spec(spec_text)).generators()); },
      py::arg("spec"), "Generators of the curve described by key=value lines.");

  m.def(
      "classify",
      [](const std::string& spec_text) {
        const auto spec = parse_curve_spec(spec_text);
        return report_dict(classify_curve(construct_ideal(spec), predicted_resolution(spec)));
      },
      py::arg("spec"));

  m.def(
      "classify_ideal",
      [](const std::vector<std::string>& gens, std::uint64_t p) {
        return report_dict(classify_curve(Ideal::from_strings(gens, field_of(p))));
      },
      py::arg("generators"), py::arg("p") = 0);

  m.def(
      "rao_dims",
      [](const std::string& spec_text) {
        const auto spec = parse_curve_spec(spec_text);
        const auto res = predicted_resolution(spec);
        if (!res) throw MathError("no-resolution", "this family has no closed-form resolution");
        return rao_module(construct_ideal(spec), *res).dims;
      },
      py::arg("spec"));

  m.def(
      "certify_complex",
      [](const std::string& json) {
        const auto cert = certify_resolution(parse_complex_json(json));
        py::dict d;
        d["pass"] = cert.pass();
        d["failure"] = cert.failure();
        return d;
      },
      py::arg("complex_json"));

  m.def("quadric_rank", [](const std::string& q) { return quadric_rank(parse_polynomial(q)); }, py::arg("quadric"));
}
