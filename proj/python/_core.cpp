#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>

#include "descent3/classgroup.hpp"
#include "descent3/cubicforms.hpp"
#include "descent3/discriminants.hpp"
#include "descent3/error.hpp"
#include "descent3/genus1.hpp"
#include "descent3/quadfield.hpp"
#include "descent3/report.hpp"
#include "descent3/report_io.hpp"

namespace py = pybind11;
using namespace descent3;

namespace {

using FormTuple = std::tuple<py::int_, py::int_, py::int_, py::int_>;

BigInt big(const py::int_& x) { return BigInt(py::str(py::handle(x)).cast<std::string>()); }

py::int_ pyint(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

BinaryCubicForm form_from(const FormTuple& t) {
  return {big(std::get<0>(t)), big(std::get<1>(t)), big(std::get<2>(t)), big(std::get<3>(t))};
}

FormTuple form_to(const BinaryCubicForm& F) { return {pyint(F.a), pyint(F.b), pyint(F.c), pyint(F.d)}; }

py::dict seed_dict(const DiscriminantSeed& s) {
  py::dict d;
  d["m"] = pyint(s.m);
  d["n"] = pyint(s.n);
  d["D"] = pyint(s.D);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cubic descent on Mordell curves y^2 = x^3 + 16D";

  static py::exception<Error> exc(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(exc)(e.what());
      inst.attr("code") = errc_name(e.code());
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  m.def("family_disc", [](const py::int_& mm, const py::int_& n) { return pyint(family_disc(big(mm), big(n))); },
        py::arg("m"), py::arg("n"));
  m.def("make_seed", [](const py::int_& mm, const py::int_& n) { return seed_dict(make_seed(big(mm), big(n))); },
        py::arg("m"), py::arg("n"));
  m.def(
      "seed_from_disc",
      [](const py::int_& D) -> py::object {
        auto s = seed_from_disc(big(D));
        if (!s) return py::none();
        return seed_dict(*s);
      },
      py::arg("D"));
  m.def(
      "enumerate_classes",
      [](const py::int_& D) {
        std::vector<FormTuple> out;
        for (const auto& F : enumerate_classes(big(D))) out.push_back(form_to(F));
        return out;
      },
      py::arg("D"));
  m.def("reduce_form", [](const FormTuple& F) { return form_to(reduce(form_from(F))); }, py::arg("form"));
  m.def("equivalent", [](const FormTuple& F, const FormTuple& G) { return equivalent(form_from(F), form_from(G)); },
        py::arg("F"), py::arg("G"));
  m.def("form_disc", [](const FormTuple& F) { return pyint(disc(form_from(F))); }, py::arg("form"));
  m.def("r3_from_fields", [](const py::int_& D) { return r3_from_fields(big(D)); }, py::arg("D"));
  m.def(
      "class_group",
      [](const py::int_& D) {
        ClassGroupInfo g = class_group_imaginary(big(D));
        py::dict d;
        d["h"] = g.h;
        d["invariants"] = g.invariants;
        d["three_rank"] = g.three_rank;
        return d;
      },
      py::arg("D"));
  m.def(
      "is_cube",
      [](const py::int_& d, const py::int_& u, const py::int_& v) {
        return is_cube(make_quad(big(d), big(u), big(v))).has_value();
      },
      py::arg("d"), py::arg("u"), py::arg("v"));
  m.def(
      "hasse_verdict",
      [](const FormTuple& F, const py::int_& mm, const py::int_& n, const py::int_& global_bound) {
        DiscriminantSeed s = make_seed(big(mm), big(n));
        HasseConfig cfg;
        cfg.global_bound = big(global_bound);
        return std::string(verdict_name(hasse_verdict(make_space(form_from(F), s), cfg).kind));
      },
      py::arg("form"), py::arg("m"), py::arg("n"), py::arg("global_bound") = 10000);
  m.def(
      "analyze_json",
      [](const py::int_& mm, const py::int_& n, const py::int_& point_bound, const py::int_& monic_bound,
         const py::int_& global_bound, unsigned primes_max, bool run_hasse, bool run_mod_3) {
        DiscriminantSeed s = make_seed(big(mm), big(n));
        ReportConfig cfg;
        cfg.point_bound = big(point_bound);
        cfg.hasse.monic_bound = big(monic_bound);
        cfg.hasse.global_bound = big(global_bound);
        cfg.hasse.primes_max = primes_max;
        cfg.run_hasse = run_hasse;
        cfg.run_mod_3 = run_mod_3;
        AnalysisReport r;
        {
          py::gil_scoped_release release;
          r = build_report(s, cfg);
        }
        return report_to_json(r);
      },
      py::arg("m"), py::arg("n"), py::arg("point_bound") = 100000, py::arg("monic_bound") = 1000,
      py::arg("global_bound") = 10000, py::arg("primes_max") = 100, py::arg("run_hasse") = true,
      py::arg("run_mod_3") = true);
}
