// Python bindings for the sixjvol core.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "sixjvol/errors.hpp"
#include "sixjvol/experiments.hpp"
#include "sixjvol/hypgeom.hpp"
#include "sixjvol/rootval.hpp"
#include "sixjvol/shadow.hpp"
#include "sixjvol/sixj.hpp"

namespace py = pybind11;
using namespace sixjvol;

namespace {

SixColors colors_from_twice(const std::array<int, 6>& twice) {
  SixColors c{};
  for (std::size_t i = 0; i < 6; ++i) {
    if (twice[i] < 0) throw Error(ErrorCode::invalid_argument, "colors must be non-negative");
    c[i] = HalfInteger::from_twice(twice[i]);
  }
  return c;
}

py::dict lead_dict(const LaurentLead& v) {
  py::dict d;
  d["zero"] = v.is_zero();
  d["order"] = v.is_zero() ? py::object(py::none()) : py::int_(v.order);
  d["log_mag"] = v.log_mag;
  d["sign"] = static_cast<int>(v.sign);
  d["phase_units"] = v.phase_units;
  return d;
}

py::list rows_list(const std::vector<ConvergenceRow>& rows) {
  py::list out;
  for (const auto& r : rows) {
    py::dict d;
    d["n"] = r.n;
    d["value"] = r.value;
    d["target"] = r.target;
    d["error"] = r.error;
    d["order"] = r.order_observed;
    d["runtime_ms"] = r.runtime_ms;
    d["mixed_signs"] = r.mixed_signs;
    d["near_cancellation"] = r.near_cancellation;
    out.append(d);
  }
  return out;
}

int table_size(int n, int need) {
  return std::max(static_cast<int>(std::ceil(2.6 * n)), need);
}

}  // namespace

PYBIND11_MODULE(_sixjvol, m) {
  m.doc() = "Quantum 6j-symbols at roots of unity and hyperbolic volumes";

  // Module-lifetime exception type; intentionally never released.
  static py::handle error_type =
      PyErr_NewException("sixjvol._sixjvol.SixjvolError", PyExc_ValueError, nullptr);
  m.attr("SixjvolError") = error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string code(error_code_name(e.code()));
      py::object exc = error_type(code + ": " + e.what());
      exc.attr("code") = code;
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("lobachevsky", &lobachevsky, py::arg("x"));
  m.def("dilog", &dilog, py::arg("z"));
  m.def("vol_oct", &vol_oct);

  m.def(
      "classify_theta",
      [](const std::array<double, 6>& theta) { return to_string(classify_theta(theta).cls); },
      py::arg("theta"));

  m.def(
      "sixj_lead",
      [](const std::array<int, 6>& twice, int n) {
        if (n < 3) throw Error(ErrorCode::invalid_argument, "n must be at least 3");
        const AdmissibleSix b(colors_from_twice(twice));
        const SineTable table(n, table_size(n, b.min_square() + 1));
        return lead_dict(sixj_lead(b, table));
      },
      py::arg("twice_colors"), py::arg("n"),
      "Leading coefficient of the 6j-symbol with colors twice_colors / 2 at q_n.");

  m.def(
      "sixj_generic_eval",
      [](const std::array<int, 6>& twice, std::complex<double> q) {
        return sixj_generic_eval(AdmissibleSix(colors_from_twice(twice)), q);
      },
      py::arg("twice_colors"), py::arg("q"));

  m.def(
      "volume_lob", [](const std::array<double, 6>& theta) { return volume_lob(classify_theta(theta)); },
      py::arg("theta"));
  m.def(
      "volume_my", [](const std::array<double, 6>& alpha) { return volume_my(TruncTetra(alpha)); },
      py::arg("alpha"));
  m.def("angles_from_theta", &angles_from_theta, py::arg("theta"));
  m.def("dblock_volume", &dblock_volume, py::arg("u"));

  py::class_<ShadowLink>(m, "ShadowLink")
      .def_readonly("g", &ShadowLink::g)
      .def_readonly("r", &ShadowLink::r)
      .def_readonly("slots", &ShadowLink::slots)
      .def("to_json", &link_to_json);
  m.def("parse_link", &parse_link_json, py::arg("text"));
  m.def("load_link", &load_link_file, py::arg("path"));

  m.def(
      "colored_jones_lead",
      [](const ShadowLink& link, const std::vector<int>& twice, int n) {
        if (n < 3) throw Error(ErrorCode::invalid_argument, "n must be at least 3");
        std::vector<HalfInteger> b;
        for (int t : twice) {
          if (t < 0) throw Error(ErrorCode::invalid_argument, "colors must be non-negative");
          b.push_back(HalfInteger::from_twice(t));
        }
        const SineTable table(n, table_size(n, jones_max_factorial_arg(link, b)));
        return lead_dict(colored_jones_lead(link, b, table));
      },
      py::arg("link"), py::arg("twice_colors"), py::arg("n"));
  m.def(
      "complement_volume",
      [](const ShadowLink& link, const std::vector<double>& a) {
        return complement_volume(link, HolonomyParams{a});
      },
      py::arg("link"), py::arg("a"));
  m.def("complete_volume", &complete_volume, py::arg("link"));

  m.def(
      "converge_sixj",
      [](const std::array<double, 6>& theta, const std::vector<int>& ns) {
        std::vector<ConvergenceRow> rows;
        {
          py::gil_scoped_release release;
          rows = converge_sixj(theta, ns);
        }
        return rows_list(rows);
      },
      py::arg("theta"), py::arg("ns"));
  m.def(
      "converge_gcv",
      [](const ShadowLink& link, const std::vector<double>& a, const std::vector<int>& ns) {
        std::vector<ConvergenceRow> rows;
        {
          py::gil_scoped_release release;
          rows = converge_gcv(link, HolonomyParams{a}, ns);
        }
        return rows_list(rows);
      },
      py::arg("link"), py::arg("a"), py::arg("ns"));
}
