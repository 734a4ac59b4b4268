#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "sphmc/misiolek.hpp"
#include "sphmc/oracle.hpp"
#include "sphmc/records.hpp"
#include "sphmc/structure.hpp"
#include "sphmc/verify.hpp"
#include "sphmc/wigner.hpp"

namespace py = pybind11;
using namespace sphmc;

namespace {

// (sign, "p/q") for a value sign * sqrt(p/q).
py::tuple ssr_tuple(const SignedSqrtRational& x) {
  return py::make_tuple(x.sign(), x.radicand().get_str());
}

HarmonicIndex to_index(std::pair<int, int> p) { return HarmonicIndex::make(p.first, p.second); }

py::dict mc_dict(const MCReport& r) {
  py::dict d;
  d["flat"] = r.flat.get_str();
  d["delta"] = r.delta.get_str();
  d["slope"] = ssr_tuple(r.slope);
  d["rotation"] = r.rotation.get_str();
  d["value"] = r.value();
  d["sign"] = r.sign();
  py::list summands;
  for (const auto& s : r.summands)
    summands.append(py::make_tuple(s.l3, s.g_squared.get_str(), s.weight));
  d["summands"] = summands;
  return d;
}

py::dict cell_dict(const CriticalCell& c) {
  py::dict d;
  d["l1"] = c.l1;
  d["l2"] = c.l2;
  d["m2"] = c.m2;
  d["status"] = to_string(c.status);
  d["reason"] = c.reason;
  d["ratio"] = c.ratio ? py::cast(*c.ratio) : py::none();
  d["direction"] = c.direction;
  return d;
}

}  // namespace

PYBIND11_MODULE(_sphmc, m) {
  m.doc() = "Exact 3j symbols, sphere structure constants and the Misiolek criterion";

  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);

  m.def("threej", [](int l1, int l2, int l3, int m1, int m2, int m3) {
    const auto v = threej(l1, l2, l3, m1, m2, m3);
    return py::make_tuple(ssr_tuple(v), v.to_double());
  });
  m.def("clebsch_gordan", [](int l1, int m1, int l2, int m2, int l3, int m3) {
    const auto v = clebsch_gordan(l1, m1, l2, m2, l3, m3);
    return py::make_tuple(ssr_tuple(v), v.to_double());
  });
  m.def("g_real", [](int l1, int m1, int l2, int m2, int l3, int m3) {
    const auto g = g_real(l1, m1, l2, m2, l3, m3);
    return py::make_tuple(ssr_tuple(g.reduced), g.to_double());
  }, "Real structure constant; the exact part is times pi^(-1/2).");
  m.def("bracket", [](std::pair<int, int> a, std::pair<int, int> b) {
    const auto e = bracket_expand(to_index(a), to_index(b));
    py::dict d;
    for (const auto& [l3, t] : e.terms) d[py::int_(l3)] = std::complex<double>(0.0, t.imag());
    return d;
  });
  m.def("mc_flat", [](std::pair<int, int> a, std::pair<int, int> b) {
    return mc_dict(mc_flat(to_index(a), to_index(b)));
  });
  m.def("mc_coriolis", [](std::pair<int, int> a, std::pair<int, int> b, const std::string& rotation) {
    return mc_dict(mc_coriolis(to_index(a), to_index(b), parse_rational(rotation)));
  });
  m.def("mc_combination",
        [](std::pair<int, int> a, std::pair<int, int> base,
           const std::vector<std::tuple<std::string, std::string, std::pair<int, int>>>& pert) {
          std::vector<std::pair<ComplexRational, HarmonicIndex>> p;
          for (const auto& [re, im, idx] : pert)
            p.push_back({{parse_rational(re), parse_rational(im)}, to_index(idx)});
          return mc_dict(mc_combination(to_index(a), to_index(base), p));
        });
  m.def("critical_ratio", [](int l1, int l2, int m2) { return cell_dict(critical_ratio(l1, l2, m2)); });
  m.def("critical_table_csv", [](int l1, int l2_max) {
    return critical_table_csv(critical_table(l1, l2_max));
  });
  m.def("rhw_mc",
        [](std::pair<std::string, std::string> A, const std::string& C, std::pair<int, int> wave,
           std::pair<int, int> probe, const std::string& rotation) {
          const RHWave w{{parse_rational(A.first), parse_rational(A.second)},
                         parse_rational(C), to_index(wave), 0, 0, parse_rational(rotation)};
          const auto r = rhw_mc(w, to_index(probe));
          py::dict d;
          d["plain_over_pi"] = r.plain_over_pi().get_str();
          d["plain_rational"] = r.plain_rational().get_str();
          d["extended_rational"] = r.extended_rational().get_str();
          d["plain"] = r.plain_value();
          d["extended"] = r.extended_value();
          return d;
        });
  m.def("rhw_threshold", [](int l1, int m1, int mm, const std::string& K) {
    return rhw_threshold(l1, m1, mm, parse_rational(K)).value;
  });
  m.def("conjugate_time", &conjugate_time, py::arg("kappa"), py::arg("v_norm"));
  m.def("oracle_structure_coeff", [](int grid_lmax, int l1, int m1, int l2, int m2, int l3, int m3) {
    return oracle::oracle_structure_coeff(oracle::QuadratureGrid(grid_lmax), l1, m1, l2, m2, l3, m3);
  });
  m.def("run_suite", [](const std::string& suite, std::optional<int> lmax) {
    const auto r = run_suite(suite, lmax);
    py::dict d;
    d["suite"] = r.name;
    d["checks"] = r.checks;
    d["failures"] = r.failures;
    d["max_dev"] = r.max_dev;
    d["ok"] = r.ok();
    d["messages"] = r.messages;
    return d;
  }, py::arg("suite"), py::arg("lmax") = py::none());
}
