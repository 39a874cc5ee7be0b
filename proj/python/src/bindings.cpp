// Copyright 2026 The dilaton-steering Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dilaton/errors.hpp"
#include "dilaton/sweep.hpp"

namespace py = pybind11;
using namespace dilaton;

namespace {

DensityMatrix as_density(const ComplexMatrix& m) { return DensityMatrix(m); }

SweepConfig make_config(double mass, std::vector<double> omegas, double d_min,
                        std::optional<double> d_max, int points, std::vector<Pair> pairs) {
  SweepConfig cfg;
  cfg.mass = mass;
  cfg.omegas = std::move(omegas);
  cfg.d_min = d_min;
  cfg.d_max = d_max;
  cfg.points = points;
  cfg.pairs = std::move(pairs);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fermionic steering, Bell signal and concurrence in a dilaton black hole";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
  py::register_exception<RootNotFound>(m, "RootNotFound", PyExc_RuntimeError);

  py::enum_<Direction>(m, "Direction")
      .value("AtoB", Direction::AtoB)
      .value("BtoA", Direction::BtoA);
  py::enum_<Regime>(m, "Regime")
      .value("TwoWay", Regime::TwoWay)
      .value("OneWayForward", Regime::OneWayForward)
      .value("OneWayBackward", Regime::OneWayBackward)
      .value("NoWay", Regime::NoWay);
  py::enum_<Pair>(m, "Pair")
      .value("AB", Pair::AB)
      .value("ABbar", Pair::ABbar)
      .value("BBbar", Pair::BBbar);
  py::enum_<Critical>(m, "Critical")
      .value("SuddenBirth", Critical::SuddenBirth)
      .value("MaxSteering", Critical::MaxSteering)
      .value("SuddenDeath", Critical::SuddenDeath);
  py::enum_<Route>(m, "Route")
      .value("ClosedForm", Route::ClosedForm)
      .value("Pipeline", Route::Pipeline);

  m.def("regime_name", [](Regime r) { return std::string(regime_name(r)); });

  py::class_<XState>(m, "XState")
      .def(py::init([](double d11, double d22, double d33, double d44, Complex c14,
                       Complex c23) {
             XState s{d11, d22, d33, d44, c14, c23};
             s.validate();
             return s;
           }),
           py::arg("d11"), py::arg("d22"), py::arg("d33"), py::arg("d44"),
           py::arg("c14") = Complex{}, py::arg("c23") = Complex{})
      .def_readonly("d11", &XState::d11)
      .def_readonly("d22", &XState::d22)
      .def_readonly("d33", &XState::d33)
      .def_readonly("d44", &XState::d44)
      .def_readonly("c14", &XState::c14)
      .def_readonly("c23", &XState::c23)
      .def("matrix", [](const XState& s) { return ComplexMatrix(s.matrix()); })
      .def("__repr__", [](const XState& s) {
        std::ostringstream os;
        os << "XState(d11=" << s.d11 << ", d22=" << s.d22 << ", d33=" << s.d33
           << ", d44=" << s.d44 << ", c14=" << s.c14 << ", c23=" << s.c23 << ")";
        return os.str();
      });

  py::class_<MeasureSet>(m, "MeasureSet")
      .def_readonly("s_forward", &MeasureSet::s_forward)
      .def_readonly("s_backward", &MeasureSet::s_backward)
      .def_readonly("bell", &MeasureSet::bell)
      .def_readonly("bell_branch1", &MeasureSet::bell_branch1)
      .def_readonly("bell_branch2", &MeasureSet::bell_branch2)
      .def_readonly("concurrence", &MeasureSet::concurrence)
      .def_readonly("asymmetry", &MeasureSet::asymmetry)
      .def_readonly("regime", &MeasureSet::regime);

  py::class_<ChshSignal>(m, "ChshSignal")
      .def_readonly("bell", &ChshSignal::bell)
      .def_readonly("branch1", &ChshSignal::branch1)
      .def_readonly("branch2", &ChshSignal::branch2);

  // density matrices cross the boundary as complex numpy arrays
  m.def("partial_trace",
        [](const ComplexMatrix& rho, std::vector<int> keep) {
          return partial_trace(as_density(rho), keep).matrix();
        },
        py::arg("rho"), py::arg("keep"));
  m.def("as_xstate", [](const ComplexMatrix& rho) { return as_xstate(as_density(rho)); });
  m.def("hermitian_eigenvalues",
        [](const ComplexMatrix& h) { return hermitian_eigenvalues(h); });

  m.def("concurrence_x", &concurrence_x);
  m.def("concurrence_general",
        [](const ComplexMatrix& rho) { return concurrence_general(as_density(rho)); });
  m.def("steerability", &steerability, py::arg("state"), py::arg("direction"));
  m.def("steering_witness_matrix", [](const ComplexMatrix& rho, Direction dir) {
    return steering_witness_matrix(as_density(rho), dir).matrix();
  });
  m.def("chsh_max_x", &chsh_max_x);
  m.def("chsh_max_general",
        [](const ComplexMatrix& rho) { return chsh_max_general(as_density(rho)); });
  m.def("steering_asymmetry", &steering_asymmetry);
  m.def("classify_steering", &classify_steering);
  m.def("measure_x", &measure_x);

  py::class_<DilatonParams>(m, "DilatonParams")
      .def(py::init<double, double, double>(), py::arg("mass"), py::arg("dilaton"),
           py::arg("omega"))
      .def_property_readonly("mass", &DilatonParams::mass)
      .def_property_readonly("dilaton", &DilatonParams::dilaton)
      .def_property_readonly("omega", &DilatonParams::omega)
      .def_property_readonly("x", &DilatonParams::thermal_argument);

  py::class_<BogoliubovAmplitudes>(m, "BogoliubovAmplitudes")
      .def_readonly("x", &BogoliubovAmplitudes::x)
      .def_readonly("c", &BogoliubovAmplitudes::c)
      .def_readonly("s", &BogoliubovAmplitudes::s)
      .def_readonly("temperature", &BogoliubovAmplitudes::temperature);

  py::class_<CriticalValue>(m, "CriticalValue")
      .def_readonly("value", &CriticalValue::value)
      .def_readonly("in_range", &CriticalValue::in_range);
  py::class_<CriticalPoints>(m, "CriticalPoints")
      .def_readonly("d0", &CriticalPoints::d0)
      .def_readonly("d1", &CriticalPoints::d1)
      .def_readonly("d2", &CriticalPoints::d2);

  py::class_<MonogamyResiduals>(m, "MonogamyResiduals")
      .def_readonly("r1", &MonogamyResiduals::r1)
      .def_readonly("r2", &MonogamyResiduals::r2)
      .def_readonly("r3", &MonogamyResiduals::r3)
      .def_readonly("r4", &MonogamyResiduals::r4)
      .def_readonly("r3_valid", &MonogamyResiduals::r3_valid)
      .def_readonly("r4_valid", &MonogamyResiduals::r4_valid);

  m.def("bogoliubov", &bogoliubov);
  m.def("tripartite_state", [](const DilatonParams& p) { return tripartite_state(p).matrix(); });
  m.def("reduced", &reduced, py::arg("params"), py::arg("pair"));
  m.def("closed_form_measures", &closed_form_measures, py::arg("params"), py::arg("pair"));
  m.def("pipeline_measures", &pipeline_measures, py::arg("params"), py::arg("pair"));
  m.def("critical_dilatons", &critical_dilatons, py::arg("mass"), py::arg("omega"));
  m.def("find_critical_numeric", &find_critical_numeric, py::arg("mass"), py::arg("omega"),
        py::arg("which"));
  m.def("monogamy_residuals", &monogamy_residuals, py::arg("params"),
        py::arg("route") = Route::ClosedForm);

  const std::vector<double> default_omegas{0.5, 1.0, 1.5, 2.0};
  const std::vector<Pair> all_pairs(kAllPairs.begin(), kAllPairs.end());
  m.def(
      "sweep_csv",
      [](double mass, std::vector<double> omegas, double d_min, std::optional<double> d_max,
         int points, std::vector<Pair> pairs) {
        const SweepConfig cfg = make_config(mass, std::move(omegas), d_min, d_max, points, pairs);
        std::ostringstream os;
        write_csv(os, run_sweep(cfg), cfg.pairs);
        return os.str();
      },
      py::arg("mass") = 1.0, py::arg("omegas") = default_omegas, py::arg("d_min") = 0.0,
      py::arg("d_max") = py::none(), py::arg("points") = 2001, py::arg("pairs") = all_pairs);
  m.def(
      "verify",
      [](double mass, std::vector<double> omegas, double d_min, std::optional<double> d_max,
         int points) {
        const SweepConfig cfg =
            make_config(mass, std::move(omegas), d_min, d_max, points,
                        std::vector<Pair>(kAllPairs.begin(), kAllPairs.end()));
        const VerifyReport report = verify_sweep(cfg);
        py::dict deviations;
        for (const Deviation& d : report.deviations) {
          deviations[py::str(std::string(pair_name(d.pair)) + "_" + d.measure)] = d.max_abs;
        }
        return py::make_tuple(report.passed(), deviations);
      },
      py::arg("mass") = 1.0, py::arg("omegas") = default_omegas, py::arg("d_min") = 0.0,
      py::arg("d_max") = py::none(), py::arg("points") = 2001,
      "Returns (passed, {pair_measure: max abs deviation}).");
}
