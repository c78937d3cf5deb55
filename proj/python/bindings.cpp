// Copyright 2026 The uncopy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uncopy/scenarios.hpp"

namespace py = pybind11;

namespace {

py::dict metrics_to_dict(const uncopy::ScenarioReport& report) {
  py::dict out;
  for (const auto& [name, value] : report.metrics) {
    if (std::holds_alternative<double>(value)) {
      out[py::str(name)] = std::get<double>(value);
    } else {
      out[py::str(name)] = std::get<uncopy::Complex>(value);
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  using namespace uncopy;

  m.doc() = "State-vector toolkit for quantum copy/delete feasibility analysis";
  m.attr("__version__") = kToolVersion;

  py::class_<SpaceShape>(m, "SpaceShape")
      .def(py::init<std::vector<Eigen::Index>>(), py::arg("factor_dims"))
      .def_static("qubits", &SpaceShape::qubits, py::arg("count"))
      .def_static("single", &SpaceShape::single, py::arg("dim"))
      .def_property_readonly("factor_dims", &SpaceShape::factor_dims)
      .def_property_readonly("total_dim", &SpaceShape::total_dim)
      .def_property_readonly("factor_count", &SpaceShape::factor_count)
      .def("__eq__", [](const SpaceShape& a, const SpaceShape& b) { return a == b; })
      .def("__repr__", [](const SpaceShape& s) {
        std::string out = "SpaceShape([";
        for (std::size_t i = 0; i < s.factor_dims().size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(s.factor_dims()[i]);
        }
        return out + "])";
      });

  py::class_<Ket>(m, "Ket")
      .def(py::init<Vector, SpaceShape>(), py::arg("amplitudes"), py::arg("shape"))
      .def_property_readonly("amplitudes", &Ket::amplitudes)
      .def_property_readonly("shape", &Ket::shape)
      .def_property_readonly("dim", &Ket::dim)
      .def("amplitude", &Ket::amplitude, py::arg("index"))
      .def("norm", &Ket::norm)
      .def("is_normalized", &Ket::is_normalized, py::arg("tol") = kDefaultTolerance)
      .def("__add__", [](const Ket& a, const Ket& b) { return a + b; })
      .def("__sub__", [](const Ket& a, const Ket& b) { return a - b; })
      .def("__rmul__", [](const Ket& a, Complex scale) { return scale * a; });

  m.def("ket_from_amplitudes", &ket_from_amplitudes, py::arg("amps"), py::arg("shape"));
  m.def("basis_ket", &basis_ket, py::arg("index"), py::arg("shape"));
  m.def("qubit_h", &qubit_h);
  m.def("qubit_v", &qubit_v);
  m.def("qubit", &qubit, py::arg("alpha"), py::arg("beta"));
  m.def("inner", &inner, py::arg("a"), py::arg("b"));
  m.def("tensor", &tensor, py::arg("parts"));
  m.def("normalize", &normalize, py::arg("a"));
  m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));
  m.def(
      "haar_random_ket",
      [](Eigen::Index dim, std::uint64_t seed) { return haar_random_ket(dim, seed); },
      py::arg("dim"), py::arg("seed"));

  py::class_<Operator>(m, "Operator")
      .def(py::init<Matrix, SpaceShape>(), py::arg("matrix"), py::arg("shape"))
      .def_property_readonly("matrix", &Operator::matrix)
      .def_property_readonly("shape", &Operator::shape)
      .def_property_readonly("dim", &Operator::dim);

  py::class_<PartialMapSpec>(m, "PartialMapSpec")
      .def(py::init([](std::vector<std::pair<Ket, Ket>> pairs, SpaceShape shape) {
             return PartialMapSpec{std::move(pairs), std::move(shape)};
           }),
           py::arg("pairs"), py::arg("shape"))
      .def_readonly("pairs", &PartialMapSpec::pairs)
      .def_readonly("shape", &PartialMapSpec::shape);

  py::class_<GramReport>(m, "GramReport")
      .def_readonly("feasible", &GramReport::feasible)
      .def_readonly("input_gram", &GramReport::input_gram)
      .def_readonly("output_gram", &GramReport::output_gram)
      .def_readonly("max_residual", &GramReport::max_residual)
      .def_readonly("rank", &GramReport::rank);

  m.def("identity_op", &identity_op, py::arg("shape"));
  m.def("apply", &apply, py::arg("op"), py::arg("x"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("tensor_op", &tensor_op, py::arg("parts"));
  m.def("adjoint", &adjoint, py::arg("op"));
  m.def(
      "is_unitary",
      [](const Operator& op, double tol) {
        const UnitaryCheck check = is_unitary(op, tol);
        return py::make_tuple(check.unitary, check.deviation);
      },
      py::arg("op"), py::arg("tol") = kDefaultTolerance);
  m.def("gram_feasibility", &gram_feasibility, py::arg("spec"),
        py::arg("tol") = kDefaultTolerance);
  m.def("complete_to_unitary", &complete_to_unitary, py::arg("spec"),
        py::arg("tol") = kDefaultTolerance);
  m.def("swap_factors", &swap_factors, py::arg("shape"), py::arg("factor_i"),
        py::arg("factor_j"));
  m.def("cnot", &cnot);
  m.def("rotation_to_basis", &rotation_to_basis, py::arg("alpha"), py::arg("beta"),
        py::arg("target"));
  m.def(
      "acts_as_swap_on",
      [](const Operator& op, const SpaceShape& shape, std::size_t i, std::size_t j,
         const std::vector<Ket>& probes, double tol) {
        const SwapCheck check = acts_as_swap_on(op, shape, i, j, probes, tol);
        return py::make_tuple(check.matches, check.max_deviation);
      },
      py::arg("op"), py::arg("shape"), py::arg("factor_i"), py::arg("factor_j"),
      py::arg("probes"), py::arg("tol") = kDefaultTolerance);

  py::enum_<TrialMode>(m, "TrialMode")
      .value("Copy", TrialMode::Copy)
      .value("Delete", TrialMode::Delete);

  py::class_<DeletingMachineSpec>(m, "DeletingMachineSpec")
      .def(py::init([](Ket sigma, Ket ancilla_init, Ket ancilla_h, Ket ancilla_v,
                       int spectator_count) {
             return DeletingMachineSpec{std::move(sigma), std::move(ancilla_init),
                                        std::move(ancilla_h), std::move(ancilla_v),
                                        spectator_count};
           }),
           py::arg("sigma"), py::arg("ancilla_init"), py::arg("ancilla_h"),
           py::arg("ancilla_v"), py::arg("spectator_count") = 0)
      .def_readonly("sigma", &DeletingMachineSpec::sigma)
      .def_readonly("ancilla_init", &DeletingMachineSpec::ancilla_init)
      .def_readonly("ancilla_h", &DeletingMachineSpec::ancilla_h)
      .def_readonly("ancilla_v", &DeletingMachineSpec::ancilla_v)
      .def_readonly("spectator_count", &DeletingMachineSpec::spectator_count);

  py::class_<MachineReport>(m, "MachineReport")
      .def_readonly("feasible", &MachineReport::feasible)
      .def_readonly("ancilla_overlap", &MachineReport::ancilla_overlap)
      .def_readonly("gram_residual", &MachineReport::gram_residual)
      .def_readonly("is_swap", &MachineReport::is_swap)
      .def_readonly("swap_deviation", &MachineReport::swap_deviation)
      .def_readonly("uncopy_residual", &MachineReport::uncopy_residual);

  py::class_<DeletingMachine>(m, "DeletingMachine")
      .def_readonly("unitary", &DeletingMachine::unitary)
      .def_readonly("spec", &DeletingMachine::spec)
      .def_readonly("report", &DeletingMachine::report);

  py::class_<ClonabilityReport>(m, "ClonabilityReport")
      .def_readonly("clonable", &ClonabilityReport::clonable)
      .def_readonly("worst_overlap", &ClonabilityReport::worst_overlap)
      .def_readonly("witness", &ClonabilityReport::witness);

  m.def("pb_constraints", &pb_constraints, py::arg("spec"));
  m.def("required_ancilla", &required_ancilla, py::arg("alpha"), py::arg("beta"),
        py::arg("ancilla_h"), py::arg("ancilla_v"));
  m.def("orthogonality_residual", &orthogonality_residual, py::arg("spec"));
  m.def("build_swap_machine", &build_swap_machine, py::arg("sigma") = qubit_h(),
        py::arg("uncopy_trials") = 25, py::arg("seed") = 0,
        py::arg("tol") = kDefaultTolerance);
  m.def("build_counterexample_machine", &build_counterexample_machine,
        py::arg("sigma") = qubit_h(), py::arg("spectator_count") = 0,
        py::arg("uncopy_trials") = 25, py::arg("seed") = 0,
        py::arg("tol") = kDefaultTolerance);
  m.def("verify_uncopy", &verify_uncopy, py::arg("machine"), py::arg("spec"),
        py::arg("alpha"), py::arg("beta"), py::arg("tol") = kDefaultTolerance);
  m.def(
      "cnot_copy_delete_trial",
      [](Complex alpha, Complex beta, TrialMode mode) {
        CnotTrial trial = cnot_copy_delete_trial(alpha, beta, mode);
        return py::make_tuple(std::move(trial.actual), std::move(trial.target),
                              trial.fidelity);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("mode"));
  m.def("mcnot_circuit", &mcnot_circuit, py::arg("alpha"), py::arg("beta"), py::arg("mode"));
  m.def("yuen_clonability", &yuen_clonability, py::arg("states"), py::arg("sigma"),
        py::arg("ancilla_init"), py::arg("tol") = kDefaultTolerance);

  py::enum_<OutputFormat>(m, "OutputFormat")
      .value("Text", OutputFormat::Text)
      .value("Json", OutputFormat::Json);

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("alpha", &ScenarioConfig::alpha)
      .def_readwrite("beta", &ScenarioConfig::beta)
      .def_readwrite("tolerance", &ScenarioConfig::tolerance)
      .def_readwrite("seed", &ScenarioConfig::seed)
      .def_readwrite("trials", &ScenarioConfig::trials)
      .def_readwrite("sigma_index", &ScenarioConfig::sigma_index)
      .def_readwrite("format", &ScenarioConfig::format);

  py::class_<ScenarioReport>(m, "ScenarioReport")
      .def_readonly("scenario", &ScenarioReport::scenario)
      .def_readonly("passed", &ScenarioReport::passed)
      .def_readonly("expected", &ScenarioReport::expected)
      .def_property_readonly("metrics", &metrics_to_dict)
      .def_readonly("tolerance", &ScenarioReport::tolerance)
      .def_readonly("seed", &ScenarioReport::seed);

  m.def("scenario_catalog", [] {
    py::list out;
    for (const ScenarioInfo& info : scenario_catalog()) {
      out.append(py::make_tuple(std::string(info.name), std::string(info.summary)));
    }
    return out;
  });
  m.def(
      "run_scenario",
      [](const std::string& name, const ScenarioConfig& config) {
        return run_scenario(name, config);
      },
      py::arg("name"), py::arg("config") = ScenarioConfig{});
  m.def(
      "run_all",
      [](const ScenarioConfig& config) {
        RunOutcome outcome = run_all(config);
        return py::make_tuple(std::move(outcome.reports), outcome.exit_code);
      },
      py::arg("config") = ScenarioConfig{});
  m.def("render", &render, py::arg("reports"), py::arg("config"), py::arg("format"));
}
