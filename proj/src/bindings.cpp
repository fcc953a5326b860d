#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecsim/model.hpp"
#include "ecsim/numeric_oracle.hpp"
#include "ecsim/qubit_oracle.hpp"
#include "ecsim/sweeps.hpp"
#include "ecsim/validation.hpp"
#include "ecsim/witnesses.hpp"

namespace py = pybind11;
using namespace ecsim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "entangled coherent state dynamics of excitons coupled to a cavity mode";
    m.attr("__version__") = "0.1.0";

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("n_excitons", &SystemConfig::n_excitons)
        .def_readwrite("couplings", &SystemConfig::couplings)
        .def_readwrite("omega", &SystemConfig::omega)
        .def_readwrite("alpha", &SystemConfig::alpha)
        .def_readwrite("theta", &SystemConfig::theta)
        .def_static("equal_couplings", &SystemConfig::equal_couplings,
                    py::arg("n"), py::arg("total_coupling") = 1.0,
                    py::arg("alpha") = Complex{1.0, 0.0}, py::arg("theta") = 0.0,
                    py::arg("omega") = 0.0)
        .def("total_coupling", &SystemConfig::total_coupling)
        .def("validate", &SystemConfig::validate);

    py::class_<SphericalCoupling>(m, "SphericalCoupling")
        .def(py::init<>())
        .def_readwrite("total_coupling", &SphericalCoupling::total_coupling)
        .def_readwrite("angles", &SphericalCoupling::angles);

    py::class_<AmplitudeSet>(m, "AmplitudeSet")
        .def_static("from_amplitudes", &AmplitudeSet::from_amplitudes,
                    py::arg("time"), py::arg("amps"))
        .def_readonly("time", &AmplitudeSet::time)
        .def_readonly("amps", &AmplitudeSet::amps)
        .def_readonly("overlaps", &AmplitudeSet::overlaps)
        .def_readonly("m_factors", &AmplitudeSet::m_factors)
        .def("n_modes", &AmplitudeSet::n_modes)
        .def("mode_energy", &AmplitudeSet::mode_energy, py::arg("first_mode"),
             py::arg("count"));

    py::class_<DecayConfig>(m, "DecayConfig")
        .def(py::init<>())
        .def_readwrite("gamma", &DecayConfig::gamma)
        .def_readwrite("g", &DecayConfig::g)
        .def_readwrite("n_excitons", &DecayConfig::n_excitons)
        .def_readwrite("omega", &DecayConfig::omega);

    py::class_<DecayCoefficients>(m, "DecayCoefficients")
        .def_readonly("u", &DecayCoefficients::u)
        .def_readonly("v", &DecayCoefficients::v)
        .def_readonly("delta_n", &DecayCoefficients::delta_n);

    m.def("spherical_from_couplings", &spherical_from_couplings, py::arg("couplings"));
    m.def("couplings_from_spherical", &couplings_from_spherical, py::arg("spherical"));
    m.def("lossless_amplitudes", &lossless_amplitudes, py::arg("cfg"), py::arg("t"));
    m.def("cat_normalization", &cat_normalization, py::arg("cfg"), py::arg("aset"));
    m.def("mean_photon", &mean_photon, py::arg("cfg"));
    m.def("decay_coefficients", &decay_coefficients, py::arg("dc"), py::arg("t"));

    py::class_<EncodingScope>(m, "EncodingScope")
        .def_readonly("m_qubits", &EncodingScope::m_qubits)
        .def_readonly("first_mode", &EncodingScope::first_mode)
        .def_static("full_state", &EncodingScope::full_state, py::arg("n_excitons"))
        .def_static("excitons_only", &EncodingScope::excitons_only,
                    py::arg("n_excitons"))
        .def("aligned_phase", &EncodingScope::aligned_phase)
        .def("modes", &EncodingScope::modes);

    py::class_<WitnessReport>(m, "WitnessReport")
        .def_readonly("time", &WitnessReport::time)
        .def_readonly("bell_q", &WitnessReport::bell_q)
        .def_readonly("fidelity_f", &WitnessReport::fidelity_f)
        .def_readonly("tau", &WitnessReport::tau)
        .def_readonly("mean_photon", &WitnessReport::mean_photon);

    m.def("bell_expectation",
          py::overload_cast<const AmplitudeSet&, const EncodingScope&, double>(
              &bell_expectation),
          py::arg("aset"), py::arg("scope"), py::arg("theta"));
    m.def("bell_expectation",
          py::overload_cast<const AmplitudeSet&, const EncodingScope&, double,
                            double>(&bell_expectation),
          py::arg("aset"), py::arg("scope"), py::arg("theta"), py::arg("beta"));
    m.def("bell_quantity", &bell_quantity, py::arg("expectation_value"),
          py::arg("m_qubits"));
    m.def("preparation_fidelity", &preparation_fidelity, py::arg("aset"),
          py::arg("scope"), py::arg("theta"), py::arg("gamma"));
    m.def("fidelity_indicator", &fidelity_indicator, py::arg("aset"),
          py::arg("scope"), py::arg("theta"), py::arg("gamma"));
    m.def("squared_concurrence", &squared_concurrence, py::arg("aset"),
          py::arg("scope"), py::arg("theta"));
    m.def("exciton_witnesses", &exciton_witnesses, py::arg("alpha"),
          py::arg("n_excitons"), py::arg("theta"));
    m.def("dissipative_fidelity", &dissipative_fidelity, py::arg("dc"),
          py::arg("alpha"), py::arg("t"));
    m.def("dissipative_fidelity_indicator", &dissipative_fidelity_indicator,
          py::arg("dc"), py::arg("alpha"), py::arg("t"));

    py::enum_<WitnessKind>(m, "WitnessKind")
        .value("bell", WitnessKind::bell)
        .value("fidelity", WitnessKind::fidelity);
    m.def("find_root_bisect", &find_root_bisect, py::arg("f"), py::arg("lo"),
          py::arg("hi"), py::arg("tol"));
    m.def("witness_threshold", &witness_threshold, py::arg("kind"),
          py::arg("n_excitons"), py::arg("lo"), py::arg("hi"), py::arg("tol"));

    py::class_<QubitState>(m, "QubitState")
        .def_readonly("m_qubits", &QubitState::m_qubits)
        .def_readonly("amplitudes", &QubitState::amplitudes)
        .def("norm_sq", &QubitState::norm_sq);

    py::class_<DenseOperator>(m, "DenseOperator")
        .def_readonly("m_qubits", &DenseOperator::m_qubits)
        .def_readonly("entries", &DenseOperator::entries);

    m.def("encode_qubit_state", &encode_qubit_state, py::arg("aset"),
          py::arg("theta"), py::arg("modes"));
    m.def("bell_operator", &bell_operator, py::arg("m_qubits"));
    m.def("bell_operator_closed_form", &bell_operator_closed_form,
          py::arg("m_qubits"));
    m.def("bell_phase", &bell_phase, py::arg("m_qubits"));
    m.def("expectation", &expectation, py::arg("op"), py::arg("psi"));
    m.def("ghz_state", &ghz_state, py::arg("m_qubits"), py::arg("gamma"));
    m.def("concurrence_multiqubit", &concurrence_multiqubit, py::arg("psi"));
    m.def("wootters_pairwise", &wootters_pairwise, py::arg("psi"), py::arg("i"),
          py::arg("j"));
    m.def("bipartite_concurrence_one_vs_rest", &bipartite_concurrence_one_vs_rest,
          py::arg("psi"), py::arg("i"));
    m.def("oracle_bell_expectation", &oracle_bell_expectation, py::arg("aset"),
          py::arg("theta"), py::arg("modes"));
    m.def("oracle_fidelity", &oracle_fidelity, py::arg("aset"), py::arg("theta"),
          py::arg("gamma"), py::arg("modes"));
    m.def("oracle_tau", &oracle_tau, py::arg("aset"), py::arg("theta"),
          py::arg("modes"));

    m.def("coupling_matrix", &coupling_matrix, py::arg("cfg"));
    m.def("evolve_amplitudes_numeric", &evolve_amplitudes_numeric, py::arg("cfg"),
          py::arg("t"));

    py::class_<BathDiscretization>(m, "BathDiscretization")
        .def_readonly("k_modes", &BathDiscretization::k_modes)
        .def_readonly("band_halfwidth", &BathDiscretization::band_halfwidth)
        .def_readonly("frequencies", &BathDiscretization::frequencies)
        .def_readonly("couplings", &BathDiscretization::couplings);

    py::class_<BathTrajectory>(m, "BathTrajectory")
        .def_readonly("times", &BathTrajectory::times)
        .def_readonly("u", &BathTrajectory::u)
        .def_readonly("v", &BathTrajectory::v)
        .def_readonly("total_norm", &BathTrajectory::total_norm);

    m.def("flat_bath", &flat_bath, py::arg("dc"), py::arg("band_halfwidth"),
          py::arg("k_modes"));
    m.def("evolve_with_bath_trajectory", &evolve_with_bath_trajectory,
          py::arg("dc"), py::arg("bath"), py::arg("times"));
    m.def("evolve_with_bath", &evolve_with_bath, py::arg("dc"), py::arg("bath"),
          py::arg("t"));

    py::class_<Grid>(m, "Grid")
        .def(py::init([](double start, double stop, int points) {
                 Grid g{start, stop, points};
                 g.validate();
                 return g;
             }),
             py::arg("start"), py::arg("stop"), py::arg("points"))
        .def_readonly("start", &Grid::start)
        .def_readonly("stop", &Grid::stop)
        .def_readonly("points", &Grid::points)
        .def("at", &Grid::at, py::arg("i"));

    py::class_<Table>(m, "Table")
        .def_readonly("scenario", &Table::scenario)
        .def_readonly("columns", &Table::columns)
        .def_readonly("params", &Table::params)
        .def_readonly("rows", &Table::rows);

    m.def("run_fig1", &run_fig1, py::arg("n_excitons"), py::arg("alpha_sq"),
          py::arg("grid"));
    m.def("run_fig2", &run_fig2, py::arg("alpha_sq"), py::arg("theta"),
          py::arg("grid"));
    m.def("run_fig3", &run_fig3, py::arg("n_excitons"), py::arg("theta"),
          py::arg("grid"));
    m.def("run_fig4", &run_fig4, py::arg("alpha_sq"), py::arg("g"),
          py::arg("gamma_rate"), py::arg("grid"));
    m.def("run_sweep", &run_sweep, py::arg("n_excitons"), py::arg("alpha_sq"),
          py::arg("theta"), py::arg("grid"));
    m.def("run_thresholds", &run_thresholds, py::arg("n_excitons"));

    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("name", &SuiteResult::name)
        .def_readonly("max_deviation", &SuiteResult::max_deviation)
        .def_readonly("tolerance", &SuiteResult::tolerance)
        .def_readonly("passed", &SuiteResult::passed)
        .def_readonly("note", &SuiteResult::note);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("suites", &ValidationReport::suites)
        .def("all_passed", &ValidationReport::all_passed);

    m.def("run_validation", &run_validation, py::arg("closed_form_offset") = 0.0);
    m.def("format_report", &format_report, py::arg("report"));
}
