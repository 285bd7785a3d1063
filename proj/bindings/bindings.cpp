// Copyright 2026 The unitary-fanout developers
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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ufan/network.hpp"
#include "ufan/nonideal.hpp"
#include "ufan/power.hpp"
#include "ufan/synthesis.hpp"
#include "ufan/timing.hpp"

namespace py = pybind11;
using namespace ufan;

PYBIND11_MODULE(unitary_fanout, m) {
  m.doc() = "Closed-form programming and simulation of a balanced-binary-tree "
            "analog multi-antenna transmitter";

  py::class_<TreeSettings>(m, "TreeSettings")
      .def(py::init([](int n, const std::vector<std::vector<double>>& alphas,
                       const std::vector<double>& thetas) {
             TreeSettings s;
             s.n = n;
             s.padded_from = n;
             s.alphas = alphas;
             s.thetas = thetas;
             return s;
           }),
           py::arg("n"), py::arg("alphas"), py::arg("thetas"))
      .def_readonly("n", &TreeSettings::n)
      .def_readonly("padded_from", &TreeSettings::padded_from)
      .def_readonly("alphas", &TreeSettings::alphas)
      .def_readonly("thetas", &TreeSettings::thetas)
      .def_readonly("renormalized", &TreeSettings::renormalized)
      .def("alpha", &TreeSettings::alpha, py::arg("level"), py::arg("node"))
      .def_property_readonly("control_count", &TreeSettings::control_count)
      .def("__repr__", [](const TreeSettings& s) {
        return "<TreeSettings n=" + std::to_string(s.n) + ">";
      });

  m.def(
      "program",
      [](const Eigen::VectorXcd& entries, double total_power, double theta_s,
         const std::optional<std::vector<double>>& calibrated_offsets) {
        return program({entries, total_power}, theta_s, calibrated_offsets);
      },
      py::arg("entries"), py::arg("total_power") = 1.0, py::arg("theta_s") = 0.0,
      py::arg("calibrated_offsets") = std::nullopt,
      "Closed-form split angles and output phases for a target vector");

  m.def(
      "transmit",
      [](const TreeSettings& settings, double power) {
        WaveState input = WaveState::Zero(settings.n);
        input[0] = std::sqrt(power);
        return propagate(build_layers(settings), input);
      },
      py::arg("settings"), py::arg("power") = 1.0,
      "Drive port 1 with sqrt(power) and return the antenna excitations");

  m.def(
      "propagate",
      [](const TreeSettings& settings, const Eigen::VectorXcd& input) {
        return propagate(build_layers(settings), input);
      },
      py::arg("settings"), py::arg("input"));

  m.def(
      "assemble_dense",
      [](const TreeSettings& settings) { return assemble_dense(build_layers(settings)); },
      py::arg("settings"), "Dense N x N transfer matrix (verification oracle)");

  m.def("splitter_cell", &splitter_cell, py::arg("alpha"));
  m.def("hybrid_coupler", &hybrid_coupler);
  m.def("mzi_transfer", &mzi_transfer, py::arg("delta"));
  m.def("input_concentrator_check", &input_concentrator_check, py::arg("n"));
  m.def("right_branch_count", &right_branch_count, py::arg("leaf"), py::arg("depth"));
  m.def("magnitude_tree_phase_offsets", &magnitude_tree_phase_offsets, py::arg("n"),
        py::arg("calibrated") = std::nullopt);

  py::class_<ComponentCounts>(m, "ComponentCounts")
      .def_readonly("cells", &ComponentCounts::cells)
      .def_readonly("hybrids", &ComponentCounts::hybrids)
      .def_readonly("tunable_controls", &ComponentCounts::tunable_controls)
      .def_readonly("depth", &ComponentCounts::depth);
  m.def("component_counts", &component_counts, py::arg("n"));

  py::class_<LossParams>(m, "LossParams")
      .def(py::init([](double l_hyb_db, double l_phi_db, double l_out_db) {
             return LossParams{l_hyb_db, l_phi_db, l_out_db};
           }),
           py::arg("l_hyb_db") = 0.0, py::arg("l_phi_db") = 0.0, py::arg("l_out_db") = 0.0)
      .def_readwrite("l_hyb_db", &LossParams::l_hyb_db)
      .def_readwrite("l_phi_db", &LossParams::l_phi_db)
      .def_readwrite("l_out_db", &LossParams::l_out_db);

  m.def("cell_loss_factor", &cell_loss_factor, py::arg("params"));
  m.def("tree_power_recursion", &tree_power_recursion, py::arg("alphas"), py::arg("params"));
  m.def("delivered_fraction", &delivered_fraction, py::arg("alphas"), py::arg("params"));
  m.def("stress_loss_closed_form", &stress_loss_closed_form, py::arg("n"), py::arg("params"));
  m.def("insertion_loss_db", &insertion_loss_db, py::arg("g_squared"));
  m.def("direction_error", &direction_error, py::arg("c"), py::arg("c_hat"));

  py::class_<ContractionResult>(m, "ContractionResult")
      .def_readonly("g", &ContractionResult::g)
      .def_readonly("c_hat", &ContractionResult::c_hat)
      .def_readonly("l_net_db", &ContractionResult::l_net_db)
      .def_readonly("eps_dir", &ContractionResult::eps_dir)
      .def_readonly("realized", &ContractionResult::realized);
  m.def(
      "contract",
      [](const TreeSettings& settings, const LossParams& params,
         const Eigen::VectorXcd& target_c, std::optional<int> quantization_bits) {
        std::optional<PhaseQuantization> quant;
        if (quantization_bits) quant = PhaseQuantization{*quantization_bits};
        return contract(settings, params, target_c, quant);
      },
      py::arg("settings"), py::arg("params"), py::arg("target_c"),
      py::arg("quantization_bits") = std::nullopt);

  py::class_<TechProfile>(m, "TechProfile")
      .def_readwrite("name", &TechProfile::name)
      .def_readwrite("resolution_bits", &TechProfile::resolution_bits)
      .def_readwrite("t_tune_s", &TechProfile::t_tune_s)
      .def_readwrite("l_phi_db", &TechProfile::l_phi_db)
      .def_readwrite("p_phi_w", &TechProfile::p_phi_w)
      .def_readwrite("loss", &TechProfile::loss);
  m.def("builtin_profiles", &builtin_profiles);

  py::class_<DigitalCoeffs>(m, "DigitalCoeffs")
      .def(py::init<>())
      .def_readwrite("alpha_w_per_chain", &DigitalCoeffs::alpha_w_per_chain)
      .def_readwrite("beta_w_per_w", &DigitalCoeffs::beta_w_per_w)
      .def_readwrite("p_sh_w", &DigitalCoeffs::p_sh_w)
      .def_readwrite("valid_p_ant_lo_w", &DigitalCoeffs::valid_p_ant_lo_w)
      .def_readwrite("valid_p_ant_hi_w", &DigitalCoeffs::valid_p_ant_hi_w);

  py::class_<AnalogBudget>(m, "AnalogBudget")
      .def_readonly("p_in_w", &AnalogBudget::p_in_w)
      .def_readonly("p_dc_pa_w", &AnalogBudget::p_dc_pa_w)
      .def_readonly("p_dc_ctrl_w", &AnalogBudget::p_dc_ctrl_w)
      .def_readonly("total_w", &AnalogBudget::total_w);

  py::class_<DigitalPower>(m, "DigitalPower")
      .def_readonly("watts", &DigitalPower::watts)
      .def_readonly("within_validity", &DigitalPower::within_validity);

  py::class_<AffineFit>(m, "AffineFit")
      .def_readonly("intercept_w", &AffineFit::intercept_w)
      .def_readonly("slope_w_per_w", &AffineFit::slope_w_per_w);

  py::class_<ComparisonRow>(m, "ComparisonRow")
      .def_readonly("n", &ComparisonRow::n)
      .def_readonly("p_ant_tot_w", &ComparisonRow::p_ant_tot_w)
      .def_readonly("digital_w", &ComparisonRow::digital_w)
      .def_readonly("digital_within_validity", &ComparisonRow::digital_within_validity)
      .def_readonly("analog_w", &ComparisonRow::analog_w);

  m.def("required_input_power", &required_input_power, py::arg("p_ant_tot_w"),
        py::arg("l_net_db"));
  m.def("analog_dc", &analog_dc, py::arg("n"), py::arg("p_ant_tot_w"), py::arg("profile"),
        py::arg("eta_pa") = 0.5, py::arg("p_ctrl_fixed_w") = 0.0,
        py::arg("quoted_loss_db") = true);
  m.def("digital_dc", &digital_dc, py::arg("n"), py::arg("p_ant_tot_w"), py::arg("coeffs"));
  m.def("fit_affine_pa", &fit_affine_pa, py::arg("points"));
  m.def("derive_digital_coeffs", &derive_digital_coeffs, py::arg("p_chain_w"),
        py::arg("fit"), py::arg("valid_lo_w"), py::arg("valid_hi_w"));
  m.def("equal_pant_comparison", &equal_pant_comparison, py::arg("n_list"),
        py::arg("p_ant_w"), py::arg("profiles"), py::arg("coeffs"),
        py::arg("eta_pa") = 0.5, py::arg("quoted_loss_db") = true);
  m.def("multitone_input_power", &multitone_input_power, py::arg("subcarrier_powers_w"),
        py::arg("g_fractions"));
  m.def("contract_with_profile", &contract_with_profile, py::arg("settings"),
        py::arg("profile"), py::arg("target_c"));
  m.def("watts_to_dbm", &watts_to_dbm, py::arg("watts"));

  py::class_<TimingBudget>(m, "TimingBudget")
      .def(py::init([](double t_load_s, double t_tune_s, double t_settle_s) {
             return TimingBudget{t_load_s, t_tune_s, t_settle_s};
           }),
           py::arg("t_load_s") = 0.0, py::arg("t_tune_s") = 0.0, py::arg("t_settle_s") = 0.0)
      .def_readwrite("t_load_s", &TimingBudget::t_load_s)
      .def_readwrite("t_tune_s", &TimingBudget::t_tune_s)
      .def_readwrite("t_settle_s", &TimingBudget::t_settle_s)
      .def_property_readonly("t_sw_s", &TimingBudget::t_sw_s);

  py::class_<OfdmNumerology>(m, "OfdmNumerology")
      .def(py::init([](double delta_f_hz, double t_cp_s) {
             return OfdmNumerology{"custom", delta_f_hz, t_cp_s};
           }),
           py::arg("delta_f_hz"), py::arg("t_cp_s") = 0.0)
      .def_readonly("name", &OfdmNumerology::name)
      .def_readwrite("delta_f_hz", &OfdmNumerology::delta_f_hz)
      .def_readwrite("t_cp_s", &OfdmNumerology::t_cp_s)
      .def_property_readonly("t_u_s", &OfdmNumerology::t_u_s)
      .def_property_readonly("t_ofdm_s", &OfdmNumerology::t_ofdm_s);

  py::class_<OfdmReport>(m, "OfdmReport")
      .def_readonly("feasible", &OfdmReport::feasible)
      .def_readonly("t_ss_s", &OfdmReport::t_ss_s)
      .def_readonly("clamped", &OfdmReport::clamped)
      .def_readonly("fits_in_cp", &OfdmReport::fits_in_cp);

  m.def("feasible", &feasible, py::arg("budget"), py::arg("t_s_s"));
  m.def("ofdm_report", &ofdm_report, py::arg("budget"), py::arg("numerology"));
  m.def("numerology_preset", &numerology_preset, py::arg("name"));
  m.def("numerology_preset_names", &numerology_preset_names);
}
