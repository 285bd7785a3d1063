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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ufan/nonideal.hpp"

namespace ufan {

/// Phase-control technology operating point (one loss-table row).
struct TechProfile {
  std::string name;
  int resolution_bits = 0;  // 0 = stepped/discrete control without a bit count
  double t_tune_s = 0.0;    // reconfiguration time proxy
  double l_phi_db = 0.0;    // per-element insertion loss
  double p_phi_w = 0.0;     // DC draw per tunable control
  LossParams loss;          // l_hyb 0.12 dB, l_out = l_phi by default
};

/// The four built-in technology rows (RF-MEMS, GaN switch, UltraCMOS, DPS).
std::vector<TechProfile> builtin_profiles();

/// Affine compute-excluded digital front-end model
/// P = P_sh + alpha N + beta P_ant,tot, with its per-antenna validity range.
struct DigitalCoeffs {
  double alpha_w_per_chain = 2.67;
  double beta_w_per_w = 3.19;
  double p_sh_w = 0.0;
  double valid_p_ant_lo_w = 0.079;
  double valid_p_ant_hi_w = 0.251;
};

/// Injected tone power needed to deliver p_ant_tot through a network with
/// the given insertion loss: P_in = P_ant,tot 10^(L_net/10).
double required_input_power(double p_ant_tot_w, double l_net_db);

struct AnalogBudget {
  double p_in_w = 0.0;
  double p_dc_pa_w = 0.0;
  double p_dc_ctrl_w = 0.0;
  double total_w = 0.0;
};

/// Analog front-end DC power at a delivered power, using the profile's
/// stress-case insertion loss. quoted_loss_db selects the 0.1-dB-rounded
/// loss figure (as printed in the loss table, which is what the published
/// budget comparison consumes) over the exact closed form.
AnalogBudget analog_dc(int n, double p_ant_tot_w, const TechProfile& profile,
                       double eta_pa = 0.5, double p_ctrl_fixed_w = 0.0,
                       bool quoted_loss_db = true);

struct DigitalPower {
  double watts = 0.0;
  bool within_validity = true;
};

/// Compute-excluded digital front-end DC power; out-of-range per-antenna
/// power is flagged, not rejected.
DigitalPower digital_dc(int n, double p_ant_tot_w, const DigitalCoeffs& coeffs);

struct AffineFit {
  double intercept_w = 0.0;     // a
  double slope_w_per_w = 0.0;   // b
};

/// Closed-form least squares for P_DC ~ a + b p_ant over (p_ant, P_DC)
/// points. Throws DegenerateFitError when all abscissae coincide.
AffineFit fit_affine_pa(const std::vector<std::pair<double, double>>& points);

/// alpha = P_chain + a, beta = b, P_sh = 0.
DigitalCoeffs derive_digital_coeffs(double p_chain_w, const AffineFit& fit,
                                    double valid_lo_w, double valid_hi_w);

struct ComparisonRow {
  int n = 0;
  double p_ant_tot_w = 0.0;
  double digital_w = 0.0;
  bool digital_within_validity = true;
  std::vector<double> analog_w;  // one entry per profile, in input order
};

/// Equal per-antenna-power comparison rows (full precision; presentation
/// rounding happens at the output layer).
std::vector<ComparisonRow> equal_pant_comparison(const std::vector<int>& n_list,
                                                 double p_ant_w,
                                                 const std::vector<TechProfile>& profiles,
                                                 const DigitalCoeffs& coeffs,
                                                 double eta_pa = 0.5,
                                                 bool quoted_loss_db = true);

/// Total injected power over independent subcarrier networks:
/// sum_k P_k / g_k^2. Throws DimensionMismatchError on length mismatch.
double multitone_input_power(const std::vector<double>& subcarrier_powers_w,
                             const std::vector<double>& g_fractions);

/// contract() driven by a technology profile: applies the profile's loss
/// parameters and, when the profile quotes a bit resolution, its control
/// quantization. Discrete rows (resolution_bits == 0) are not quantized.
ContractionResult contract_with_profile(const TreeSettings& settings,
                                        const TechProfile& profile,
                                        const Eigen::VectorXcd& target_c);

/// Presentation rounding (half away from zero).
double round_to_0p1_db(double db);
double round_to_0p01_w(double watts);

/// Display helper: watts to dBm.
double watts_to_dbm(double watts);

}  // namespace ufan
