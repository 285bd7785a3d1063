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

#include "ufan/power.hpp"

#include <cmath>

#include "ufan/errors.hpp"

namespace ufan {

namespace {
constexpr double kDefaultHybridLossDb = 0.12;

TechProfile make_profile(std::string name, int bits, double t_tune_s, double l_phi_db,
                         double p_phi_w) {
  TechProfile p;
  p.name = std::move(name);
  p.resolution_bits = bits;
  p.t_tune_s = t_tune_s;
  p.l_phi_db = l_phi_db;
  p.p_phi_w = p_phi_w;
  p.loss = {kDefaultHybridLossDb, l_phi_db, l_phi_db};
  return p;
}
}  // namespace

std::vector<TechProfile> builtin_profiles() {
  return {
      make_profile("rf-mems", 0, 10e-6, 0.2, 0.3e-3),
      make_profile("gan-switch", 0, 0.7e-6, 0.8, 0.9e-3),
      make_profile("ultracmos", 0, 2e-6, 1.1, 0.8e-3),
      make_profile("dps", 6, 0.5e-6, 1.4, 0.25),
  };
}

double required_input_power(double p_ant_tot_w, double l_net_db) {
  if (p_ant_tot_w < 0.0) throw std::invalid_argument("delivered power must be >= 0");
  return p_ant_tot_w * std::pow(10.0, l_net_db / 10.0);
}

AnalogBudget analog_dc(int n, double p_ant_tot_w, const TechProfile& profile,
                       double eta_pa, double p_ctrl_fixed_w, bool quoted_loss_db) {
  if (n < 1) throw std::invalid_argument("port count must be >= 1");
  if (!(eta_pa > 0.0 && eta_pa <= 1.0)) {
    throw InvalidEfficiencyError("PA efficiency must lie in (0, 1]");
  }
  double l_net = stress_loss_closed_form(n, profile.loss);
  if (quoted_loss_db) l_net = round_to_0p1_db(l_net);

  AnalogBudget budget;
  budget.p_in_w = required_input_power(p_ant_tot_w, l_net);
  budget.p_dc_pa_w = budget.p_in_w / eta_pa;
  budget.p_dc_ctrl_w = (2.0 * n - 1.0) * profile.p_phi_w + p_ctrl_fixed_w;
  budget.total_w = budget.p_dc_pa_w + budget.p_dc_ctrl_w;
  return budget;
}

DigitalPower digital_dc(int n, double p_ant_tot_w, const DigitalCoeffs& coeffs) {
  DigitalPower result;
  result.watts = coeffs.p_sh_w + coeffs.alpha_w_per_chain * n +
                 coeffs.beta_w_per_w * p_ant_tot_w;
  const double p_ant = p_ant_tot_w / n;
  result.within_validity =
      p_ant >= coeffs.valid_p_ant_lo_w && p_ant <= coeffs.valid_p_ant_hi_w;
  return result;
}

AffineFit fit_affine_pa(const std::vector<std::pair<double, double>>& points) {
  const auto k = static_cast<double>(points.size());
  if (points.size() < 2) throw DegenerateFitError("need at least two fit points");
  double sum_p = 0.0, sum_y = 0.0, sum_pp = 0.0, sum_py = 0.0;
  for (const auto& [p, y] : points) {
    sum_p += p;
    sum_y += y;
    sum_pp += p * p;
    sum_py += p * y;
  }
  const double denom = k * sum_pp - sum_p * sum_p;
  if (denom <= 0.0) throw DegenerateFitError("fit abscissae coincide");
  AffineFit fit;
  fit.slope_w_per_w = (k * sum_py - sum_p * sum_y) / denom;
  fit.intercept_w = sum_y / k - fit.slope_w_per_w * sum_p / k;
  return fit;
}

DigitalCoeffs derive_digital_coeffs(double p_chain_w, const AffineFit& fit,
                                    double valid_lo_w, double valid_hi_w) {
  if (p_chain_w < 0.0) throw std::invalid_argument("per-chain power must be >= 0");
  DigitalCoeffs coeffs;
  coeffs.alpha_w_per_chain = p_chain_w + fit.intercept_w;
  coeffs.beta_w_per_w = fit.slope_w_per_w;
  coeffs.p_sh_w = 0.0;
  coeffs.valid_p_ant_lo_w = valid_lo_w;
  coeffs.valid_p_ant_hi_w = valid_hi_w;
  return coeffs;
}

std::vector<ComparisonRow> equal_pant_comparison(const std::vector<int>& n_list,
                                                 double p_ant_w,
                                                 const std::vector<TechProfile>& profiles,
                                                 const DigitalCoeffs& coeffs,
                                                 double eta_pa, bool quoted_loss_db) {
  if (p_ant_w < 0.0) throw std::invalid_argument("per-antenna power must be >= 0");
  std::vector<ComparisonRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    ComparisonRow row;
    row.n = n;
    row.p_ant_tot_w = n * p_ant_w;
    const DigitalPower digital = digital_dc(n, row.p_ant_tot_w, coeffs);
    row.digital_w = digital.watts;
    row.digital_within_validity = digital.within_validity;
    row.analog_w.reserve(profiles.size());
    for (const auto& profile : profiles) {
      row.analog_w.push_back(
          analog_dc(n, row.p_ant_tot_w, profile, eta_pa, 0.0, quoted_loss_db).total_w);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double multitone_input_power(const std::vector<double>& subcarrier_powers_w,
                             const std::vector<double>& g_fractions) {
  if (subcarrier_powers_w.size() != g_fractions.size()) {
    throw DimensionMismatchError("subcarrier power and g lists differ in length");
  }
  double total = 0.0;
  for (size_t k = 0; k < g_fractions.size(); ++k) {
    const double g = g_fractions[k];
    if (!(g > 0.0 && g <= 1.0)) {
      throw std::invalid_argument("delivered fractions must lie in (0, 1]");
    }
    total += subcarrier_powers_w[k] / (g * g);
  }
  return total;
}

ContractionResult contract_with_profile(const TreeSettings& settings,
                                        const TechProfile& profile,
                                        const Eigen::VectorXcd& target_c) {
  std::optional<PhaseQuantization> quant;
  if (profile.resolution_bits > 0) quant = PhaseQuantization{profile.resolution_bits};
  return contract(settings, profile.loss, target_c, quant);
}

double round_to_0p1_db(double db) { return std::round(db * 10.0) / 10.0; }

double round_to_0p01_w(double watts) { return std::round(watts * 100.0) / 100.0; }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1e3); }

}  // namespace ufan
