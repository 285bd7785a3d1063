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

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "ufan/synthesis.hpp"

namespace ufan {

/// Per-element excess losses of the passive network, in dB, with the
/// derived power transmission factors.
struct LossParams {
  double l_hyb_db = 0.0;  // one nominal 3 dB hybrid
  double l_phi_db = 0.0;  // one in-tree tunable phase element
  double l_out_db = 0.0;  // one output-bank phase element

  double rho_two_hybrids() const;  // 10^(-2 L_hyb / 10)
  double rho_phi() const;          // 10^(-L_phi / 10)
  double rho_out() const;          // 10^(-L_out / 10)
};

/// Common per-cell power transmission factor applied to both outputs of a
/// splitter cell (two hybrids plus the internal tunable phase element):
/// rho_c = rho_2hyb (1 + rho_phi) / 2.
double cell_loss_factor(const LossParams& params);

/// Leaf powers of the lossy tree for unit input power: each cell multiplies
/// its input by rho_c and splits it by cos^2/sin^2 of its angle.
std::vector<double> tree_power_recursion(const std::vector<std::vector<double>>& alphas,
                                         const LossParams& params);

/// Delivered power fraction g^2 = rho_out * sum of leaf powers.
double delivered_fraction(const std::vector<std::vector<double>>& alphas,
                          const LossParams& params);

/// Stress-case (constant-modulus schedule) insertion loss in dB from the
/// closed form g^2 = rho_out * rho_c^{log2 N}.
double stress_loss_closed_form(int n, const LossParams& params);

/// L_net = -10 log10(g^2).
double insertion_loss_db(double g_squared);

/// Phase-invariant direction mismatch 1 - |c^H c_hat|. Inputs are
/// normalized internally, so near-unit-norm vectors are accepted.
/// Throws DimensionMismatchError on length mismatch.
double direction_error(const Eigen::VectorXcd& c, const Eigen::VectorXcd& c_hat);

/// Optional b-bit uniform quantization of the tunable controls: output
/// phases snap to the k*2pi/2^b grid (wrap-around), splitter differential
/// phases delta = 2 alpha snap to 2^b levels spanning [0, pi].
struct PhaseQuantization {
  int bits = 6;
};

TreeSettings quantize_settings(const TreeSettings& settings,
                               const PhaseQuantization& quant);

struct ContractionResult {
  double g = 1.0;              // delivered amplitude fraction
  Eigen::VectorXcd c_hat;      // realized unit-norm direction
  double l_net_db = 0.0;       // -10 log10(g^2)
  double eps_dir = 0.0;        // 1 - |c^H c_hat| against the target
  Eigen::VectorXcd realized;   // \hat V e_1 = g * c_hat
};

/// Apply the passive-contractive abstraction to programmed settings:
/// sqrt(rho_c) on both outputs of every cell and sqrt(rho_out) at every
/// output port, optionally after quantizing the controls. Under the
/// common-factor model the realized direction equals the ideal one, so
/// eps_dir is nonzero only with quantization enabled.
ContractionResult contract(const TreeSettings& settings, const LossParams& params,
                           const Eigen::VectorXcd& target_c,
                           const std::optional<PhaseQuantization>& quant = std::nullopt);

}  // namespace ufan
