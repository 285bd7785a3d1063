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

#include "ufan/nonideal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ufan/errors.hpp"
#include "ufan/network.hpp"

namespace ufan {

namespace {

double db_to_power_fraction(double db) {
  if (db < 0.0) throw std::invalid_argument("loss in dB must be nonnegative");
  return std::pow(10.0, -db / 10.0);
}

}  // namespace

double LossParams::rho_two_hybrids() const { return db_to_power_fraction(2.0 * l_hyb_db); }
double LossParams::rho_phi() const { return db_to_power_fraction(l_phi_db); }
double LossParams::rho_out() const { return db_to_power_fraction(l_out_db); }

double cell_loss_factor(const LossParams& params) {
  return params.rho_two_hybrids() * (1.0 + params.rho_phi()) / 2.0;
}

std::vector<double> tree_power_recursion(const std::vector<std::vector<double>>& alphas,
                                         const LossParams& params) {
  const double rho_c = cell_loss_factor(params);
  std::vector<double> powers{1.0};  // unit power entering the root
  for (const auto& level : alphas) {
    std::vector<double> next(2 * level.size());
    for (size_t i = 0; i < level.size(); ++i) {
      const double c = std::cos(level[i]);
      const double s = std::sin(level[i]);
      next[2 * i] = rho_c * powers[i] * c * c;
      next[2 * i + 1] = rho_c * powers[i] * s * s;
    }
    powers = std::move(next);
  }
  return powers;
}

double delivered_fraction(const std::vector<std::vector<double>>& alphas,
                          const LossParams& params) {
  const auto leaves = tree_power_recursion(alphas, params);
  double sum = 0.0;
  for (double p : leaves) sum += p;
  return params.rho_out() * sum;
}

double stress_loss_closed_form(int n, const LossParams& params) {
  if (!tree::is_power_of_two(n)) {
    throw DimensionMismatchError("stress-case loss requires a power-of-two port count");
  }
  const int depth = tree::levels_for(n);
  const double g2 = params.rho_out() * std::pow(cell_loss_factor(params), depth);
  return insertion_loss_db(g2);
}

double insertion_loss_db(double g_squared) {
  const double db = -10.0 * std::log10(g_squared);
  return db == 0.0 ? 0.0 : db;  // avoid -0.0 for a lossless network
}

double direction_error(const Eigen::VectorXcd& c, const Eigen::VectorXcd& c_hat) {
  if (c.size() != c_hat.size()) {
    throw DimensionMismatchError("direction vectors differ in length");
  }
  const double nc = c.norm();
  const double nh = c_hat.norm();
  if (nc == 0.0 || nh == 0.0) {
    throw ZeroVectorError("direction error is undefined for a zero vector");
  }
  return 1.0 - std::abs(c.dot(c_hat)) / (nc * nh);
}

TreeSettings quantize_settings(const TreeSettings& settings,
                               const PhaseQuantization& quant) {
  if (quant.bits < 1 || quant.bits > 30) {
    throw std::invalid_argument("quantization bit count out of range");
  }
  const double levels = static_cast<double>(1 << quant.bits);
  const double theta_step = 2.0 * std::numbers::pi / levels;
  const double delta_step = std::numbers::pi / (levels - 1.0);

  TreeSettings q = settings;
  for (auto& level : q.alphas) {
    for (double& alpha : level) {
      double k = std::round(2.0 * alpha / delta_step);
      k = std::min(std::max(k, 0.0), levels - 1.0);
      alpha = k * delta_step / 2.0;
    }
  }
  for (double& theta : q.thetas) {
    theta = reduce_angle(std::round(theta / theta_step) * theta_step);
  }
  return q;
}

ContractionResult contract(const TreeSettings& settings, const LossParams& params,
                           const Eigen::VectorXcd& target_c,
                           const std::optional<PhaseQuantization>& quant) {
  const TreeSettings& applied = quant ? quantize_settings(settings, *quant) : settings;
  const NetworkModel model = build_layers(applied);
  if (target_c.size() != model.n) {
    throw DimensionMismatchError("target direction length does not match port count");
  }

  const double cell_amplitude = std::sqrt(cell_loss_factor(params));
  const double out_amplitude = std::sqrt(params.rho_out());

  WaveState state = WaveState::Zero(model.n);
  state[0] = 1.0;
  for (const auto& layer : model.layers) {
    for (const auto& mix : layer) {
      const std::complex<double> a = state[mix.p - 1];
      const std::complex<double> b = state[mix.q - 1];
      const double c = std::cos(mix.alpha);
      const std::complex<double> js{0.0, std::sin(mix.alpha)};
      state[mix.p - 1] = cell_amplitude * (c * a + js * b);
      state[mix.q - 1] = cell_amplitude * (js * a + c * b);
    }
  }
  for (int i = 0; i < model.n; ++i) {
    state[i] *= out_amplitude * std::polar(1.0, model.phase_bank[i]);
  }

  ContractionResult result;
  result.realized = state;
  result.g = state.norm();
  result.c_hat = state / result.g;
  result.l_net_db = insertion_loss_db(result.g * result.g);
  result.eps_dir = direction_error(target_c, result.c_hat);
  return result;
}

}  // namespace ufan
