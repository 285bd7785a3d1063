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

#include "ufan/network.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "ufan/errors.hpp"

namespace ufan {

namespace {

using Complex = std::complex<double>;
constexpr Complex kJ{0.0, 1.0};

void apply_mix(WaveState& state, const LayerMix& mix) {
  const double c = std::cos(mix.alpha);
  const Complex js = kJ * std::sin(mix.alpha);
  const Complex a = state[mix.p - 1];
  const Complex b = state[mix.q - 1];
  state[mix.p - 1] = c * a + js * b;
  state[mix.q - 1] = js * a + c * b;
}

void apply_phase_bank(WaveState& state, const std::vector<double>& thetas) {
  for (int i = 0; i < static_cast<int>(thetas.size()); ++i) {
    state[i] *= std::polar(1.0, thetas[i]);
  }
}

}  // namespace

Eigen::Matrix2cd splitter_cell(double alpha) {
  Eigen::Matrix2cd u;
  const double c = std::cos(alpha);
  const Complex js = kJ * std::sin(alpha);
  u << c, js, js, c;
  return u;
}

Eigen::Matrix2cd hybrid_coupler() {
  Eigen::Matrix2cd h;
  const double s = 1.0 / std::numbers::sqrt2;
  h << s, s, s, -s;
  return h;
}

Eigen::Matrix2cd mzi_transfer(double delta) {
  Eigen::Matrix2cd diff = Eigen::Matrix2cd::Zero();
  diff(0, 0) = std::polar(1.0, delta / 2.0);
  diff(1, 1) = std::polar(1.0, -delta / 2.0);
  return hybrid_coupler() * diff * hybrid_coupler();
}

Eigen::MatrixXcd embed_splitter(int n, int p, int q, double alpha) {
  if (p < 1 || q <= p || q > n) {
    throw IndexOutOfRangeError("embed_splitter requires 1 <= p < q <= n");
  }
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::Matrix2cd cell = splitter_cell(alpha);
  u(p - 1, p - 1) = cell(0, 0);
  u(p - 1, q - 1) = cell(0, 1);
  u(q - 1, p - 1) = cell(1, 0);
  u(q - 1, q - 1) = cell(1, 1);
  return u;
}

NetworkModel build_layers(const TreeSettings& settings) {
  const int n = settings.n;
  if (!tree::is_power_of_two(n)) {
    throw MalformedSettingsError("port count must be a power of two");
  }
  const int depth = tree::levels_for(n);
  if (settings.depth() != depth) {
    throw MalformedSettingsError("split-angle level count does not match port count");
  }
  if (static_cast<int>(settings.thetas.size()) != n) {
    throw MalformedSettingsError("phase-bank length does not match port count");
  }

  NetworkModel model;
  model.n = n;
  model.phase_bank = settings.thetas;
  model.layers.resize(depth);
  for (int level = 1; level <= depth; ++level) {
    const auto& angles = settings.alphas[level - 1];
    if (static_cast<int>(angles.size()) != tree::nodes_at_level(level)) {
      throw MalformedSettingsError("wrong number of split angles at a level");
    }
    auto& layer = model.layers[level - 1];
    layer.reserve(angles.size());
    for (int i = 1; i <= static_cast<int>(angles.size()); ++i) {
      const double alpha = angles[i - 1];
      if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2.0)) {
        throw MalformedSettingsError("split angle outside [0, pi/2]");
      }
      layer.push_back({tree::entry_index(depth, level, i),
                       tree::partner_index(depth, level, i), alpha});
    }
  }
  return model;
}

Eigen::MatrixXcd assemble_dense(const NetworkModel& model) {
  const int n = model.n;
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& layer : model.layers) {
    for (const auto& mix : layer) {
      // Left-multiply by the embedded cell: combines rows p and q.
      const double c = std::cos(mix.alpha);
      const Complex js = kJ * std::sin(mix.alpha);
      const Eigen::RowVectorXcd row_p = v.row(mix.p - 1);
      const Eigen::RowVectorXcd row_q = v.row(mix.q - 1);
      v.row(mix.p - 1) = c * row_p + js * row_q;
      v.row(mix.q - 1) = js * row_p + c * row_q;
    }
  }
  for (int i = 0; i < n; ++i) {
    v.row(i) *= std::polar(1.0, model.phase_bank[i]);
  }
  return v;
}

WaveState propagate(const NetworkModel& model, const WaveState& input) {
  if (input.size() != model.n) {
    throw DimensionMismatchError("input length does not match port count");
  }
  WaveState state = input;
  for (const auto& layer : model.layers) {
    for (const auto& mix : layer) apply_mix(state, mix);
  }
  apply_phase_bank(state, model.phase_bank);
  return state;
}

PropagationTrace propagate_traced(const NetworkModel& model, const WaveState& input) {
  if (input.size() != model.n) {
    throw DimensionMismatchError("input length does not match port count");
  }
  PropagationTrace trace;
  trace.before_layer.reserve(model.layers.size());
  WaveState state = input;
  for (const auto& layer : model.layers) {
    trace.before_layer.push_back(state);
    for (const auto& mix : layer) apply_mix(state, mix);
  }
  apply_phase_bank(state, model.phase_bank);
  trace.output = std::move(state);
  return trace;
}

bool input_concentrator_check(int n) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd dft(n, n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      dft(row, col) = scale * std::polar(1.0, -2.0 * std::numbers::pi * row * col / n);
    }
  }
  const Eigen::VectorXcd uniform = Eigen::VectorXcd::Constant(n, Complex{scale, 0.0});
  Eigen::VectorXcd concentrated = dft * uniform;
  concentrated[0] -= 1.0;
  return concentrated.cwiseAbs().maxCoeff() < 1e-12;
}

ComponentCounts component_counts(int n) {
  return {n - 1, 2 * (n - 1), 2 * n - 1, tree::levels_for(n)};
}

}  // namespace ufan
