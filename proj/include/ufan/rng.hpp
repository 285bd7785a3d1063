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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "ufan/synthesis.hpp"

namespace ufan {

/// Seeded generator for randomized verification. Gaussian draws go through
/// an explicit Box-Muller step so streams are identical across standard
/// libraries (std::normal_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  Eigen::VectorXcd unit_vector(int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
      const double re = gaussian();
      const double im = gaussian();
      v[i] = {re, im};
    }
    return v / v.norm();
  }

  /// Uniformly random split angles and output phases for an n-port tree.
  TreeSettings settings(int n) {
    TreeSettings s;
    s.n = n;
    s.padded_from = n;
    const int depth = tree::levels_for(n);
    s.alphas.resize(depth);
    for (int level = 1; level <= depth; ++level) {
      auto& row = s.alphas[level - 1];
      row.resize(tree::nodes_at_level(level));
      for (double& alpha : row) alpha = uniform(0.0, std::numbers::pi / 2.0);
    }
    s.thetas.resize(n);
    for (double& theta : s.thetas) theta = uniform(0.0, 2.0 * std::numbers::pi);
    return s;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ufan
