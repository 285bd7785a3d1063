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

#include "ufan/synthesis.hpp"

#include <cmath>
#include <numbers>

#include "ufan/errors.hpp"

namespace ufan {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNormMismatchTolerance = 1e-9;
}  // namespace

int TreeSettings::alpha_count() const {
  int count = 0;
  for (const auto& level : alphas) count += static_cast<int>(level.size());
  return count;
}

double reduce_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

NormalizedTarget normalize_target(const TargetVector& x) {
  if (x.entries.size() == 0) {
    throw ZeroVectorError("target vector is empty");
  }
  if (!(x.total_power > 0.0)) {
    throw NonPositivePowerError("total_power must be positive");
  }
  const double norm = x.entries.norm();
  if (norm == 0.0) {
    throw ZeroVectorError("target vector has zero norm");
  }
  const double sqrt_power = std::sqrt(x.total_power);
  const bool renormalized =
      std::abs(norm / sqrt_power - 1.0) > kNormMismatchTolerance;
  return {x.entries / norm, sqrt_power, renormalized};
}

Eigen::VectorXcd pad_to_power_of_two(const Eigen::VectorXcd& c) {
  const auto n = c.size();
  if (n < 1) throw ZeroVectorError("cannot pad an empty vector");
  if (tree::is_power_of_two(n)) return c;
  Eigen::Index padded = 1;
  while (padded < n) padded *= 2;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(padded);
  out.head(n) = c;
  return out;
}

SubtreeNorms compute_subtree_norms(const Eigen::VectorXcd& c) {
  const int n = static_cast<int>(c.size());
  if (!tree::is_power_of_two(n)) {
    throw DimensionMismatchError("subtree norms require a power-of-two length");
  }
  const int depth = tree::levels_for(n);
  SubtreeNorms norms;
  norms.levels.resize(depth + 1);
  auto& leaves = norms.levels[depth];
  leaves.resize(n);
  for (int i = 0; i < n; ++i) leaves[i] = std::abs(c[i]);
  for (int level = depth; level >= 1; --level) {
    const auto& child = norms.levels[level];
    auto& parent = norms.levels[level - 1];
    parent.resize(tree::nodes_at_level(level));
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) {
      parent[i] = std::hypot(child[2 * i], child[2 * i + 1]);
    }
  }
  return norms;
}

std::vector<std::vector<double>> compute_split_angles(const SubtreeNorms& norms) {
  const int depth = norms.depth();
  std::vector<std::vector<double>> alphas(depth);
  for (int level = 1; level <= depth; ++level) {
    const auto& parent = norms.levels[level - 1];
    const auto& child = norms.levels[level];
    auto& out = alphas[level - 1];
    out.resize(parent.size());
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) {
      out[i] = parent[i] == 0.0 ? 0.0 : std::atan2(child[2 * i + 1], child[2 * i]);
    }
  }
  return alphas;
}

std::vector<double> magnitude_tree_phase_offsets(
    int n, const std::optional<std::vector<double>>& calibrated) {
  if (calibrated) {
    if (static_cast<int>(calibrated->size()) != n) {
      throw CalibrationLengthMismatchError(
          "calibrated offset vector length does not match port count");
    }
    return *calibrated;
  }
  std::vector<double> offsets(n);
  const int depth = tree::levels_for(n);
  for (int leaf = 1; leaf <= n; ++leaf) {
    // (pi/2) * w mod 2pi, kept as an exact multiple of pi/2.
    const int quarter_turns = tree::right_branch_count(leaf, depth) & 3;
    offsets[leaf - 1] = quarter_turns * (std::numbers::pi / 2.0);
  }
  return offsets;
}

std::vector<double> compute_phase_bank(const Eigen::VectorXcd& c,
                                       const std::vector<double>& theta_mag,
                                       double theta_s) {
  if (static_cast<int>(theta_mag.size()) != c.size()) {
    throw DimensionMismatchError("phase-offset vector length does not match target");
  }
  std::vector<double> thetas(c.size());
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[i] == std::complex<double>{0.0, 0.0}) {
      thetas[i] = 0.0;  // dead port, fixed for determinism
    } else {
      thetas[i] = reduce_angle(std::arg(c[i]) - theta_mag[i] - theta_s);
    }
  }
  return thetas;
}

TreeSettings program(const TargetVector& x, double theta_s,
                     const std::optional<std::vector<double>>& calibrated_offsets) {
  const NormalizedTarget normalized = normalize_target(x);
  const Eigen::VectorXcd c = pad_to_power_of_two(normalized.direction);
  const int n = static_cast<int>(c.size());

  TreeSettings settings;
  settings.n = n;
  settings.padded_from = static_cast<int>(x.entries.size());
  settings.renormalized = normalized.renormalized;
  settings.alphas = compute_split_angles(compute_subtree_norms(c));
  settings.thetas =
      compute_phase_bank(c, magnitude_tree_phase_offsets(n, calibrated_offsets), theta_s);
  return settings;
}

}  // namespace ufan
