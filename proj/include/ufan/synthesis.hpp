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

#include "ufan/tree.hpp"

namespace ufan {

/// Desired complex excitation with prescribed total conducted power. The
/// network synthesizes sqrt(total_power) * entries / ||entries||_2.
struct TargetVector {
  Eigen::VectorXcd entries;
  double total_power = 1.0;  // watts
};

/// Euclidean norms of the target restricted to each node's contiguous leaf
/// block. levels[l-1] holds level l (l = 1 is the root); levels[depth()]
/// holds the leaf magnitudes |c_n|.
struct SubtreeNorms {
  std::vector<std::vector<double>> levels;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
  double at(int level, int node) const { return levels[level - 1][node - 1]; }
};

/// The 2N-1 tunable controls of the split-then-phase network: one split
/// angle per internal tree node and one output phase per antenna port.
struct TreeSettings {
  int n = 1;            // port count (power of two, after padding)
  int padded_from = 1;  // original target length before padding
  // alphas[l-1][i-1] is the split angle of node (l, i), radians in [0, pi/2].
  std::vector<std::vector<double>> alphas;
  // Output phase bank, radians reduced to [0, 2pi), size n.
  std::vector<double> thetas;
  // Set when the declared total_power disagreed with ||entries||^2 by more
  // than 1e-9 relative and the direction was renormalized.
  bool renormalized = false;

  int depth() const { return static_cast<int>(alphas.size()); }
  double alpha(int level, int node) const { return alphas[level - 1][node - 1]; }
  int control_count() const { return 2 * n - 1; }
  int alpha_count() const;
};

struct NormalizedTarget {
  Eigen::VectorXcd direction;  // unit norm
  double sqrt_power;
  bool renormalized;
};

/// Reduce an angle to [0, 2pi).
double reduce_angle(double radians);

/// Split a target into its unit-norm direction and power scale.
/// Throws ZeroVectorError / NonPositivePowerError.
NormalizedTarget normalize_target(const TargetVector& x);

/// Zero-extend to the next power-of-two length (no-op when already one).
Eigen::VectorXcd pad_to_power_of_two(const Eigen::VectorXcd& c);

/// Bottom-up subtree norms: leaf level |c_n|, parents by the energy
/// recursion r^2 = r_left^2 + r_right^2. Requires power-of-two length.
SubtreeNorms compute_subtree_norms(const Eigen::VectorXcd& c);

/// Closed-form split rule: alpha = atan2(r_right, r_left), 0 at dead nodes.
std::vector<std::vector<double>> compute_split_angles(const SubtreeNorms& norms);

/// Hamming weight of the depth-bit encoding of leaf-1 (right-child count).
inline int right_branch_count(int leaf, int depth) {
  return tree::right_branch_count(leaf, depth);
}

/// Deterministic per-output phase offsets of the magnitude tree:
/// (pi/2) * w_n mod 2pi, or a calibrated per-output vector passed through
/// verbatim. Throws CalibrationLengthMismatchError on a wrong-length vector.
std::vector<double> magnitude_tree_phase_offsets(
    int n, const std::optional<std::vector<double>>& calibrated = std::nullopt);

/// Output phase bank: theta_n = arg(c_n) - theta_mag_n - theta_s for
/// c_n != 0, and 0 for exactly-zero entries; reduced to [0, 2pi).
std::vector<double> compute_phase_bank(const Eigen::VectorXcd& c,
                                       const std::vector<double>& theta_mag,
                                       double theta_s = 0.0);

/// Full closed-form programming routine: normalize, pad, subtree norms,
/// split angles, tree phase offsets, phase bank. O(N) scalar work, pure.
TreeSettings program(const TargetVector& x, double theta_s = 0.0,
                     const std::optional<std::vector<double>>& calibrated_offsets =
                         std::nullopt);

}  // namespace ufan
