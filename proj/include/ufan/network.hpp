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
#include <vector>

#include "ufan/synthesis.hpp"

namespace ufan {

/// Power-wave phasor vector at a reference plane; squared 2-norm is total
/// power in watts.
using WaveState = Eigen::VectorXcd;

/// Tunable 2x2 fanout splitter [[cos a, j sin a], [j sin a, cos a]].
Eigen::Matrix2cd splitter_cell(double alpha);

/// Ideal 3 dB coupler (1/sqrt 2) [[1, 1], [1, -1]].
Eigen::Matrix2cd hybrid_coupler();

/// Mach-Zehnder transfer H diag(e^{j d/2}, e^{-j d/2}) H, computed through
/// the coupler products rather than the closed form so it can serve as an
/// independent route for splitter_cell (splitter_cell(a) == mzi_transfer(2a)).
Eigen::Matrix2cd mzi_transfer(double delta);

/// splitter_cell(alpha) embedded at coordinates {p, q} of an n-port identity
/// (1-based). Throws IndexOutOfRangeError unless 1 <= p < q <= n.
Eigen::MatrixXcd embed_splitter(int n, int p, int q, double alpha);

struct LayerMix {
  int p;         // entry coordinate (1-based)
  int q;         // partner coordinate
  double alpha;  // split angle
};

/// Structured network description: L layers of disjoint 2x2 mixes followed
/// by the diagonal output phase bank. Immutable after construction;
/// concurrent propagations over a shared model are safe.
struct NetworkModel {
  int n = 1;
  std::vector<std::vector<LayerMix>> layers;  // layers[l-1] for level l
  std::vector<double> phase_bank;             // radians, size n
};

/// Lay out the tree mixes per level from programmed settings. Throws
/// MalformedSettingsError on inconsistent sizes or out-of-range angles.
NetworkModel build_layers(const TreeSettings& settings);

/// Dense transfer V = diag(e^{j theta}) U_L ... U_1 (verification oracle).
Eigen::MatrixXcd assemble_dense(const NetworkModel& model);

/// Structured application of the layers and phase bank: O(N log N) work,
/// O(N) memory. Throws DimensionMismatchError on a wrong-length input.
WaveState propagate(const NetworkModel& model, const WaveState& input);

struct PropagationTrace {
  std::vector<WaveState> before_layer;  // state entering each layer
  WaveState output;
};

/// propagate with per-layer input snapshots, for inspecting the fanout
/// (zero partner coordinate) operating condition.
PropagationTrace propagate_traced(const NetworkModel& model, const WaveState& input);

/// Verify that the normalized N-point DFT concentrates the uniform vector
/// into port 1: F_N (1/sqrt N) 1 == e_1 within 1e-12.
bool input_concentrator_check(int n);

struct ComponentCounts {
  int cells;
  int hybrids;
  int tunable_controls;
  int depth;
};

/// Idealized hardware totals: N-1 cells, 2(N-1) hybrids, 2N-1 controls,
/// log2 N layers.
ComponentCounts component_counts(int n);

}  // namespace ufan
