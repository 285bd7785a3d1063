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

#include <cmath>
#include <doctest.h>
#include <future>
#include <numbers>

#include "ufan/errors.hpp"
#include "ufan/network.hpp"
#include "ufan/rng.hpp"

using namespace ufan;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

double gram_residual(const Eigen::MatrixXcd& v) {
  const Eigen::MatrixXcd gram = v.adjoint() * v;
  return (gram - Eigen::MatrixXcd::Identity(v.rows(), v.cols())).cwiseAbs().maxCoeff();
}

TreeSettings identity_settings(int n) {
  TreeSettings s;
  s.n = n;
  s.padded_from = n;
  const int depth = tree::levels_for(n);
  s.alphas.resize(depth);
  for (int level = 1; level <= depth; ++level) {
    s.alphas[level - 1].assign(tree::nodes_at_level(level), 0.0);
  }
  s.thetas.assign(n, 0.0);
  return s;
}

}  // namespace

TEST_CASE("splitter_cell") {
  SUBCASE("alpha = 0 is the identity") {
    CHECK(splitter_cell(0.0) == Eigen::Matrix2cd::Identity());
  }
  SUBCASE("alpha = pi/4 is the balanced splitter") {
    const Eigen::Matrix2cd u = splitter_cell(kPi / 4);
    const double s = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(u(0, 0) - Complex{s, 0.0}) < 1e-15);
    CHECK(std::abs(u(0, 1) - Complex{0.0, s}) < 1e-15);
    CHECK(std::abs(u(1, 0) - Complex{0.0, s}) < 1e-15);
    CHECK(std::abs(u(1, 1) - Complex{s, 0.0}) < 1e-15);
  }
  SUBCASE("unitary over the control range") {
    for (int k = 0; k <= 32; ++k) {
      const Eigen::Matrix2cd u = splitter_cell(k * kPi / 64.0);
      CHECK(gram_residual(u) < 1e-14);
    }
  }
  SUBCASE("fanout action on (a, 0)") {
    const Complex a{0.3, -0.8};
    const double alpha = 0.7;
    Eigen::Vector2cd in;
    in << a, Complex{0.0, 0.0};
    const Eigen::Vector2cd out = splitter_cell(alpha) * in;
    CHECK(out[0] == a * std::cos(alpha));
    CHECK(out[1] == Complex{0.0, 1.0} * a * std::sin(alpha));
  }
}

TEST_CASE("embed_splitter") {
  SUBCASE("N=2 identity case") {
    CHECK(embed_splitter(2, 1, 2, 0.0) == Eigen::MatrixXcd::Identity(2, 2));
  }
  SUBCASE("off-diagonal embedding keeps orthonormal columns") {
    const Eigen::MatrixXcd u = embed_splitter(4, 1, 3, kPi / 3);
    for (int col = 0; col < 4; ++col) {
      CHECK(u.col(col).norm() == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(std::abs(u.col(0).dot(u.col(2))) < 1e-14);
    CHECK(gram_residual(u) < 1e-14);
  }
  SUBCASE("index validation") {
    CHECK_THROWS_AS(embed_splitter(4, 0, 2, 0.1), IndexOutOfRangeError);
    CHECK_THROWS_AS(embed_splitter(4, 2, 2, 0.1), IndexOutOfRangeError);
    CHECK_THROWS_AS(embed_splitter(4, 1, 5, 0.1), IndexOutOfRangeError);
  }
}

TEST_CASE("build_layers index maps") {
  Rng rng(4);
  SUBCASE("N=2") {
    const NetworkModel model = build_layers(rng.settings(2));
    REQUIRE(model.layers.size() == 1);
    REQUIRE(model.layers[0].size() == 1);
    CHECK(model.layers[0][0].p == 1);
    CHECK(model.layers[0][0].q == 2);
  }
  SUBCASE("N=4") {
    const NetworkModel model = build_layers(rng.settings(4));
    REQUIRE(model.layers.size() == 2);
    CHECK(model.layers[0][0].p == 1);
    CHECK(model.layers[0][0].q == 3);
    CHECK(model.layers[1][0].p == 1);
    CHECK(model.layers[1][0].q == 2);
    CHECK(model.layers[1][1].p == 3);
    CHECK(model.layers[1][1].q == 4);
  }
  SUBCASE("N=8") {
    const NetworkModel model = build_layers(rng.settings(8));
    REQUIRE(model.layers.size() == 3);
    const std::vector<std::pair<int, int>> expected_l1{{1, 5}};
    const std::vector<std::pair<int, int>> expected_l2{{1, 3}, {5, 7}};
    const std::vector<std::pair<int, int>> expected_l3{{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    const std::vector<std::vector<std::pair<int, int>>> expected{expected_l1, expected_l2,
                                                                 expected_l3};
    for (size_t level = 0; level < expected.size(); ++level) {
      REQUIRE(model.layers[level].size() == expected[level].size());
      for (size_t i = 0; i < expected[level].size(); ++i) {
        CHECK(model.layers[level][i].p == expected[level][i].first);
        CHECK(model.layers[level][i].q == expected[level][i].second);
      }
    }
  }
  SUBCASE("pairs within a layer are disjoint") {
    const NetworkModel model = build_layers(rng.settings(32));
    for (const auto& layer : model.layers) {
      std::vector<int> used;
      for (const auto& mix : layer) {
        for (int idx : {mix.p, mix.q}) {
          CHECK(std::find(used.begin(), used.end(), idx) == used.end());
          used.push_back(idx);
        }
      }
    }
  }
  SUBCASE("malformed settings rejected") {
    TreeSettings s = rng.settings(4);
    s.thetas.pop_back();
    CHECK_THROWS_AS(build_layers(s), MalformedSettingsError);
    TreeSettings s2 = rng.settings(4);
    s2.alphas[1][0] = 2.0;  // outside [0, pi/2]
    CHECK_THROWS_AS(build_layers(s2), MalformedSettingsError);
    TreeSettings s3 = rng.settings(4);
    s3.alphas.pop_back();
    CHECK_THROWS_AS(build_layers(s3), MalformedSettingsError);
  }
}

TEST_CASE("assemble_dense") {
  SUBCASE("identity settings") {
    const NetworkModel model = build_layers(identity_settings(8));
    CHECK((assemble_dense(model) - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() ==
          0.0);
  }
  SUBCASE("phase bank cancels the quadrature branch") {
    TreeSettings s = identity_settings(2);
    s.alphas[0][0] = kPi / 4;
    s.thetas = {0.0, reduce_angle(-kPi / 2)};
    Eigen::VectorXcd e1(2);
    e1 << 1.0, 0.0;
    const Eigen::VectorXcd out = assemble_dense(build_layers(s)) * e1;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(out[0] - Complex{inv_sqrt2, 0.0}) < 1e-15);
    CHECK(std::abs(out[1] - Complex{inv_sqrt2, 0.0}) < 1e-15);
  }
  SUBCASE("random settings stay unitary") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      const NetworkModel model = build_layers(rng.settings(8));
      CHECK(gram_residual(assemble_dense(model)) < 1e-12);
    }
  }
  SUBCASE("matches the explicit embedded-product route") {
    Rng rng(19);
    for (int trial = 0; trial < 5; ++trial) {
      const NetworkModel model = build_layers(rng.settings(8));
      Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(8, 8);
      for (const auto& layer : model.layers) {
        for (const auto& mix : layer) {
          v = embed_splitter(8, mix.p, mix.q, mix.alpha) * v;
        }
      }
      Eigen::MatrixXcd bank = Eigen::MatrixXcd::Zero(8, 8);
      for (int i = 0; i < 8; ++i) bank(i, i) = std::polar(1.0, model.phase_bank[i]);
      v = bank * v;
      CHECK((v - assemble_dense(model)).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("magnitude tree emits quarter-turn phase offsets for any angles") {
  Rng rng(53);
  for (int n : {4, 16}) {
    for (int trial = 0; trial < 10; ++trial) {
      TreeSettings s = rng.settings(n);
      s.thetas.assign(n, 0.0);  // bare tree, no output phases
      WaveState input = WaveState::Zero(n);
      input[0] = 1.0;
      const WaveState out = propagate(build_layers(s), input);
      const auto offsets = magnitude_tree_phase_offsets(n);
      for (int leaf = 1; leaf <= n; ++leaf) {
        if (std::abs(out[leaf - 1]) < 1e-9) continue;
        const double gap =
            reduce_angle(std::arg(out[leaf - 1]) - offsets[leaf - 1]);
        CHECK(std::min(gap, 2 * kPi - gap) < 1e-12);
      }
    }
  }
}

TEST_CASE("propagate") {
  SUBCASE("matches the dense oracle on random settings and inputs") {
    Rng rng(23);
    for (int n : {2, 4, 8, 16}) {
      for (int trial = 0; trial < 10; ++trial) {
        const NetworkModel model = build_layers(rng.settings(n));
        const Eigen::MatrixXcd dense = assemble_dense(model);
        const Eigen::VectorXcd input = rng.unit_vector(n);
        const Eigen::VectorXcd fast = propagate(model, input);
        CHECK((fast - dense * input).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
  SUBCASE("all-zero angles rotate the input through the phase bank only") {
    Rng rng(29);
    TreeSettings s = identity_settings(4);
    s.thetas = {0.1, 0.2, 0.3, 0.4};
    const Eigen::VectorXcd input = rng.unit_vector(4);
    const Eigen::VectorXcd out = propagate(build_layers(s), input);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(out[i] - input[i] * std::polar(1.0, s.thetas[i])) < 1e-15);
    }
  }
  SUBCASE("two-layer uniform tree splits e1 four ways") {
    TreeSettings s = identity_settings(4);
    s.alphas = {{kPi / 4}, {kPi / 4, kPi / 4}};
    s.thetas = compute_phase_bank(Eigen::VectorXcd::Constant(4, Complex{0.5, 0.0}),
                                  magnitude_tree_phase_offsets(4));
    WaveState input = WaveState::Zero(4);
    input[0] = 1.0;
    const WaveState out = propagate(build_layers(s), input);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(out[i] - Complex{0.5, 0.0}) < 1e-15);
    }
  }
  SUBCASE("end-to-end synthesis round trip") {
    Rng rng(31);
    for (int n : {2, 8, 32}) {
      const Eigen::VectorXcd c = rng.unit_vector(n);
      const double power = 2.0;
      const TreeSettings s = program({std::sqrt(power) * c, power});
      WaveState input = WaveState::Zero(n);
      input[0] = std::sqrt(power);
      const WaveState out = propagate(build_layers(s), input);
      CHECK((out - std::sqrt(power) * c).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(std::abs(out.squaredNorm() - power) < 1e-12 * power);
    }
  }
  SUBCASE("global-phase covariance") {
    Rng rng(37);
    const int n = 8;
    const Eigen::VectorXcd c = rng.unit_vector(n);
    const double theta_s = 1.234;
    const TreeSettings s = program({c, 1.0}, theta_s);
    WaveState input = WaveState::Zero(n);
    input[0] = std::polar(1.0, theta_s);
    const WaveState out = propagate(build_layers(s), input);
    CHECK((out - c).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("dimension mismatch rejected") {
    const NetworkModel model = build_layers(identity_settings(4));
    CHECK_THROWS_AS(propagate(model, WaveState::Zero(3)), DimensionMismatchError);
  }
}

TEST_CASE("zero-input property during fanout") {
  Rng rng(41);
  for (int n : {4, 8, 16}) {
    for (int trial = 0; trial < 10; ++trial) {
      const NetworkModel model = build_layers(rng.settings(n));
      WaveState input = WaveState::Zero(n);
      input[0] = 1.0;
      const PropagationTrace trace = propagate_traced(model, input);
      for (size_t level = 0; level < model.layers.size(); ++level) {
        for (const auto& mix : model.layers[level]) {
          CHECK(trace.before_layer[level][mix.q - 1] == Complex{0.0, 0.0});
        }
      }
    }
  }
}

TEST_CASE("mixes within a layer commute") {
  Rng rng(43);
  const NetworkModel model = build_layers(rng.settings(16));
  const Eigen::VectorXcd input = rng.unit_vector(16);

  auto apply_layer = [](const std::vector<LayerMix>& layer, Eigen::VectorXcd state,
                        bool reversed) {
    auto mix_once = [&state](const LayerMix& mix) {
      const Complex a = state[mix.p - 1];
      const Complex b = state[mix.q - 1];
      const double c = std::cos(mix.alpha);
      const Complex js{0.0, std::sin(mix.alpha)};
      state[mix.p - 1] = c * a + js * b;
      state[mix.q - 1] = js * a + c * b;
    };
    if (reversed) {
      for (auto it = layer.rbegin(); it != layer.rend(); ++it) mix_once(*it);
    } else {
      for (const auto& mix : layer) mix_once(mix);
    }
    return state;
  };

  for (const auto& layer : model.layers) {
    const Eigen::VectorXcd forward = apply_layer(layer, input, false);
    const Eigen::VectorXcd backward = apply_layer(layer, input, true);
    CHECK(forward == backward);  // disjoint coordinate pairs, bitwise equal
  }
}

TEST_CASE("mzi_transfer") {
  SUBCASE("zero differential phase is the identity") {
    CHECK((mzi_transfer(0.0) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("pi differential phase is the crossover") {
    const Eigen::Matrix2cd u = mzi_transfer(kPi);
    CHECK(std::abs(u(0, 0)) < 1e-16);
    CHECK(std::abs(u(1, 1)) < 1e-16);
    CHECK(std::abs(u(0, 1) - Complex{0.0, 1.0}) < 1e-15);
    CHECK(std::abs(u(1, 0) - Complex{0.0, 1.0}) < 1e-15);
  }
  SUBCASE("doubling rule matches the splitter cell") {
    const double alpha = 0.3;
    CHECK((mzi_transfer(2 * alpha) - splitter_cell(alpha)).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("input_concentrator_check") {
  CHECK(input_concentrator_check(2));
  CHECK(input_concentrator_check(4));
  CHECK(input_concentrator_check(8));
  CHECK(input_concentrator_check(64));
}

TEST_CASE("component_counts") {
  const ComponentCounts n2 = component_counts(2);
  CHECK(n2.cells == 1);
  CHECK(n2.hybrids == 2);
  CHECK(n2.tunable_controls == 3);
  CHECK(n2.depth == 1);

  const ComponentCounts n16 = component_counts(16);
  CHECK(n16.cells == 15);
  CHECK(n16.hybrids == 30);
  CHECK(n16.tunable_controls == 31);
  CHECK(n16.depth == 4);

  const ComponentCounts n1 = component_counts(1);
  CHECK(n1.cells == 0);
  CHECK(n1.hybrids == 0);
  CHECK(n1.tunable_controls == 1);
  CHECK(n1.depth == 0);
}

TEST_CASE("concurrent propagations over a shared model") {
  Rng rng(47);
  const NetworkModel model = build_layers(rng.settings(32));
  const Eigen::VectorXcd input = rng.unit_vector(32);
  const Eigen::VectorXcd expected = propagate(model, input);

  std::vector<std::future<Eigen::VectorXcd>> futures;
  for (int t = 0; t < 8; ++t) {
    futures.push_back(std::async(std::launch::async,
                                 [&model, &input] { return propagate(model, input); }));
  }
  for (auto& future : futures) {
    CHECK(future.get() == expected);  // immutable model, identical results
  }
}

TEST_CASE("degenerate single-port network") {
  Eigen::VectorXcd x(1);
  x << Complex{0.0, 2.0};
  const TreeSettings s = program({x, 4.0});
  CHECK(s.n == 1);
  CHECK(s.alpha_count() == 0);
  REQUIRE(s.thetas.size() == 1);
  WaveState input(1);
  input << 2.0;
  const WaveState out = propagate(build_layers(s), input);
  CHECK(std::abs(out[0] - Complex{0.0, 2.0}) < 1e-15);
}
