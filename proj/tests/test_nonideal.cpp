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
#include <numbers>

#include "ufan/errors.hpp"
#include "ufan/nonideal.hpp"
#include "ufan/power.hpp"
#include "ufan/rng.hpp"

using namespace ufan;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Calculator-frozen values for L_hyb = 0.12 dB cells.
constexpr double kRhoCellRfMems = 0.924943317544047;   // L_phi = 0.2 dB
constexpr double kRfMemsN2LnetDb = 0.538848809173;
constexpr double kRfMemsN16LnetDb = 1.555395236692;
constexpr double kGanN8LnetDb = 2.664815913135;
constexpr double kDpsN16LnetDb = 4.935316997645;

std::vector<std::vector<double>> uniform_alphas(int n) {
  const int depth = tree::levels_for(n);
  std::vector<std::vector<double>> alphas(depth);
  for (int level = 1; level <= depth; ++level) {
    alphas[level - 1].assign(tree::nodes_at_level(level), kPi / 4);
  }
  return alphas;
}

}  // namespace

TEST_CASE("cell_loss_factor") {
  CHECK(cell_loss_factor({0.0, 0.0, 0.0}) == 1.0);
  const double rho_c = cell_loss_factor({0.12, 0.2, 0.2});
  CHECK(rho_c == doctest::Approx(kRhoCellRfMems).epsilon(1e-12));
  CHECK(rho_c == doctest::Approx(0.9250).epsilon(1e-4));
  const double rho_c_dps = cell_loss_factor({0.12, 1.4, 1.4});
  CHECK(rho_c_dps ==
        doctest::Approx(std::pow(10.0, -0.024) * (1 + std::pow(10.0, -0.14)) / 2)
            .epsilon(1e-14));
  CHECK_THROWS_AS(cell_loss_factor({-0.1, 0.2, 0.2}), std::invalid_argument);
}

TEST_CASE("tree_power_recursion") {
  SUBCASE("lossless uniform split") {
    const auto leaves = tree_power_recursion(uniform_alphas(4), {0, 0, 0});
    REQUIRE(leaves.size() == 4);
    for (double p : leaves) CHECK(p == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("lossless programmed tree reproduces target powers") {
    Rng rng(51);
    const Eigen::VectorXcd c = rng.unit_vector(8);
    const TreeSettings s = program({c, 1.0});
    const auto leaves = tree_power_recursion(s.alphas, {0, 0, 0});
    for (int i = 0; i < 8; ++i) {
      CHECK(leaves[i] == doctest::Approx(std::norm(c[i])).epsilon(1e-12));
    }
  }
  SUBCASE("uniform lossy tree delivers rho_c^L") {
    const LossParams params{0.12, 0.8, 0.8};
    const auto leaves = tree_power_recursion(uniform_alphas(16), params);
    double sum = 0.0;
    for (double p : leaves) sum += p;
    CHECK(sum == doctest::Approx(std::pow(cell_loss_factor(params), 4)).epsilon(1e-13));
  }
}

TEST_CASE("delivered_fraction and stress closed form") {
  SUBCASE("lossless") {
    CHECK(delivered_fraction(uniform_alphas(8), {0, 0, 0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(stress_loss_closed_form(8, {0, 0, 0}) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("stress case matches the frozen table values") {
    const LossParams rf_mems{0.12, 0.2, 0.2};
    const double n2 = stress_loss_closed_form(2, rf_mems);
    CHECK(n2 == doctest::Approx(kRfMemsN2LnetDb).epsilon(1e-9));
    CHECK(round_to_0p1_db(n2) == doctest::Approx(0.5));
    CHECK(n2 == doctest::Approx(0.54).epsilon(2e-3));  // quoted ~0.54 dB

    CHECK(stress_loss_closed_form(16, rf_mems) ==
          doctest::Approx(kRfMemsN16LnetDb).epsilon(1e-9));
    CHECK(round_to_0p1_db(stress_loss_closed_form(8, {0.12, 0.8, 0.8})) ==
          doctest::Approx(2.7));
    CHECK(stress_loss_closed_form(8, {0.12, 0.8, 0.8}) ==
          doctest::Approx(kGanN8LnetDb).epsilon(1e-9));
    const double dps16 = stress_loss_closed_form(16, {0.12, 1.4, 1.4});
    CHECK(dps16 == doctest::Approx(kDpsN16LnetDb).epsilon(1e-9));
    CHECK(round_to_0p1_db(dps16) == doctest::Approx(4.9));
  }
  SUBCASE("recursion agrees with the closed form up to N = 1024") {
    const LossParams params{0.12, 1.1, 1.1};
    for (int n = 2; n <= 1024; n *= 2) {
      const double g2_recursion = delivered_fraction(uniform_alphas(n), params);
      const double g2_closed =
          std::pow(10.0, -stress_loss_closed_form(n, params) / 10.0);
      CHECK(std::abs(g2_recursion - g2_closed) < 1e-12 * g2_closed);
    }
  }
  SUBCASE("single port keeps only the output element loss") {
    CHECK(stress_loss_closed_form(1, {0.12, 0.8, 0.3}) == doctest::Approx(0.3).epsilon(1e-12));
  }
  SUBCASE("monotone in every loss knob") {
    const LossParams base{0.12, 0.8, 0.8};
    const double l0 = stress_loss_closed_form(8, base);
    CHECK(stress_loss_closed_form(8, {0.2, 0.8, 0.8}) >= l0);
    CHECK(stress_loss_closed_form(8, {0.12, 1.0, 0.8}) >= l0);
    CHECK(stress_loss_closed_form(8, {0.12, 0.8, 1.0}) >= l0);
  }
  SUBCASE("contraction bound") {
    for (double l : {0.0, 0.2, 1.4}) {
      CHECK(delivered_fraction(uniform_alphas(16), {0.12 * (l > 0), l, l}) <= 1.0);
    }
  }
}

TEST_CASE("direction_error") {
  Rng rng(61);
  const Eigen::VectorXcd c = rng.unit_vector(8);
  SUBCASE("zero for the target itself") {
    CHECK(direction_error(c, c) == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("invariant under a common phase") {
    for (double phi : {0.1, kPi / 3, 2.9}) {
      const Eigen::VectorXcd rotated = std::polar(1.0, phi) * c;
      CHECK(std::abs(direction_error(c, rotated)) < 1e-14);
    }
    const double e0 = direction_error(c, std::polar(1.0, 0.7) * c);
    const double e1 = direction_error(c, std::polar(1.0, 1.9) * c);
    CHECK(std::abs(e0 - e1) < 1e-14);
  }
  SUBCASE("one for orthogonal directions") {
    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(4);
    Eigen::VectorXcd e2 = Eigen::VectorXcd::Zero(4);
    e1[0] = 1.0;
    e2[1] = 1.0;
    CHECK(direction_error(e1, e2) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("length mismatch rejected") {
    CHECK_THROWS_AS(direction_error(c, rng.unit_vector(4)), DimensionMismatchError);
  }
}

TEST_CASE("contract") {
  Rng rng(71);
  const int n = 8;
  const Eigen::VectorXcd c = rng.unit_vector(n);
  const TreeSettings settings = program({c, 1.0});

  SUBCASE("lossless network is transparent") {
    const ContractionResult result = contract(settings, {0, 0, 0}, c);
    CHECK(result.g == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(result.eps_dir < 1e-12);
    CHECK(result.l_net_db == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("stress loss scales but does not rotate") {
    const LossParams params{0.12, 0.8, 0.8};
    const ContractionResult result = contract(settings, params, c);
    const double g2_expected =
        params.rho_out() * std::pow(cell_loss_factor(params), tree::levels_for(n));
    CHECK(result.g * result.g == doctest::Approx(g2_expected).epsilon(1e-12));
    CHECK(result.eps_dir < 1e-12);
    CHECK(result.l_net_db ==
          doctest::Approx(stress_loss_closed_form(n, params)).epsilon(1e-12));
  }

  SUBCASE("shape-scale reconstruction") {
    const ContractionResult result = contract(settings, {0.12, 1.1, 1.1}, c);
    CHECK((result.realized - result.g * result.c_hat).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(result.c_hat.norm() - 1.0) < 1e-12);
  }

  SUBCASE("six-bit quantization produces small nonzero direction error") {
    double max_eps = 0.0;
    double sum_eps = 0.0;
    const int trials = 50;
    for (int t = 0; t < trials; ++t) {
      const Eigen::VectorXcd target = rng.unit_vector(n);
      const TreeSettings s = program({target, 1.0});
      const ContractionResult result =
          contract(s, {0.12, 1.4, 1.4}, target, PhaseQuantization{6});
      CHECK(result.eps_dir >= 0.0);
      CHECK(result.eps_dir < 1e-2);
      max_eps = std::max(max_eps, result.eps_dir);
      sum_eps += result.eps_dir;
    }
    CHECK(max_eps > 0.0);
    CHECK(sum_eps / trials > 1e-8);
    // Loss is settings-independent under the common-factor abstraction, so
    // quantization leaves g^2 at the stress figure.
    const ContractionResult one =
        contract(settings, {0.12, 1.4, 1.4}, c, PhaseQuantization{6});
    CHECK(one.l_net_db ==
          doctest::Approx(stress_loss_closed_form(n, {0.12, 1.4, 1.4})).epsilon(1e-12));
  }

  SUBCASE("profile-driven contraction quantizes only bit-resolved rows") {
    const auto profiles = builtin_profiles();
    const TechProfile* dps = nullptr;
    const TechProfile* rf_mems = nullptr;
    for (const auto& p : profiles) {
      if (p.name == "dps") dps = &p;
      if (p.name == "rf-mems") rf_mems = &p;
    }
    REQUIRE(dps != nullptr);
    REQUIRE(rf_mems != nullptr);
    double dps_eps = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Eigen::VectorXcd target = rng.unit_vector(n);
      const TreeSettings s = program({target, 1.0});
      dps_eps = std::max(dps_eps, contract_with_profile(s, *dps, target).eps_dir);
      // Discrete row: no bit count, so the direction stays exact.
      CHECK(contract_with_profile(s, *rf_mems, target).eps_dir < 1e-12);
    }
    CHECK(dps_eps > 0.0);
  }

  SUBCASE("quantization grid endpoints are representable") {
    TreeSettings s = settings;
    s.alphas[0][0] = kPi / 2;
    s.alphas[1][0] = 0.0;
    const TreeSettings q = quantize_settings(s, PhaseQuantization{6});
    CHECK(q.alphas[0][0] == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(q.alphas[1][0] == 0.0);
    for (const auto& level : q.alphas) {
      for (double alpha : level) {
        CHECK(alpha >= 0.0);
        CHECK(alpha <= kPi / 2 + 1e-15);
      }
    }
  }
}
