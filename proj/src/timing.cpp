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

#include "ufan/timing.hpp"

#include <stdexcept>

#include "ufan/errors.hpp"

namespace ufan {

bool feasible(const TimingBudget& budget, double t_s_s) {
  if (!(t_s_s > 0.0)) throw std::invalid_argument("symbol duration must be positive");
  return t_s_s >= budget.t_sw_s();
}

OfdmReport ofdm_report(const TimingBudget& budget, const OfdmNumerology& numerology) {
  if (!(numerology.delta_f_hz > 0.0)) {
    throw std::invalid_argument("subcarrier spacing must be positive");
  }
  if (numerology.t_cp_s < 0.0) {
    throw std::invalid_argument("cyclic prefix must be nonnegative");
  }
  const double t_sw = budget.t_sw_s();
  const double t_ofdm = numerology.t_ofdm_s();

  OfdmReport report;
  report.feasible = t_sw <= t_ofdm;
  if (report.feasible) {
    report.t_ss_s = t_ofdm - t_sw;
  } else {
    report.t_ss_s = 0.0;
    report.clamped = true;
  }
  report.fits_in_cp = t_sw <= numerology.t_cp_s;
  return report;
}

OfdmNumerology numerology_preset(std::string_view name) {
  if (name == "long") return {"long", 15e3, 4.7e-6};
  if (name == "medium") return {"medium", 78.125e3, 0.8e-6};
  if (name == "short") return {"short", 312.5e3, 0.8e-6};
  throw UnknownPresetError("unknown numerology preset: " + std::string(name));
}

std::vector<std::string> numerology_preset_names() { return {"long", "medium", "short"}; }

}  // namespace ufan
