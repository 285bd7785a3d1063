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

#include <string>
#include <string_view>
#include <vector>

namespace ufan {

/// Per-symbol reconfiguration budget: control load + element tuning +
/// residual settling.
struct TimingBudget {
  double t_load_s = 0.0;
  double t_tune_s = 0.0;
  double t_settle_s = 0.0;

  double t_sw_s() const { return t_load_s + t_tune_s + t_settle_s; }
};

struct OfdmNumerology {
  std::string name;      // preset name, empty for custom
  double delta_f_hz = 0.0;  // subcarrier spacing
  double t_cp_s = 0.0;      // cyclic prefix

  double t_u_s() const { return 1.0 / delta_f_hz; }
  double t_ofdm_s() const { return t_u_s() + t_cp_s; }
};

/// Symbol-wise operation is feasible when the symbol interval covers the
/// reconfiguration budget (boundary inclusive).
bool feasible(const TimingBudget& budget, double t_s_s);

struct OfdmReport {
  bool feasible = false;
  double t_ss_s = 0.0;   // steady-state interval, clamped at 0 when infeasible
  bool clamped = false;
  bool fits_in_cp = false;
};

OfdmReport ofdm_report(const TimingBudget& budget, const OfdmNumerology& numerology);

/// Named numerology classes: "long" (15 kHz, 4.7 us CP), "medium"
/// (78.125 kHz, 0.8 us CP), "short" (312.5 kHz, 0.8 us CP). Approximate
/// presets; throws UnknownPresetError on anything else.
OfdmNumerology numerology_preset(std::string_view name);
std::vector<std::string> numerology_preset_names();

}  // namespace ufan
