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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ufan/power.hpp"
#include "ufan/synthesis.hpp"

namespace ufan {

// -- Target vectors ----------------------------------------------------

/// Inline form "re,im;re,im;..." (one complex entry per ';' group).
Eigen::VectorXcd parse_target_inline(const std::string& text);

/// File form: one "re,im" line per antenna; blank lines and '#' comments
/// are skipped.
Eigen::VectorXcd parse_target_file(const std::filesystem::path& path);

/// One radians value per line.
std::vector<double> parse_angles_file(const std::filesystem::path& path);

// -- Settings files ----------------------------------------------------

// Schema: {"N": int, "padded_from": int,
//          "alphas": [[level, node, radians], ...],
//          "thetas": [radians, ...]}         (angles in radians)
nlohmann::json settings_to_json(const TreeSettings& settings);
TreeSettings settings_from_json(const nlohmann::json& j);

void save_settings(const TreeSettings& settings, const std::filesystem::path& path);
TreeSettings load_settings(const std::filesystem::path& path);

// -- Profiles / digital coefficients ------------------------------------

// Schema: {"profiles": [{"name": str, "resolution_bits": int,
//          "t_tune_s": s, "l_phi_db": dB, "p_phi_w": W,
//          "l_hyb_db": dB (default 0.12), "l_out_db": dB (default l_phi)}]}
std::vector<TechProfile> profiles_from_json(const nlohmann::json& j);
nlohmann::json profiles_to_json(const std::vector<TechProfile>& profiles);
std::vector<TechProfile> load_profiles(const std::filesystem::path& path);

// Schema: {"alpha_w_per_chain": W, "beta_w_per_w": W/W, "p_sh_w": W,
//          "valid_p_ant_w": [lo, hi]}
DigitalCoeffs coeffs_from_json(const nlohmann::json& j);
nlohmann::json coeffs_to_json(const DigitalCoeffs& coeffs);
DigitalCoeffs load_coeffs(const std::filesystem::path& path);

// -- Tables --------------------------------------------------------------

/// Loss-table CSV: profile, L_phi_dB, p_phi_W, then per N an unrounded and
/// a 0.1-dB-rounded insertion-loss column.
std::string loss_table_csv(const std::vector<TechProfile>& profiles,
                           const std::vector<int>& n_list);
nlohmann::json loss_table_json(const std::vector<TechProfile>& profiles,
                               const std::vector<int>& n_list);

/// Power-comparison CSV: N, P_ant_tot_W, digital_W, then one column per
/// profile name; watt values rounded to 0.01 for presentation.
std::string power_table_csv(const std::vector<ComparisonRow>& rows,
                            const std::vector<TechProfile>& profiles);
nlohmann::json power_table_json(const std::vector<ComparisonRow>& rows,
                                const std::vector<TechProfile>& profiles);

// -- Misc ----------------------------------------------------------------

/// Dense matrix as CSV, row-major, each entry a "re,im" pair.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m);

/// Complex vector as CSV, one "re,im" line per entry.
void write_vector_csv(std::ostream& out, const Eigen::VectorXcd& v);

/// Whole-file atomic write (temp file + rename).
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace ufan
