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

#include "ufan/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ufan/errors.hpp"
#include "ufan/nonideal.hpp"

namespace ufan {

namespace {

std::string trim(std::string_view s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

double parse_double(const std::string& token, const char* what) {
  const std::string t = trim(token);
  if (t.empty()) throw ParseError(std::string("empty ") + what);
  try {
    size_t used = 0;
    const double value = std::stod(t, &used);
    if (used != t.size()) throw ParseError("trailing characters in " + t);
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(std::string("cannot parse ") + what + ": '" + t + "'");
  }
}

std::complex<double> parse_complex_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ParseError("expected 're,im' pair, got '" + text + "'");
  }
  return {parse_double(text.substr(0, comma), "real part"),
          parse_double(text.substr(comma + 1), "imaginary part")};
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string format_full(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

Eigen::VectorXcd parse_target_inline(const std::string& text) {
  std::vector<std::complex<double>> entries;
  std::stringstream stream(text);
  std::string group;
  while (std::getline(stream, group, ';')) {
    if (trim(group).empty()) continue;
    entries.push_back(parse_complex_pair(group));
  }
  if (entries.empty()) throw ParseError("no complex entries in target string");
  return Eigen::Map<Eigen::VectorXcd>(entries.data(), entries.size());
}

Eigen::VectorXcd parse_target_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open target file: " + path.string());
  std::vector<std::complex<double>> entries;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    entries.push_back(parse_complex_pair(t));
  }
  if (entries.empty()) throw ParseError("no complex entries in " + path.string());
  return Eigen::Map<Eigen::VectorXcd>(entries.data(), entries.size());
}

std::vector<double> parse_angles_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open angles file: " + path.string());
  std::vector<double> angles;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    angles.push_back(parse_double(t, "angle"));
  }
  return angles;
}

nlohmann::json settings_to_json(const TreeSettings& settings) {
  nlohmann::json j;
  j["N"] = settings.n;
  j["padded_from"] = settings.padded_from;
  auto alphas = nlohmann::json::array();
  for (int level = 1; level <= settings.depth(); ++level) {
    for (int node = 1; node <= static_cast<int>(settings.alphas[level - 1].size());
         ++node) {
      alphas.push_back({level, node, settings.alpha(level, node)});
    }
  }
  j["alphas"] = std::move(alphas);
  j["thetas"] = settings.thetas;
  if (settings.renormalized) j["renormalized"] = true;
  return j;
}

TreeSettings settings_from_json(const nlohmann::json& j) {
  TreeSettings settings;
  try {
    settings.n = j.at("N").get<int>();
    settings.padded_from = j.value("padded_from", settings.n);
    settings.renormalized = j.value("renormalized", false);
    if (!tree::is_power_of_two(settings.n)) {
      throw MalformedSettingsError("settings N must be a power of two");
    }
    const int depth = tree::levels_for(settings.n);
    settings.alphas.resize(depth);
    for (int level = 1; level <= depth; ++level) {
      settings.alphas[level - 1].assign(tree::nodes_at_level(level), 0.0);
    }
    std::vector<std::vector<bool>> seen(depth);
    for (int level = 1; level <= depth; ++level) {
      seen[level - 1].assign(tree::nodes_at_level(level), false);
    }
    for (const auto& entry : j.at("alphas")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw MalformedSettingsError("alpha entries must be [level, node, radians]");
      }
      const int level = entry[0].get<int>();
      const int node = entry[1].get<int>();
      if (level < 1 || level > depth || node < 1 || node > tree::nodes_at_level(level)) {
        throw MalformedSettingsError("alpha entry index out of range");
      }
      if (seen[level - 1][node - 1]) {
        throw MalformedSettingsError("duplicate alpha entry");
      }
      seen[level - 1][node - 1] = true;
      settings.alphas[level - 1][node - 1] = entry[2].get<double>();
    }
    for (const auto& level : seen) {
      for (bool s : level) {
        if (!s) throw MalformedSettingsError("missing alpha entry");
      }
    }
    settings.thetas = j.at("thetas").get<std::vector<double>>();
    if (static_cast<int>(settings.thetas.size()) != settings.n) {
      throw MalformedSettingsError("thetas length does not match N");
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedSettingsError(std::string("bad settings JSON: ") + e.what());
  }
  return settings;
}

void save_settings(const TreeSettings& settings, const std::filesystem::path& path) {
  atomic_write_file(path, settings_to_json(settings).dump(2) + "\n");
}

TreeSettings load_settings(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw MalformedSettingsError(std::string("bad settings JSON: ") + e.what());
  }
  return settings_from_json(j);
}

std::vector<TechProfile> profiles_from_json(const nlohmann::json& j) {
  std::vector<TechProfile> profiles;
  try {
    for (const auto& p : j.at("profiles")) {
      TechProfile profile;
      profile.name = p.at("name").get<std::string>();
      profile.resolution_bits = p.value("resolution_bits", 0);
      profile.t_tune_s = p.at("t_tune_s").get<double>();
      profile.l_phi_db = p.at("l_phi_db").get<double>();
      profile.p_phi_w = p.at("p_phi_w").get<double>();
      profile.loss.l_hyb_db = p.value("l_hyb_db", 0.12);
      profile.loss.l_phi_db = profile.l_phi_db;
      profile.loss.l_out_db = p.value("l_out_db", profile.l_phi_db);
      profiles.push_back(std::move(profile));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad profiles JSON: ") + e.what());
  }
  if (profiles.empty()) throw ParseError("profiles JSON lists no profiles");
  for (size_t i = 0; i < profiles.size(); ++i) {
    for (size_t k = i + 1; k < profiles.size(); ++k) {
      if (profiles[i].name == profiles[k].name) {
        throw ParseError("duplicate profile name: " + profiles[i].name);
      }
    }
  }
  return profiles;
}

nlohmann::json profiles_to_json(const std::vector<TechProfile>& profiles) {
  auto list = nlohmann::json::array();
  for (const auto& p : profiles) {
    list.push_back({{"name", p.name},
                    {"resolution_bits", p.resolution_bits},
                    {"t_tune_s", p.t_tune_s},
                    {"l_phi_db", p.l_phi_db},
                    {"p_phi_w", p.p_phi_w},
                    {"l_hyb_db", p.loss.l_hyb_db},
                    {"l_out_db", p.loss.l_out_db}});
  }
  return {{"profiles", std::move(list)}};
}

std::vector<TechProfile> load_profiles(const std::filesystem::path& path) {
  try {
    return profiles_from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad profiles JSON: ") + e.what());
  }
}

DigitalCoeffs coeffs_from_json(const nlohmann::json& j) {
  DigitalCoeffs coeffs;
  try {
    coeffs.alpha_w_per_chain = j.at("alpha_w_per_chain").get<double>();
    coeffs.beta_w_per_w = j.at("beta_w_per_w").get<double>();
    coeffs.p_sh_w = j.value("p_sh_w", 0.0);
    if (j.contains("valid_p_ant_w")) {
      const auto& range = j.at("valid_p_ant_w");
      coeffs.valid_p_ant_lo_w = range.at(0).get<double>();
      coeffs.valid_p_ant_hi_w = range.at(1).get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad coefficients JSON: ") + e.what());
  }
  if (!(coeffs.valid_p_ant_lo_w < coeffs.valid_p_ant_hi_w)) {
    throw ParseError("coefficient validity range is empty");
  }
  return coeffs;
}

nlohmann::json coeffs_to_json(const DigitalCoeffs& coeffs) {
  return {{"alpha_w_per_chain", coeffs.alpha_w_per_chain},
          {"beta_w_per_w", coeffs.beta_w_per_w},
          {"p_sh_w", coeffs.p_sh_w},
          {"valid_p_ant_w", {coeffs.valid_p_ant_lo_w, coeffs.valid_p_ant_hi_w}}};
}

DigitalCoeffs load_coeffs(const std::filesystem::path& path) {
  try {
    return coeffs_from_json(nlohmann::json::parse(read_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad coefficients JSON: ") + e.what());
  }
}

std::string loss_table_csv(const std::vector<TechProfile>& profiles,
                           const std::vector<int>& n_list) {
  std::ostringstream out;
  out << "profile,L_phi_dB,p_phi_W";
  for (int n : n_list) {
    out << ",Lnet_N" << n << "_dB,Lnet_N" << n << "_rounded_dB";
  }
  out << "\n";
  for (const auto& profile : profiles) {
    out << profile.name << ',' << format_fixed(profile.l_phi_db, 2) << ','
        << format_fixed(profile.p_phi_w, 4);
    for (int n : n_list) {
      const double l_net = stress_loss_closed_form(n, profile.loss);
      out << ',' << format_fixed(l_net, 6) << ',' << format_fixed(round_to_0p1_db(l_net), 1);
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json loss_table_json(const std::vector<TechProfile>& profiles,
                               const std::vector<int>& n_list) {
  auto rows = nlohmann::json::array();
  for (const auto& profile : profiles) {
    nlohmann::json row{{"profile", profile.name},
                       {"l_phi_db", profile.l_phi_db},
                       {"p_phi_w", profile.p_phi_w}};
    auto losses = nlohmann::json::array();
    for (int n : n_list) {
      const double l_net = stress_loss_closed_form(n, profile.loss);
      losses.push_back({{"n", n},
                        {"l_net_db", l_net},
                        {"l_net_rounded_db", round_to_0p1_db(l_net)}});
    }
    row["l_net"] = std::move(losses);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string power_table_csv(const std::vector<ComparisonRow>& rows,
                            const std::vector<TechProfile>& profiles) {
  std::ostringstream out;
  out << "N,P_ant_tot_W,digital_W";
  for (const auto& profile : profiles) out << ',' << profile.name << "_W";
  out << "\n";
  for (const auto& row : rows) {
    out << row.n << ',' << format_fixed(row.p_ant_tot_w, 2) << ','
        << format_fixed(round_to_0p01_w(row.digital_w), 2);
    for (double w : row.analog_w) out << ',' << format_fixed(round_to_0p01_w(w), 2);
    out << "\n";
  }
  return out.str();
}

nlohmann::json power_table_json(const std::vector<ComparisonRow>& rows,
                                const std::vector<TechProfile>& profiles) {
  auto list = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json item{{"n", row.n},
                        {"p_ant_tot_w", row.p_ant_tot_w},
                        {"digital_w", row.digital_w},
                        {"digital_within_validity", row.digital_within_validity}};
    nlohmann::json analog;
    for (size_t i = 0; i < profiles.size(); ++i) {
      analog[profiles[i].name] = row.analog_w[i];
    }
    item["analog_w"] = std::move(analog);
    list.push_back(std::move(item));
  }
  return list;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m) {
  for (Eigen::Index row = 0; row < m.rows(); ++row) {
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      if (col > 0) out << ',';
      out << format_full(m(row, col).real()) << ',' << format_full(m(row, col).imag());
    }
    out << "\n";
  }
}

void write_vector_csv(std::ostream& out, const Eigen::VectorXcd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out << format_full(v[i].real()) << ',' << format_full(v[i].imag()) << "\n";
  }
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ufan
