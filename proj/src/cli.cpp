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

#include "ufan/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ufan/errors.hpp"
#include "ufan/io.hpp"
#include "ufan/network.hpp"
#include "ufan/nonideal.hpp"
#include "ufan/power.hpp"
#include "ufan/rng.hpp"
#include "ufan/synthesis.hpp"
#include "ufan/timing.hpp"

namespace ufan {

namespace {

constexpr double kResidualTolerance = 1e-10;
constexpr double kUnitarityTolerance = 1e-12;
constexpr double kPowerTolerance = 1e-12;

struct CommonConfig {
  std::string profiles_path;
  std::string coeffs_path;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 0;
};

std::vector<TechProfile> resolve_profiles(const CommonConfig& config) {
  if (!config.profiles_path.empty()) return load_profiles(config.profiles_path);
  if (const char* env = std::getenv("UNITARY_FANOUT_PROFILES"); env && *env) {
    return load_profiles(env);
  }
  return builtin_profiles();
}

DigitalCoeffs resolve_coeffs(const CommonConfig& config) {
  if (!config.coeffs_path.empty()) return load_coeffs(config.coeffs_path);
  return DigitalCoeffs{};
}

/// Route a finished document to --out (atomically) or to the stream.
void emit(const CommonConfig& config, std::ostream& out, const std::string& text) {
  if (config.out_path.empty()) {
    out << text;
  } else {
    atomic_write_file(config.out_path, text);
  }
}

Eigen::VectorXcd load_target(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty()) return parse_target_inline(inline_text);
  return parse_target_file(file);
}

const TechProfile& find_profile(const std::vector<TechProfile>& profiles,
                                const std::string& name) {
  for (const auto& p : profiles) {
    if (p.name == name) return p;
  }
  throw ParseError("unknown profile: " + name);
}

struct SynthOptions {
  std::string target_inline;
  std::string target_file;
  double power = 1.0;
  double theta_s = 0.0;
  std::string mag_offsets_file;
};

int cmd_synth(const CommonConfig& config, const SynthOptions& opt, std::ostream& out,
              std::ostream& err) {
  TargetVector target{load_target(opt.target_inline, opt.target_file), opt.power};
  std::optional<std::vector<double>> calibrated;
  if (!opt.mag_offsets_file.empty()) calibrated = parse_angles_file(opt.mag_offsets_file);

  const TreeSettings settings = program(target, opt.theta_s, calibrated);
  if (settings.renormalized) {
    err << "note: target norm disagreed with the declared power; direction was "
           "renormalized\n";
  }

  const std::string doc = settings_to_json(settings).dump(2) + "\n";
  if (config.out_path.empty()) {
    out << doc;
  } else {
    atomic_write_file(config.out_path, doc);
  }
  out << "N=" << settings.n << " padded_from=" << settings.padded_from
      << " split_controls=" << settings.n - 1 << " phase_controls=" << settings.n
      << " total_controls=" << settings.control_count() << "\n";
  return 0;
}

struct SimulateOptions {
  std::string settings_file;
  double power = 1.0;
  std::string target_inline;
  std::string target_file;
  std::string checks = "on";
  std::string matrix_out;
  int verify_targets = 0;
};

int cmd_simulate(const CommonConfig& config, const SimulateOptions& opt,
                 std::ostream& out, std::ostream& err) {
  const TreeSettings settings = load_settings(opt.settings_file);
  const NetworkModel model = build_layers(settings);
  const bool checks_on = opt.checks == "on";

  WaveState input = WaveState::Zero(model.n);
  input[0] = std::sqrt(opt.power);
  const PropagationTrace trace = propagate_traced(model, input);
  const WaveState& output = trace.output;

  nlohmann::json report;
  report["n"] = model.n;
  report["power_w"] = opt.power;
  report["seed"] = config.seed;

  bool failed = false;

  std::optional<double> residual;
  if (!opt.target_inline.empty() || !opt.target_file.empty()) {
    TargetVector target{load_target(opt.target_inline, opt.target_file), opt.power};
    const NormalizedTarget normalized = normalize_target(target);
    const Eigen::VectorXcd reference =
        std::sqrt(opt.power) * pad_to_power_of_two(normalized.direction);
    if (reference.size() != output.size()) {
      throw DimensionMismatchError("target length does not match settings N");
    }
    residual = (output - reference).cwiseAbs().maxCoeff();
    report["residual_inf"] = *residual;
    if (checks_on && *residual > kResidualTolerance) failed = true;
  }

  if (checks_on) {
    const Eigen::MatrixXcd dense = assemble_dense(model);
    const double unitarity =
        (dense.adjoint() * dense - Eigen::MatrixXcd::Identity(model.n, model.n))
            .cwiseAbs()
            .maxCoeff();
    const double power_error =
        std::abs(output.squaredNorm() - opt.power) / opt.power;
    const double oracle_gap =
        (dense * input - output).cwiseAbs().maxCoeff();
    bool zero_input_exact = true;
    for (int level = 1; level <= static_cast<int>(model.layers.size()); ++level) {
      for (const auto& mix : model.layers[level - 1]) {
        if (trace.before_layer[level - 1][mix.q - 1] != std::complex<double>{0.0, 0.0}) {
          zero_input_exact = false;
        }
      }
    }
    report["unitarity_residual"] = unitarity;
    report["power_rel_error"] = power_error;
    report["oracle_gap_inf"] = oracle_gap;
    report["zero_input_exact"] = zero_input_exact;
    if (unitarity > kUnitarityTolerance || power_error > kPowerTolerance ||
        oracle_gap > kUnitarityTolerance || !zero_input_exact) {
      failed = true;
    }

    if (!opt.matrix_out.empty()) {
      std::ostringstream buf;
      write_matrix_csv(buf, dense);
      atomic_write_file(opt.matrix_out, buf.str());
    }
  } else if (!opt.matrix_out.empty()) {
    std::ostringstream buf;
    write_matrix_csv(buf, assemble_dense(model));
    atomic_write_file(opt.matrix_out, buf.str());
  }

  if (opt.verify_targets > 0) {
    Rng rng(config.seed);
    double worst = 0.0;
    for (int k = 0; k < opt.verify_targets; ++k) {
      const Eigen::VectorXcd c = rng.unit_vector(model.n);
      const TreeSettings s = program({std::sqrt(opt.power) * c, opt.power});
      WaveState e1 = WaveState::Zero(model.n);
      e1[0] = std::sqrt(opt.power);
      const WaveState got = propagate(build_layers(s), e1);
      worst = std::max(worst,
                       (got - std::sqrt(opt.power) * c).cwiseAbs().maxCoeff());
    }
    report["verify_targets"] = opt.verify_targets;
    report["verify_max_residual_inf"] = worst;
    if (worst > kResidualTolerance) failed = true;
  }

  if (config.format == "json") {
    auto entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < output.size(); ++i) {
      entries.push_back({output[i].real(), output[i].imag()});
    }
    report["output"] = std::move(entries);
    emit(config, out, report.dump(2) + "\n");
  } else {
    for (auto& [key, value] : report.items()) {
      out << key << '=' << value.dump() << "\n";
    }
    std::ostringstream buf;
    write_vector_csv(buf, output);
    if (config.out_path.empty()) {
      out << buf.str();
    } else {
      atomic_write_file(config.out_path, buf.str());
    }
  }
  if (failed) {
    err << "verification failed\n";
    return 2;
  }
  return 0;
}

struct TableOptions {
  std::vector<int> n_list{2, 4, 8, 16};
  double p_ant_w = 0.2;
  double eta_pa = 0.5;
  double p_ctrl_w = 0.0;
  bool exact_loss = false;
  int n_max = 4096;
};

int cmd_loss(const CommonConfig& config, const TableOptions& opt, std::ostream& out) {
  const auto profiles = resolve_profiles(config);
  for (int n : opt.n_list) {
    if (!tree::is_power_of_two(n)) throw ParseError("N values must be powers of two");
  }
  if (config.format == "json") {
    emit(config, out, loss_table_json(profiles, opt.n_list).dump(2) + "\n");
  } else {
    emit(config, out, loss_table_csv(profiles, opt.n_list));
  }
  return 0;
}

int run_power_table(const CommonConfig& config, const TableOptions& opt,
                    const std::vector<int>& n_list, std::ostream& out,
                    std::ostream& err) {
  const auto profiles = resolve_profiles(config);
  const auto coeffs = resolve_coeffs(config);
  auto rows = equal_pant_comparison(n_list, opt.p_ant_w, profiles, coeffs, opt.eta_pa,
                                    !opt.exact_loss);
  if (opt.p_ctrl_w != 0.0) {
    for (auto& row : rows) {
      for (size_t i = 0; i < row.analog_w.size(); ++i) {
        row.analog_w[i] =
            analog_dc(row.n, row.p_ant_tot_w, profiles[i], opt.eta_pa, opt.p_ctrl_w,
                      !opt.exact_loss)
                .total_w;
      }
    }
  }
  for (const auto& row : rows) {
    if (!row.digital_within_validity) {
      err << "warning: p_ant outside the digital model validity range at N=" << row.n
          << "\n";
    }
  }
  if (config.format == "json") {
    emit(config, out, power_table_json(rows, profiles).dump(2) + "\n");
  } else {
    emit(config, out, power_table_csv(rows, profiles));
  }
  return 0;
}

int cmd_power(const CommonConfig& config, const TableOptions& opt, std::ostream& out,
              std::ostream& err) {
  for (int n : opt.n_list) {
    if (!tree::is_power_of_two(n)) throw ParseError("N values must be powers of two");
  }
  if (!(opt.p_ant_w > 0.0)) throw ParseError("p_ant must be positive");
  return run_power_table(config, opt, opt.n_list, out, err);
}

int cmd_sweep(const CommonConfig& config, const TableOptions& opt, std::ostream& out,
              std::ostream& err) {
  if (!tree::is_power_of_two(opt.n_max)) throw ParseError("n-max must be a power of two");
  std::vector<int> n_list;
  for (int n = 2; n <= opt.n_max; n *= 2) n_list.push_back(n);
  return run_power_table(config, opt, n_list, out, err);
}

struct TimingOptions {
  std::string profile_name;
  double t_sw_s = -1.0;
  double t_load_s = 0.0;
  double t_settle_s = 0.0;
  std::string preset;
  double delta_f_hz = 0.0;
  double t_cp_s = 0.0;
};

int cmd_timing(const CommonConfig& config, const TimingOptions& opt, std::ostream& out) {
  TimingBudget budget;
  budget.t_load_s = opt.t_load_s;
  budget.t_settle_s = opt.t_settle_s;
  if (!opt.profile_name.empty()) {
    budget.t_tune_s = find_profile(resolve_profiles(config), opt.profile_name).t_tune_s;
  } else if (opt.t_sw_s >= 0.0) {
    budget.t_tune_s = opt.t_sw_s;
  } else {
    throw ParseError("timing needs --profile or --t-sw");
  }

  OfdmNumerology numerology;
  if (!opt.preset.empty()) {
    numerology = numerology_preset(opt.preset);
  } else if (opt.delta_f_hz > 0.0) {
    numerology = {"custom", opt.delta_f_hz, opt.t_cp_s};
  } else {
    throw ParseError("timing needs --preset or --delta-f");
  }

  const OfdmReport report = ofdm_report(budget, numerology);
  nlohmann::json j{{"numerology", numerology.name},
                   {"t_sw_s", budget.t_sw_s()},
                   {"t_u_s", numerology.t_u_s()},
                   {"t_cp_s", numerology.t_cp_s},
                   {"t_ofdm_s", numerology.t_ofdm_s()},
                   {"feasible", report.feasible},
                   {"t_ss_s", report.t_ss_s},
                   {"clamped", report.clamped},
                   {"fits_in_cp", report.fits_in_cp}};
  if (config.format == "json") {
    emit(config, out, j.dump(2) + "\n");
  } else {
    std::ostringstream buf;
    for (auto& [key, value] : j.items()) buf << key << '=' << value.dump() << "\n";
    emit(config, out, buf.str());
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Programs, simulates, and budget-analyzes a balanced-binary-tree "
               "analog multi-antenna transmitter."};
  app.require_subcommand(1);

  CommonConfig config;
  app.add_option("--profiles", config.profiles_path,
                 "Technology profiles JSON (or set UNITARY_FANOUT_PROFILES)");
  app.add_option("--coeffs", config.coeffs_path, "Digital model coefficients JSON");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", config.seed, "Seed for randomized verification");
  app.add_option("--out", config.out_path, "Write the result to a file (atomic)");

  SynthOptions synth_opt;
  auto* synth = app.add_subcommand("synth", "Compute tree settings for a target vector");
  synth->fallthrough();
  auto* synth_inline =
      synth->add_option("--target", synth_opt.target_inline, "Inline target re,im;re,im;...");
  auto* synth_file =
      synth->add_option("--target-file", synth_opt.target_file, "Target CSV (re,im per line)");
  synth_inline->excludes(synth_file);
  synth->add_option("--power", synth_opt.power, "Total power P in watts");
  synth->add_option("--theta-s", synth_opt.theta_s, "Common source phase offset (rad)");
  synth->add_option("--mag-offsets", synth_opt.mag_offsets_file,
                    "Calibrated per-output tree phase offsets (radians per line)");

  SimulateOptions sim_opt;
  auto* simulate = app.add_subcommand("simulate", "Propagate settings and verify");
  simulate->fallthrough();
  simulate->add_option("--settings", sim_opt.settings_file, "Settings JSON")->required();
  simulate->add_option("--power", sim_opt.power, "Injected tone power in watts");
  auto* sim_inline =
      simulate->add_option("--target", sim_opt.target_inline, "Reference target (inline)");
  auto* sim_file =
      simulate->add_option("--target-file", sim_opt.target_file, "Reference target CSV");
  sim_inline->excludes(sim_file);
  simulate->add_option("--checks", sim_opt.checks, "Run verification checks")
      ->check(CLI::IsMember({"on", "off"}));
  simulate->add_option("--matrix-out", sim_opt.matrix_out,
                       "Export the dense transfer matrix as CSV");
  simulate->add_option("--verify", sim_opt.verify_targets,
                       "Also run this many seeded random synthesis round trips");

  TableOptions loss_opt;
  auto* loss = app.add_subcommand("loss", "Stress-case insertion-loss table");
  loss->fallthrough();
  loss->add_option("-N,--n-list", loss_opt.n_list, "Port counts (powers of two)")
      ->delimiter(',');

  TableOptions power_opt;
  auto* power = app.add_subcommand("power", "Equal-p_ant DC power comparison table");
  power->fallthrough();
  power->add_option("-N,--n-list", power_opt.n_list, "Port counts (powers of two)")
      ->delimiter(',');
  power->add_option("--p-ant", power_opt.p_ant_w, "Per-antenna conducted power (W)");
  power->add_option("--eta-pa", power_opt.eta_pa, "PA efficiency");
  power->add_option("--p-ctrl", power_opt.p_ctrl_w, "Fixed controller overhead (W)");
  power->add_flag("--exact-loss", power_opt.exact_loss,
                  "Feed exact (unrounded) insertion loss into the budget");

  TableOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "Power comparison over N = 2..n-max");
  sweep->fallthrough();
  sweep->add_option("--n-max", sweep_opt.n_max, "Largest port count (power of two)");
  sweep->add_option("--p-ant", sweep_opt.p_ant_w, "Per-antenna conducted power (W)");
  sweep->add_option("--eta-pa", sweep_opt.eta_pa, "PA efficiency");
  sweep->add_option("--p-ctrl", sweep_opt.p_ctrl_w, "Fixed controller overhead (W)");
  sweep->add_flag("--exact-loss", sweep_opt.exact_loss,
                  "Feed exact (unrounded) insertion loss into the budget");

  TimingOptions timing_opt;
  auto* timing = app.add_subcommand("timing", "Symbol-timing feasibility report");
  timing->fallthrough();
  timing->add_option("--profile", timing_opt.profile_name, "Technology profile name");
  timing->add_option("--t-sw", timing_opt.t_sw_s, "Reconfiguration time (s)");
  timing->add_option("--t-load", timing_opt.t_load_s, "Control load time (s)");
  timing->add_option("--t-settle", timing_opt.t_settle_s, "Settling time (s)");
  timing->add_option("--preset", timing_opt.preset, "Numerology preset")
      ->check(CLI::IsMember(numerology_preset_names()));
  timing->add_option("--delta-f", timing_opt.delta_f_hz, "Subcarrier spacing (Hz)");
  timing->add_option("--t-cp", timing_opt.t_cp_s, "Cyclic prefix (s)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (*synth) {
      if (synth_opt.target_inline.empty() && synth_opt.target_file.empty()) {
        throw ParseError("synth needs --target or --target-file");
      }
      return cmd_synth(config, synth_opt, out, err);
    }
    if (*simulate) return cmd_simulate(config, sim_opt, out, err);
    if (*loss) return cmd_loss(config, loss_opt, out);
    if (*power) return cmd_power(config, power_opt, out, err);
    if (*sweep) return cmd_sweep(config, sweep_opt, out, err);
    if (*timing) return cmd_timing(config, timing_opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ufan
