// SPDX-License-Identifier: Apache-2.0
//
// jtcal: command-line front end for inter-cell phase calibration experiments.
//
//   jtcal calibrate --phase 6/8pi --snr 5 --frames 10 --ports 4 --runs 200 --seed 1
//   jtcal sweep --axis period --values 1,10 [calibrate flags]
//   jtcal linkgain --phases 0,pi/8,pi/4,pi/2 --runs 2000
//
// Every flag may also come from a flat key=value file given with
// --config; flags on the command line win.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jtcal/harness.hpp"
#include "jtcal/link_eval.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitRuntimeFailure = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BaseFlags {
  std::string phase = "6/8pi";
  double snr_db = 5.0;
  std::optional<double> srs_snr_db;
  std::size_t frames = 10;
  std::size_t ports = 4;
  std::size_t runs = 200;
  std::uint64_t seed = 1;
  std::string combine = "sum";
  std::string codebook = "rel8";
  std::size_t dft_size = 0;
  std::string channel = "flat";
  std::size_t subcarriers = 0;
  double speed_kmh = 3.0;
  double carrier_hz = 2.0e9;
  std::size_t hypotheses = 16;
  std::size_t delay_frames = 1;
  double amp_ratio = 1.0;
  unsigned threads = 0;
  std::string out;
  bool summary = false;
};

void add_base_flags(CLI::App& cmd, BaseFlags& f) {
  cmd.add_option("--phase", f.phase, "True residual phase: radians or a multiple of pi (e.g. 6/8pi)");
  cmd.add_option("--snr", f.snr_db, "CRS/SRS estimation SNR in dB (inf for noiseless)");
  cmd.add_option("--srs-snr", f.srs_snr_db, "Separate SRS estimation SNR in dB");
  cmd.add_option("--frames", f.frames, "Estimation period in frames")->check(CLI::PositiveNumber);
  cmd.add_option("--ports", f.ports, "CRS ports per cell")->check(CLI::IsMember({2, 4}));
  cmd.add_option("--runs", f.runs, "Monte Carlo runs")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", f.seed, "Base seed; run k uses seed + k");
  cmd.add_option("--combine", f.combine, "CRS port mapping at the UE")->check(CLI::IsMember({"sum", "concat"}));
  cmd.add_option("--codebook", f.codebook, "Precoding codebook")->check(CLI::IsMember({"rel8", "dft"}));
  cmd.add_option("--dft-size", f.dft_size, "DFT codebook beams (0: one per port)");
  cmd.add_option("--channel", f.channel, "Fading model")->check(CLI::IsMember({"flat", "epa"}));
  cmd.add_option("--subcarriers", f.subcarriers, "Subcarriers for EPA (0: default 64)");
  cmd.add_option("--speed", f.speed_kmh, "UE speed in km/h")->check(CLI::NonNegativeNumber);
  cmd.add_option("--carrier", f.carrier_hz, "Carrier frequency in Hz")->check(CLI::PositiveNumber);
  cmd.add_option("--hypotheses", f.hypotheses, "Phase hypotheses on (-pi, pi]");
  cmd.add_option("--delay", f.delay_frames, "PMI feedback delay in frames");
  cmd.add_option("--amp-ratio", f.amp_ratio, "True inter-cell amplitude ratio A2/A1");
  cmd.add_option("--threads", f.threads, "Worker threads (0: all cores)");
  cmd.add_option("--out", f.out, "Output CSV file (default stdout)");
  cmd.add_flag("--summary", f.summary, "Emit aggregate rows only");
}

jtcal::Scenario to_scenario(const BaseFlags& f) {
  jtcal::Scenario s;
  s.channel = f.channel == "epa" ? jtcal::ChannelConfig::epa() : jtcal::ChannelConfig::flat();
  if (f.subcarriers != 0) s.channel.n_subcarriers = f.subcarriers;
  s.channel.carrier_hz = f.carrier_hz;
  s.channel.doppler_hz = jtcal::max_doppler_hz(f.speed_kmh, f.carrier_hz);
  s.combine_mode = f.combine == "concat" ? jtcal::CombineMode::ConcatenatedPorts : jtcal::CombineMode::SummedPorts;
  s.ports_per_cell = f.ports;
  s.codebook = f.codebook == "dft" ? jtcal::CodebookFamily::Dft : jtcal::CodebookFamily::Rel8;
  s.dft_size = f.dft_size;
  s.snr_db = f.snr_db;
  s.srs_snr_db = f.srs_snr_db;
  s.delta_phase_true = jtcal::parse_phase(f.phase);
  s.delta_amp_true = f.amp_ratio;
  s.period_frames = f.frames;
  s.n_hypotheses = f.hypotheses;
  s.feedback_delay_frames = f.delay_frames;
  s.n_runs = f.runs;
  s.base_seed = f.seed;
  s.validate();
  return s;
}

// Reads key=value lines ('#' starts a comment) into "--key=value" tokens.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key == "config") throw ConfigError(path + ": nested config files are not supported");
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

// Splices config-file tokens in front of the command-line flags so that the
// command line takes precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> config;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file name");
      config = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!config || rest.empty()) return rest;
  std::vector<std::string> out{rest.front()};
  for (auto& t : config_tokens(*config)) out.push_back(std::move(t));
  out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<double> parse_values(jtcal::SweepAxis axis, const std::vector<std::string>& raw) {
  std::vector<double> values;
  for (const auto& v : raw) {
    if (axis == jtcal::SweepAxis::TruePhase) {
      values.push_back(jtcal::parse_phase(v));
    } else {
      std::size_t used = 0;
      double d = 0.0;
      try {
        d = std::stod(v, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != v.size() || v.empty()) throw std::invalid_argument("cannot parse sweep value '" + v + "'");
      values.push_back(d);
    }
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inter-cell antenna calibration for coherent joint transmission"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  // Consumed by expand_config; registered so that it shows up in --help.
  std::string config_path;
  app.add_option("--config", config_path, "Flat key=value file mirroring the flags");

  BaseFlags cal_flags;
  auto* calibrate = app.add_subcommand("calibrate", "Estimate the residual phase over seeded runs");
  add_base_flags(*calibrate, cal_flags);

  BaseFlags sweep_flags;
  std::string axis_name;
  std::vector<std::string> sweep_values;
  auto* sweep = app.add_subcommand("sweep", "Paired experiments along one scenario axis");
  add_base_flags(*sweep, sweep_flags);
  sweep->add_option("--axis", axis_name, "Swept axis")
      ->required()
      ->check(CLI::IsMember({"period", "snr", "ports", "phase"}));
  sweep->add_option("--values", sweep_values, "Comma-separated axis values")->required()->delimiter(',');

  std::vector<std::string> link_phases;
  jtcal::LinkSweepConfig link_cfg;
  std::string link_out;
  bool no_uniform = false;
  auto* linkgain = app.add_subcommand("linkgain", "Mean JT received power versus residual phase");
  linkgain->add_option("--phases", link_phases, "Comma-separated residual phases")->required()->delimiter(',');
  linkgain->add_option("--runs", link_cfg.n_runs, "Channel draws")->check(CLI::PositiveNumber);
  linkgain->add_option("--seed", link_cfg.base_seed, "Base seed");
  linkgain->add_option("--ntx", link_cfg.n_tx, "Antennas per cell")->check(CLI::PositiveNumber);
  linkgain->add_flag("--equal-norm", link_cfg.equal_norm, "Give both cells the same channel norm");
  linkgain->add_flag("--no-uniform", no_uniform, "Omit the uniformly distributed phase row");
  linkgain->add_option("--out", link_out, "Output CSV file (default stdout)");

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  } catch (const ConfigError& e) {
    std::cerr << "jtcal: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  jtcal::Scenario scenario;
  std::vector<double> values;
  jtcal::SweepAxis axis = jtcal::SweepAxis::Period;
  std::vector<double> phases;
  try {
    if (*calibrate) scenario = to_scenario(cal_flags);
    if (*sweep) {
      scenario = to_scenario(sweep_flags);
      axis = jtcal::parse_axis(axis_name);
      values = parse_values(axis, sweep_values);
      for (double v : values) jtcal::with_axis(scenario, axis, v).validate();
    }
    if (*linkgain) {
      for (const auto& p : link_phases) phases.push_back(jtcal::parse_phase(p));
      link_cfg.include_uniform = !no_uniform;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "jtcal: invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  try {
    if (*calibrate) {
      const auto result = jtcal::run_experiment(scenario, cal_flags.threads);
      Output out(cal_flags.out);
      if (cal_flags.summary) {
        jtcal::write_summary_header(out.stream());
        jtcal::write_summary_row(out.stream(), "none", "", result);
      } else {
        jtcal::write_calibration_csv(out.stream(), result);
      }
    } else if (*sweep) {
      const auto points = jtcal::run_sweep(scenario, axis, values, sweep_flags.threads);
      Output out(sweep_flags.out);
      if (sweep_flags.summary) {
        jtcal::write_summary_header(out.stream());
        for (const auto& p : points)
          jtcal::write_summary_row(out.stream(), jtcal::to_string(axis), jtcal::format_number(p.value), p.result);
      } else {
        jtcal::write_sweep_csv(out.stream(), axis, points);
      }
    } else if (*linkgain) {
      const auto rows = jtcal::evaluate_residual_sweep(link_cfg, phases);
      Output out(link_out);
      jtcal::write_linkgain_csv(out.stream(), rows);
    }
  } catch (const std::exception& e) {
    std::cerr << "jtcal: " << e.what() << '\n';
    return kExitRuntimeFailure;
  }
  return kExitOk;
}
