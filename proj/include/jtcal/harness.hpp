// SPDX-License-Identifier: Apache-2.0
//
// Seeded Monte Carlo experiments over calibration scenarios, paired sweeps
// along one scenario axis, and their CSV renderings.

#ifndef JTCAL_HARNESS_HPP
#define JTCAL_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jtcal/calibrator.hpp"
#include "jtcal/link_eval.hpp"
#include "jtcal/scenario.hpp"

namespace jtcal {

/// Runs whose |wrapped error| is within this bound count as successes.
inline constexpr double kSuccessTolerance = kPi / 8.0;

struct ExperimentResult {
  Scenario scenario;
  /// One trace per run, in seed order (seed = base_seed + run).
  std::vector<CalibrationTrace> runs;
  double success_fraction = 0.0;
  double mean_abs_error = 0.0;
  /// Population variance of the wrapped estimation error.
  double error_variance = 0.0;
  /// Fraction of runs whose final histogram has a single peak.
  double unique_peak_fraction = 0.0;
  /// Number of runs whose final estimate landed on each grid phase.
  std::vector<std::size_t> estimate_histogram;
};

/// n_runs independent calibrations with seeds base_seed + k. `threads` == 0
/// uses the hardware concurrency; the result does not depend on it.
ExperimentResult run_experiment(const Scenario& s, unsigned threads = 0);

enum class SweepAxis { Period, Snr, Ports, TruePhase };

struct SweepPoint {
  double value = 0.0;
  ExperimentResult result;
};

/// Copy of `base` with `axis` set to `value`.
Scenario with_axis(Scenario base, SweepAxis axis, double value);

/// One experiment per value; every point shares base_seed so runs are paired.
std::vector<SweepPoint> run_sweep(const Scenario& base, SweepAxis axis, std::span<const double> values,
                                  unsigned threads = 0);

SweepAxis parse_axis(std::string_view name);
std::string_view to_string(SweepAxis axis);

/// Accepts radians ("2.356"), or multiples of pi: "pi", "-pi/8", "6/8pi",
/// "6pi/8", "0.75pi". Throws std::invalid_argument otherwise.
double parse_phase(std::string_view text);

/// Shortest round-trip decimal form; "inf", "-inf", "nan" for non-finite values.
std::string format_number(double v);

/// Long form: run,frame,estimate_rad,error_rad,votes_0..votes_{n-1}, one row
/// per (run, frame) plus a run=-1 summary row.
void write_calibration_csv(std::ostream& os, const ExperimentResult& result);

/// Sweep long form: `value` column prepended to the calibration layout.
void write_sweep_csv(std::ostream& os, SweepAxis axis, std::span<const SweepPoint> points);

/// axis,value,n_runs,success_fraction,mean_abs_error_rad,error_variance_rad2,unique_peak_fraction
void write_summary_header(std::ostream& os);
void write_summary_row(std::ostream& os, std::string_view axis, std::string_view value, const ExperimentResult& r);

/// label,phase_rad,mean_power,gain_db
void write_linkgain_csv(std::ostream& os, std::span<const LinkGainRow> rows);

}  // namespace jtcal

#endif  // JTCAL_HARNESS_HPP
