// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <cmath>
#include <complex>
#include <ostream>

#include "jtcal/harness.hpp"

namespace jtcal {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

void write_votes_header(std::ostream& os, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) os << ",votes_" << k;
  os << '\n';
}

void write_runs(std::ostream& os, std::string_view prefix, const ExperimentResult& r) {
  const Scenario& s = r.scenario;
  const HypothesisGrid grid = hypothesis_grid(s.n_hypotheses);
  for (std::size_t run = 0; run < r.runs.size(); ++run) {
    const auto& trace = r.runs[run];
    for (std::size_t f = 0; f < trace.frames.size(); ++f) {
      const auto& frame = trace.frames[f];
      os << prefix << run << ',' << f + 1 << ',' << format_number(frame.estimate) << ','
         << format_number(wrap_phase(frame.estimate - s.delta_phase_true));
      for (auto c : frame.histogram.counts) os << ',' << c;
      os << '\n';
    }
  }

  // Summary: circular mean of final estimates, RMS error, and how many runs
  // ended on each grid phase.
  std::complex<double> resultant = 0.0;
  double sq = 0.0;
  for (const auto& t : r.runs) {
    resultant += std::polar(1.0, t.estimate);
    sq += t.error * t.error;
  }
  const double rms = std::sqrt(sq / static_cast<double>(r.runs.size()));
  os << prefix << -1 << ',' << s.period_frames << ',' << format_number(wrap_phase(std::arg(resultant))) << ','
     << format_number(rms);
  for (std::size_t k = 0; k < grid.n(); ++k) os << ',' << r.estimate_histogram[k];
  os << '\n';
}

}  // namespace

void write_calibration_csv(std::ostream& os, const ExperimentResult& result) {
  os << "run,frame,estimate_rad,error_rad";
  write_votes_header(os, result.scenario.n_hypotheses);
  write_runs(os, "", result);
}

void write_sweep_csv(std::ostream& os, SweepAxis axis, std::span<const SweepPoint> points) {
  if (points.empty()) return;
  os << to_string(axis) << ",run,frame,estimate_rad,error_rad";
  write_votes_header(os, points.front().result.scenario.n_hypotheses);
  for (const auto& p : points) write_runs(os, format_number(p.value) + ",", p.result);
}

void write_summary_header(std::ostream& os) {
  os << "axis,value,n_runs,success_fraction,mean_abs_error_rad,error_variance_rad2,unique_peak_fraction\n";
}

void write_summary_row(std::ostream& os, std::string_view axis, std::string_view value, const ExperimentResult& r) {
  os << axis << ',' << value << ',' << r.runs.size() << ',' << format_number(r.success_fraction) << ','
     << format_number(r.mean_abs_error) << ',' << format_number(r.error_variance) << ','
     << format_number(r.unique_peak_fraction) << '\n';
}

void write_linkgain_csv(std::ostream& os, std::span<const LinkGainRow> rows) {
  os << "label,phase_rad,mean_power,gain_db\n";
  for (const auto& row : rows)
    os << row.label << ',' << format_number(row.phase) << ',' << format_number(row.mean_power) << ','
       << format_number(row.gain_db) << '\n';
}

}  // namespace jtcal
