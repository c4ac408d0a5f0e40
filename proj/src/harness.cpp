// SPDX-License-Identifier: Apache-2.0

#include "jtcal/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace jtcal {

namespace {

void summarize(ExperimentResult& r) {
  const HypothesisGrid grid = hypothesis_grid(r.scenario.n_hypotheses);
  r.estimate_histogram.assign(grid.n(), 0);
  const double n = static_cast<double>(r.runs.size());
  double successes = 0.0, abs_sum = 0.0, sum = 0.0, sq_sum = 0.0, unique = 0.0;
  for (const auto& t : r.runs) {
    const double e = std::abs(t.error);
    if (e <= kSuccessTolerance + 1e-12) successes += 1.0;
    abs_sum += e;
    sum += t.error;
    sq_sum += t.error * t.error;
    if (t.unique_peak) unique += 1.0;
    const auto it = std::find(grid.phases.begin(), grid.phases.end(), t.estimate);
    if (it != grid.phases.end()) ++r.estimate_histogram[static_cast<std::size_t>(it - grid.phases.begin())];
  }
  r.success_fraction = successes / n;
  r.mean_abs_error = abs_sum / n;
  const double mean = sum / n;
  r.error_variance = std::max(0.0, sq_sum / n - mean * mean);
  r.unique_peak_fraction = unique / n;
}

}  // namespace

ExperimentResult run_experiment(const Scenario& s, unsigned threads) {
  s.validate();
  ExperimentResult result;
  result.scenario = s;
  result.runs.resize(s.n_runs);

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, s.n_runs));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k = next++; k < s.n_runs; k = next++) {
      try {
        result.runs[k] = run_calibration(s, s.base_seed + k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  summarize(result);
  return result;
}

Scenario with_axis(Scenario base, SweepAxis axis, double value) {
  auto as_count = [&](const char* what) {
    if (!(value >= 1.0) || value != std::floor(value))
      throw std::invalid_argument(std::string(what) + " must be a positive integer");
    return static_cast<std::size_t>(value);
  };
  switch (axis) {
    case SweepAxis::Period: base.period_frames = as_count("period"); break;
    case SweepAxis::Snr: base.snr_db = value; break;
    case SweepAxis::Ports: base.ports_per_cell = as_count("ports"); break;
    case SweepAxis::TruePhase: base.delta_phase_true = value; break;
  }
  return base;
}

std::vector<SweepPoint> run_sweep(const Scenario& base, SweepAxis axis, std::span<const double> values,
                                  unsigned threads) {
  if (values.empty()) throw std::invalid_argument("run_sweep: no values given");
  std::vector<SweepPoint> points;
  points.reserve(values.size());
  for (double v : values) points.push_back({v, run_experiment(with_axis(base, axis, v), threads)});
  return points;
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "period") return SweepAxis::Period;
  if (name == "snr") return SweepAxis::Snr;
  if (name == "ports") return SweepAxis::Ports;
  if (name == "phase") return SweepAxis::TruePhase;
  throw std::invalid_argument("unknown sweep axis '" + std::string(name) + "'");
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Period: return "period";
    case SweepAxis::Snr: return "snr";
    case SweepAxis::Ports: return "ports";
    case SweepAxis::TruePhase: return "phase";
  }
  return "?";
}

namespace {

double parse_double(std::string_view text, std::string_view whole) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || text.empty() || !std::isfinite(v))
    throw std::invalid_argument("cannot parse phase '" + std::string(whole) + "'");
  return v;
}

}  // namespace

double parse_phase(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) return parse_double(text, whole);

  std::string_view before = text.substr(0, pi_pos);
  std::string_view after = text.substr(pi_pos + 2);
  double factor = 1.0;
  if (before == "-") {
    factor = -1.0;
  } else if (!before.empty() && before != "+") {
    const auto slash = before.find('/');
    if (slash == std::string_view::npos) {
      factor = parse_double(before, whole);
    } else {
      factor = parse_double(before.substr(0, slash), whole) / parse_double(before.substr(slash + 1), whole);
    }
  }
  if (!after.empty()) {
    if (after.front() != '/') throw std::invalid_argument("cannot parse phase '" + std::string(whole) + "'");
    factor /= parse_double(after.substr(1), whole);
  }
  if (!std::isfinite(factor)) throw std::invalid_argument("cannot parse phase '" + std::string(whole) + "'");
  return factor * kPi;
}

}  // namespace jtcal
