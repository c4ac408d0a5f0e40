// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Optional: --cli <path to jtcal> adds a
// process-level determinism check to criterion 9.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jtcal/calibrator.hpp"
#include "jtcal/channel.hpp"
#include "jtcal/codebook.hpp"
#include "jtcal/harness.hpp"
#include "jtcal/link_eval.hpp"
#include "jtcal/phase.hpp"
#include "jtcal/random.hpp"
#include "jtcal/rf_error.hpp"

using namespace jtcal;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// The headline case, run on the tapped channel.
Scenario headline() {
  Scenario s;
  s.channel = ChannelConfig::epa();
  s.snr_db = 5.0;
  s.delta_phase_true = 6 * kPi / 8;
  s.period_frames = 10;
  s.ports_per_cell = 4;
  s.feedback_delay_frames = 1;
  s.n_runs = 200;
  s.base_seed = 1;
  return s;
}

void coherence_identity() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = Rng::derive(seed, Stream::LinkChannel);
    std::vector<cdouble> a(4), b(4);
    for (auto& z : a) z = rng.complex_gaussian();
    for (auto& z : b) z = rng.complex_gaussian();
    const CMatrix ul1 = CMatrix::column(a), ul2 = CMatrix::column(b);
    const CellRfError c1(rng.uniform(0.5, 2.0), rng.uniform(-kPi, kPi));
    const CellRfError c2(rng.uniform(0.5, 2.0), rng.uniform(-kPi, kPi));
    const CMatrix dl1 = transpose(ul1) * c1.scalar();
    const CMatrix dl2 = transpose(ul2) * c2.scalar();
    const cdouble x = std::polar(rng.uniform(0.1, 2.0), rng.uniform(-kPi, kPi));
    const auto w = mrt_weights(ul1, ul2, cjt_from_cells(c1, c2));
    const double got = std::abs(received_signal(dl1, dl2, w, x)(0, 0));
    const double want = c1.residual_amp() * (fro_norm(ul1) + fro_norm(ul2)) * std::abs(x);
    worst = std::max(worst, std::abs(got - want) / want);
  }
  const double t = seconds_since(t0);
  report(1, worst <= 1e-10 && t < 1.0, fmt("max rel err %.3g", worst) + fmt(", %.3f s", t));
}

void gain_table() {
  const auto t0 = Clock::now();
  const double phases[] = {0.0, kPi / 8, kPi / 4, kPi / 2, kPi};
  const double want[] = {0.0, -0.17, -0.69, -3.01};
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 5; ++i) {
    const double g = coherent_gain_db(phases[i]);
    ok = ok && (i < 4 ? std::abs(g - want[i]) <= 0.01 : std::isinf(g) && g < 0);
    detail += format_number(std::round(g * 1000) / 1000) + " ";
  }
  const double t = seconds_since(t0);
  report(2, ok && t < 1.0, "dB: " + detail + fmt("(%.3f s)", t));
}

void noiseless_recovery() {
  const auto t0 = Clock::now();
  const auto grid = hypothesis_grid(16);
  int checked = 0, skipped = 0, wrong = 0;
  for (double truth : grid.phases) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Scenario s;
      s.channel.doppler_hz = 0.0;
      s.snr_db = kNoiseless;
      s.delta_phase_true = truth;
      const auto trace = run_calibration(s, seed);
      if (!trace.unique_peak) {
        ++skipped;
        continue;
      }
      ++checked;
      if (trace.estimate != truth) ++wrong;
    }
  }
  const double t = seconds_since(t0);
  report(3, wrong == 0 && t < 10.0,
         std::to_string(checked) + " unique-peak cases exact, " + std::to_string(wrong) + " wrong, " +
             std::to_string(skipped) + " tied cases skipped" + fmt(" (%.2f s)", t));
}

void property_suites(const char* cli) {
  bool ok = true;
  std::string detail;

  // PMI argmax unchanged under a common complex scale
  {
    Rng rng(9001);
    const Codebook cb = default_codebook(4);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      CMatrix h(2, 4);
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 4; ++c) h.set(r, c, rng.complex_gaussian());
      const cdouble scale = std::polar(rng.uniform(0.01, 100.0), rng.uniform(-kPi, kPi));
      if (!(select_pmi(h, cb) == select_pmi(h * scale, cb))) ++bad;
    }
    ok = ok && bad == 0;
    detail += "pmi-scale " + std::to_string(bad) + "/1000 bad; ";
  }

  // wrap range and idempotence
  {
    Rng rng(17);
    int bad = 0;
    for (int i = 0; i < 100000; ++i) {
      const double x = rng.uniform(-1e3, 1e3);
      const double w = wrap_phase(x);
      if (!(w > -kPi && w <= kPi) || wrap_phase(w) != w) ++bad;
    }
    if (wrap_phase(-kPi) != kPi || wrap_phase(kPi) != kPi) ++bad;
    ok = ok && bad == 0;
    detail += "wrap " + std::to_string(bad) + " bad; ";
  }

  // noiseless: the true hypothesis collects every vote
  {
    const auto grid = hypothesis_grid(16);
    int bad = 0;
    for (std::size_t k = 0; k < grid.n(); ++k) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Scenario s;
        s.snr_db = kNoiseless;
        s.feedback_delay_frames = 0;
        s.delta_phase_true = grid.phases[k];
        for (const auto& f : run_calibration(s, seed).frames)
          if (f.histogram.counts[k] != f.histogram.m) ++bad;
      }
    }
    ok = ok && bad == 0;
    detail += "dominance " + std::to_string(bad) + " bad; ";
  }

  // uplink is the exact transpose of downlink
  {
    int bad = 0;
    for (auto cfg : {ChannelConfig::flat(), ChannelConfig::epa()}) {
      auto st = init_channel(cfg, 3);
      for (int step = 0; step < 20; ++step) {
        const auto ul = uplink_view(st);
        for (std::size_t f = 0; f < ul.size(); ++f)
          if (!(ul[f] == transpose(st.h_dl[f]))) ++bad;
        st = evolve(std::move(st), cfg);
      }
    }
    ok = ok && bad == 0;
    detail += "reciprocity " + std::to_string(bad) + " bad; ";
  }

  // repeated runs produce identical CSV
  {
    Scenario s;
    s.n_runs = 20;
    std::ostringstream a, b;
    write_calibration_csv(a, run_experiment(s, 1));
    write_calibration_csv(b, run_experiment(s, 2));
    bool same = a.str() == b.str();
    if (cli) {
      auto run = [&](const std::string& out) {
        const std::string cmd = std::string("\"") + cli + "\" calibrate --runs 20 --seed 5 --out \"" + out + "\"";
        return std::system(cmd.c_str()) == 0;
      };
      auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
      };
      const std::string p1 = "acceptance_det_1.csv", p2 = "acceptance_det_2.csv";
      same = same && run(p1) && run(p2) && !slurp(p1).empty() && slurp(p1) == slurp(p2);
      std::remove(p1.c_str());
      std::remove(p2.c_str());
    }
    ok = ok && same;
    detail += std::string("csv determinism ") + (same ? "ok" : "MISMATCH") + (cli ? " (library+cli)" : " (library)");
  }

  report(9, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = nullptr;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  coherence_identity();
  gain_table();
  noiseless_recovery();

  const Scenario base = headline();

  const auto t4 = Clock::now();
  const ExperimentResult head_res = run_experiment(base);
  const double t4s = seconds_since(t4);
  report(4, head_res.success_fraction >= 0.9 && t4s < 60.0,
         fmt("success %.3f (need >= 0.9)", head_res.success_fraction) + fmt(", %.1f s", t4s));

  {
    const std::vector<double> periods{1, 10};
    const auto pts = run_sweep(base, SweepAxis::Period, periods);
    const auto& p1 = pts[0].result;
    const auto& p10 = pts[1].result;
    report(5, p10.success_fraction >= p1.success_fraction && p10.error_variance <= p1.error_variance,
           fmt("success %.3f", p1.success_fraction) + fmt(" -> %.3f", p10.success_fraction) +
               fmt(", variance %.3f", p1.error_variance) + fmt(" -> %.3f", p10.error_variance));
  }

  {
    const std::vector<double> ports{4, 2};
    const auto pts = run_sweep(base, SweepAxis::Ports, ports);
    report(6, pts[0].result.success_fraction >= pts[1].result.success_fraction,
           fmt("4 ports %.3f", pts[0].result.success_fraction) + fmt(", 2 ports %.3f", pts[1].result.success_fraction));
  }

  {
    const auto low = run_experiment(with_axis(base, SweepAxis::Snr, -5.0));
    report(7, low.success_fraction >= 0.8, fmt("success at -5 dB %.3f (need >= 0.8)", low.success_fraction));
  }

  {
    const auto small = run_experiment(with_axis(base, SweepAxis::TruePhase, kPi / 8));
    const double gap = std::abs(small.success_fraction - head_res.success_fraction);
    report(8, gap <= 0.10,
           fmt("pi/8 %.3f", small.success_fraction) + fmt(" vs 6pi/8 %.3f", head_res.success_fraction) +
               fmt(", gap %.3f", gap));
  }

  property_suites(cli);

  // flat-channel headline, for reference only
  {
    Scenario flat = base;
    flat.channel = ChannelConfig::flat();
    std::printf("info: headline case on flat Rayleigh: success %.3f\n", run_experiment(flat).success_fraction);
  }

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
