// SPDX-License-Identifier: Apache-2.0

#include "jtcal/calibrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "jtcal/channel.hpp"
#include "jtcal/phase.hpp"
#include "jtcal/random.hpp"
#include "jtcal/rf_error.hpp"

namespace jtcal {

void Scenario::validate() const {
  channel.validate();
  if (!(delta_phase_true > -kPi && delta_phase_true <= kPi))
    throw std::invalid_argument("Scenario: true phase must lie in (-pi, pi]");
  if (!(delta_amp_true > 0.0) || !std::isfinite(delta_amp_true))
    throw std::invalid_argument("Scenario: amplitude ratio must be > 0");
  if (period_frames < 1) throw std::invalid_argument("Scenario: period must be at least one frame");
  if (n_runs < 1) throw std::invalid_argument("Scenario: at least one run is required");
  if (n_hypotheses < 2) throw std::invalid_argument("Scenario: at least two hypotheses are required");
  if (ports_per_cell < 1 || channel.n_tx_per_cell % ports_per_cell != 0)
    throw std::invalid_argument("Scenario: " + std::to_string(channel.n_tx_per_cell) +
                                " antennas cannot be mapped onto " + std::to_string(ports_per_cell) +
                                " CRS ports");
  if (std::isnan(snr_db) || std::isnan(uplink_snr_db())) throw std::invalid_argument("Scenario: SNR is NaN");
  if (codebook == CodebookFamily::Rel8 && combined_ports() != 2 && combined_ports() != 4)
    throw std::invalid_argument("Scenario: Rel-8 codebooks cover 2 or 4 ports, the UE sees " +
                                std::to_string(combined_ports()) + "; use the DFT codebook");
}

Codebook scenario_codebook(const Scenario& s) {
  const std::size_t ports = s.combined_ports();
  if (s.codebook == CodebookFamily::Dft) return build_codebook(CodebookId::Dft, ports, s.dft_size);
  if (ports == 2) return build_codebook(CodebookId::Rel8_2Tx, 2);
  if (ports == 4) return build_codebook(CodebookId::Rel8_4Tx, 4);
  throw std::invalid_argument("scenario_codebook: no Rel-8 codebook for " + std::to_string(ports) + " ports");
}

HypothesisGrid hypothesis_grid(std::size_t n) {
  if (n < 2) throw std::invalid_argument("hypothesis_grid: need at least 2 hypotheses");
  HypothesisGrid grid;
  grid.phases.reserve(n);
  // (2k - n) * pi / n keeps +x and -x bitwise symmetric.
  const double unit = kPi / static_cast<double>(n);
  for (std::size_t k = 1; k <= n; ++k)
    grid.phases.push_back(static_cast<double>(2 * static_cast<long>(k) - static_cast<long>(n)) * unit);
  return grid;
}

CMatrix compensated_channel(const CMatrix& h1_ul, const CMatrix& h2_ul, double beta, CombineMode mode) {
  return combine_channels(transpose(h1_ul), transpose(h2_ul) * std::polar(1.0, beta), mode);
}

VoteHistogram vote(VoteHistogram hist, Pmi pmi_ue, std::span<const Pmi> pmi_per_hypothesis) {
  if (pmi_per_hypothesis.size() != hist.counts.size())
    throw std::invalid_argument("vote: " + std::to_string(pmi_per_hypothesis.size()) + " PMIs for " +
                                std::to_string(hist.counts.size()) + " hypotheses");
  ++hist.m;
  for (std::size_t i = 0; i < pmi_per_hypothesis.size(); ++i)
    if (pmi_per_hypothesis[i] == pmi_ue) ++hist.counts[i];
  return hist;
}

double estimate_phase(const VoteHistogram& hist, const HypothesisGrid& grid) {
  if (hist.m == 0) throw std::logic_error("estimate_phase: no samples");
  if (hist.counts.size() != grid.n())
    throw std::invalid_argument("estimate_phase: histogram and grid sizes differ");
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.n(); ++i) {
    if (hist.counts[i] > hist.counts[best] ||
        (hist.counts[i] == hist.counts[best] && std::abs(grid.phases[i]) < std::abs(grid.phases[best])))
      best = i;
  }
  return grid.phases[best];
}

bool has_unique_peak(const VoteHistogram& hist) {
  if (hist.counts.empty()) return false;
  const auto peak = *std::max_element(hist.counts.begin(), hist.counts.end());
  return std::count(hist.counts.begin(), hist.counts.end(), peak) == 1;
}

namespace {

// Unit-modulus receive gains with random phases and transmit gains that
// share the ratio `c` on every antenna: an ideally intra-cell calibrated eNB.
RfChainSpec calibrated_cell(std::size_t n_antennas, cdouble c, Rng& rng) {
  RfChainSpec spec;
  for (std::size_t i = 0; i < n_antennas; ++i) {
    const cdouble rx = std::polar(1.0, rng.uniform(-kPi, kPi));
    spec.rx_gains.push_back(rx);
    spec.tx_gains.push_back(c * rx);
  }
  return spec;
}

std::vector<std::vector<CMatrix>> trajectory(const ChannelConfig& cfg, std::uint64_t seed, std::size_t steps) {
  std::vector<std::vector<CMatrix>> h;
  h.reserve(steps);
  ChannelState state = init_channel(cfg, seed);
  for (std::size_t t = 0; t < steps; ++t) {
    if (t > 0) state = evolve(std::move(state), cfg);
    h.push_back(state.h_dl);
  }
  return h;
}

// Port-domain uplink estimate: virtualize the transposed uplink and hand it
// back in uplink orientation.
CMatrix virtual_uplink(const CMatrix& h_ul, std::size_t ports) {
  return transpose(port_virtualize(transpose(h_ul), ports));
}

}  // namespace

CalibrationTrace run_calibration(const Scenario& s, std::uint64_t seed) {
  s.validate();
  const Codebook cb = scenario_codebook(s);
  const HypothesisGrid grid = hypothesis_grid(s.n_hypotheses);
  const ChannelConfig& cfg = s.channel;
  const std::size_t ports = s.ports_per_cell;

  Rng rf_rng = Rng::derive(seed, Stream::RfGains);
  const double theta1 = rf_rng.uniform(-kPi, kPi);
  const CellRfError cell1(1.0, theta1, cfg.n_tx_per_cell);
  const CellRfError cell2(s.delta_amp_true, theta1 + s.delta_phase_true, cfg.n_tx_per_cell);
  const RfChainSpec spec1 = calibrated_cell(cfg.n_tx_per_cell, cell1.scalar(), rf_rng);
  const RfChainSpec spec2 = calibrated_cell(cfg.n_tx_per_cell, cell2.scalar(), rf_rng);

  // One PMI report per frame; the eNB's SRS snapshot trails the UE's CRS
  // snapshot by the feedback delay.
  const std::size_t delay = s.feedback_delay_frames;
  const auto h1 = trajectory(cfg, derive_seed(seed, Stream::Cell1Channel), s.period_frames + delay);
  const auto h2 = trajectory(cfg, derive_seed(seed, Stream::Cell2Channel), s.period_frames + delay);

  Rng ue_noise = Rng::derive(seed, Stream::UeNoise);
  Rng enb1_noise = Rng::derive(seed, Stream::Enb1Noise);
  Rng enb2_noise = Rng::derive(seed, Stream::Enb2Noise);

  const std::size_t n_sc = cfg.n_subcarriers;
  CalibrationTrace trace;
  trace.seed = seed;
  trace.frames.reserve(s.period_frames);
  VoteHistogram hist(grid.n());
  std::vector<CMatrix> ue_view(n_sc);
  std::vector<CMatrix> ul1(n_sc);
  std::vector<CMatrix> ul2(n_sc);
  std::vector<CMatrix> hypothesis_view(n_sc);
  std::vector<Pmi> pmis(grid.n());

  for (std::size_t frame = 0; frame < s.period_frames; ++frame) {
    // UE: combined CRS channel of both cells, then PMI.
    const std::size_t t_ue = frame;
    for (std::size_t f = 0; f < n_sc; ++f) {
      const CMatrix d1 = port_virtualize(apply_tx_error(h1[t_ue][f], spec1), ports);
      const CMatrix d2 = port_virtualize(apply_tx_error(h2[t_ue][f], spec2), ports);
      ue_view[f] = observe_with_noise(combine_channels(d1, d2, s.combine_mode), s.snr_db, ue_noise);
    }
    const Pmi pmi_ue = select_pmi(ue_view, cb);

    // eNBs: SRS snapshot after the feedback delay, one PMI per hypothesis.
    const std::size_t t_enb = frame + delay;
    for (std::size_t f = 0; f < n_sc; ++f) {
      ul1[f] = virtual_uplink(
          observe_with_noise(apply_rx_error(transpose(h1[t_enb][f]), spec1), s.uplink_snr_db(), enb1_noise), ports);
      ul2[f] = virtual_uplink(
          observe_with_noise(apply_rx_error(transpose(h2[t_enb][f]), spec2), s.uplink_snr_db(), enb2_noise), ports);
    }
    for (std::size_t i = 0; i < grid.n(); ++i) {
      for (std::size_t f = 0; f < n_sc; ++f)
        hypothesis_view[f] = compensated_channel(ul1[f], ul2[f], grid.phases[i], s.combine_mode);
      pmis[i] = select_pmi(hypothesis_view, cb);
    }

    hist = vote(std::move(hist), pmi_ue, pmis);
    trace.frames.push_back({hist, pmi_ue, estimate_phase(hist, grid)});
  }

  trace.estimate = trace.frames.back().estimate;
  trace.error = wrap_phase(trace.estimate - s.delta_phase_true);
  trace.unique_peak = has_unique_peak(hist);
  return trace;
}

}  // namespace jtcal
