// SPDX-License-Identifier: Apache-2.0

#include "jtcal/channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "jtcal/phase.hpp"

namespace jtcal {

double max_doppler_hz(double speed_kmh, double carrier_hz) {
  return speed_kmh / 3.6 * carrier_hz / kSpeedOfLight;
}

ChannelConfig ChannelConfig::flat() { return ChannelConfig{}; }

ChannelConfig ChannelConfig::epa() {
  ChannelConfig cfg;
  cfg.fading = Fading::EpaTapped;
  cfg.n_subcarriers = 64;
  return cfg;
}

void ChannelConfig::validate() const {
  if (n_tx_per_cell < 1) throw std::invalid_argument("ChannelConfig: n_tx_per_cell must be >= 1");
  if (n_rx_ue < 1) throw std::invalid_argument("ChannelConfig: n_rx_ue must be >= 1");
  if (n_subcarriers < 1) throw std::invalid_argument("ChannelConfig: n_subcarriers must be >= 1");
  if (!(doppler_hz >= 0.0) || !std::isfinite(doppler_hz))
    throw std::invalid_argument("ChannelConfig: doppler_hz must be finite and >= 0");
  if (!(sample_interval_s > 0.0)) throw std::invalid_argument("ChannelConfig: sample_interval_s must be > 0");
  if (fading == Fading::EpaTapped) {
    if (!(sample_rate_hz > 0.0)) throw std::invalid_argument("ChannelConfig: sample_rate_hz must be > 0");
    const auto profile = epa_profile(sample_rate_hz);
    if (n_subcarriers > 1 && profile.back().delay_samples >= n_subcarriers)
      throw std::invalid_argument("ChannelConfig: EPA delay spread exceeds the subcarrier grid");
  }
}

std::vector<DelayTap> epa_profile(double sample_rate_hz) {
  constexpr std::array<double, 7> delays_ns{0, 30, 70, 90, 110, 190, 410};
  constexpr std::array<double, 7> powers_db{0.0, -1.0, -2.0, -3.0, -8.0, -17.2, -20.8};

  std::vector<DelayTap> binned;
  double total = 0.0;
  for (std::size_t i = 0; i < delays_ns.size(); ++i) {
    const auto bin = static_cast<std::size_t>(std::lround(delays_ns[i] * 1e-9 * sample_rate_hz));
    const double p = std::pow(10.0, powers_db[i] / 10.0);
    total += p;
    if (!binned.empty() && binned.back().delay_samples == bin) {
      binned.back().power += p;
    } else {
      binned.push_back({bin, p});
    }
  }
  for (auto& tap : binned) tap.power /= total;
  return binned;
}

std::vector<DelayTap> delay_profile(const ChannelConfig& cfg) {
  if (cfg.fading == Fading::FlatRayleigh) return {{0, 1.0}};
  return epa_profile(cfg.sample_rate_hz);
}

namespace {

void refresh_frequency_response(ChannelState& s, const ChannelConfig& cfg) {
  const std::size_t k_total = cfg.n_subcarriers;
  s.h_dl.assign(k_total, CMatrix(cfg.n_rx_ue, cfg.n_tx_per_cell));
  for (std::size_t k = 0; k < k_total; ++k) {
    CMatrix h(cfg.n_rx_ue, cfg.n_tx_per_cell);
    for (std::size_t l = 0; l < s.taps.size(); ++l) {
      const double angle = -2.0 * kPi * static_cast<double>(k * s.profile[l].delay_samples % k_total) /
                           static_cast<double>(k_total);
      h += s.taps[l] * std::polar(1.0, angle);
    }
    s.h_dl[k] = std::move(h);
  }
}

CMatrix gaussian_matrix(std::size_t rows, std::size_t cols, double variance, Rng& rng) {
  std::vector<cdouble> v(rows * cols);
  for (auto& z : v) z = rng.complex_gaussian(variance);
  return CMatrix(rows, cols, std::move(v));
}

}  // namespace

ChannelState init_channel(const ChannelConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  ChannelState s;
  s.rng = Rng(seed);
  s.profile = delay_profile(cfg);
  for (const auto& tap : s.profile)
    s.taps.push_back(gaussian_matrix(cfg.n_rx_ue, cfg.n_tx_per_cell, tap.power, s.rng));
  refresh_frequency_response(s, cfg);
  return s;
}

double jakes_correlation(double doppler_hz, double interval_s) {
  return std::cyl_bessel_j(0.0, 2.0 * kPi * doppler_hz * interval_s);
}

ChannelState evolve(ChannelState state, const ChannelConfig& cfg) {
  ++state.time_index;
  const double rho = jakes_correlation(cfg.doppler_hz, cfg.sample_interval_s);
  if (rho == 1.0) return state;
  const double innovation_scale = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  for (std::size_t l = 0; l < state.taps.size(); ++l) {
    CMatrix innovation = gaussian_matrix(cfg.n_rx_ue, cfg.n_tx_per_cell, state.profile[l].power, state.rng);
    state.taps[l] = state.taps[l] * rho + innovation * innovation_scale;
  }
  refresh_frequency_response(state, cfg);
  return state;
}

std::vector<CMatrix> uplink_view(const ChannelState& state) {
  std::vector<CMatrix> ul;
  ul.reserve(state.h_dl.size());
  for (const auto& h : state.h_dl) ul.push_back(transpose(h));
  return ul;
}

CMatrix observe_with_noise(const CMatrix& h, double snr_db, Rng& rng) {
  if (snr_db == kNoiseless) return h;
  return h + gaussian_matrix(h.rows(), h.cols(), std::pow(10.0, -snr_db / 10.0), rng);
}

}  // namespace jtcal
