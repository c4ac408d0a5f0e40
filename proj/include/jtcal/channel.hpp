// SPDX-License-Identifier: Apache-2.0
//
// Reciprocal propagation channels for one cell-UE link: Rayleigh or EPA
// tapped-delay-line fading, Gauss-Markov time evolution with a Jakes
// correlation coefficient, and additive-noise channel estimation.

#ifndef JTCAL_CHANNEL_HPP
#define JTCAL_CHANNEL_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "jtcal/numerics.hpp"
#include "jtcal/random.hpp"

namespace jtcal {

enum class Fading { FlatRayleigh, EpaTapped };

inline constexpr double kSpeedOfLight = 299792458.0;

/// Maximum Doppler shift in Hz for a terminal moving at `speed_kmh`.
double max_doppler_hz(double speed_kmh, double carrier_hz);

struct ChannelConfig {
  std::size_t n_tx_per_cell = 4;
  std::size_t n_rx_ue = 2;
  Fading fading = Fading::FlatRayleigh;
  double carrier_hz = 2.0e9;
  double doppler_hz = max_doppler_hz(3.0, 2.0e9);
  std::size_t n_subcarriers = 1;
  double sample_interval_s = 0.010;
  /// Baseband sample rate used to place EPA taps on the delay grid.
  double sample_rate_hz = 15.36e6;

  static ChannelConfig flat();
  static ChannelConfig epa();

  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;
};

/// One resolvable tap of the delay profile after rounding to the sample grid.
struct DelayTap {
  std::size_t delay_samples;
  double power;

  friend bool operator==(const DelayTap&, const DelayTap&) = default;
};

/// Standard 7-tap EPA profile, binned to `sample_rate_hz` and normalized to
/// unit total power. Taps landing in the same bin are merged.
std::vector<DelayTap> epa_profile(double sample_rate_hz);

/// Delay profile used by `cfg`: a single unit tap for flat fading.
std::vector<DelayTap> delay_profile(const ChannelConfig& cfg);

struct ChannelState {
  std::vector<DelayTap> profile;
  /// Per-tap n_rx x n_tx gains.
  std::vector<CMatrix> taps;
  /// Per-subcarrier downlink propagation channel, n_rx x n_tx.
  std::vector<CMatrix> h_dl;
  std::uint64_t time_index = 0;
  Rng rng{0};

  friend bool operator==(const ChannelState&, const ChannelState&) = default;
};

ChannelState init_channel(const ChannelConfig& cfg, std::uint64_t seed);

/// Lag-1 correlation J0(2*pi*f_d*T) of the Gauss-Markov update.
double jakes_correlation(double doppler_hz, double interval_s);

ChannelState evolve(ChannelState state, const ChannelConfig& cfg);

/// Uplink propagation channel per subcarrier; always the plain transpose of h_dl.
std::vector<CMatrix> uplink_view(const ChannelState& state);

inline constexpr double kNoiseless = std::numeric_limits<double>::infinity();

/// h plus CN(0, 10^(-snr_db/10)) per entry. snr_db == kNoiseless returns h.
CMatrix observe_with_noise(const CMatrix& h, double snr_db, Rng& rng);

}  // namespace jtcal

#endif  // JTCAL_CHANNEL_HPP
