// SPDX-License-Identifier: Apache-2.0

#ifndef JTCAL_SCENARIO_HPP
#define JTCAL_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "jtcal/channel.hpp"
#include "jtcal/codebook.hpp"
#include "jtcal/phase.hpp"

namespace jtcal {

enum class CodebookFamily {
  /// Rel-8 codebook matching the combined port count (2 or 4 ports only).
  Rel8,
  Dft,
};

/// One calibration experiment: two cells with `channel.n_tx_per_cell`
/// calibrated antennas each, one UE, and a fixed true inter-cell residual.
struct Scenario {
  ChannelConfig channel;
  CombineMode combine_mode = CombineMode::SummedPorts;
  /// CRS ports per cell; antennas are virtualized onto them.
  std::size_t ports_per_cell = 4;
  CodebookFamily codebook = CodebookFamily::Rel8;
  /// Number of DFT beams; 0 means one per port.
  std::size_t dft_size = 0;
  /// CRS (downlink) estimation SNR.
  double snr_db = 5.0;
  /// SRS (uplink) estimation SNR; defaults to snr_db.
  std::optional<double> srs_snr_db;
  double delta_phase_true = 6.0 * kPi / 8.0;
  double delta_amp_true = 1.0;
  std::size_t period_frames = 10;
  std::size_t n_hypotheses = 16;
  /// Frames between the UE's CRS snapshot and the eNB's SRS snapshot.
  std::size_t feedback_delay_frames = 1;
  std::size_t n_runs = 200;
  std::uint64_t base_seed = 1;

  double uplink_snr_db() const { return srs_snr_db.value_or(snr_db); }
  std::size_t combined_ports() const {
    return combine_mode == CombineMode::SummedPorts ? ports_per_cell : 2 * ports_per_cell;
  }

  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;
};

/// The codebook the UE and both eNBs share for this scenario.
Codebook scenario_codebook(const Scenario& s);

}  // namespace jtcal

#endif  // JTCAL_SCENARIO_HPP
