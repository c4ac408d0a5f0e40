// SPDX-License-Identifier: Apache-2.0
//
// PMI-feedback based estimation of the inter-cell residual phase. The eNBs
// sweep a grid of candidate phases over their uplink estimates, and every
// candidate whose PMI agrees with the UE's report earns a vote. The phase
// with the most votes at the end of the estimation period is the estimate.

#ifndef JTCAL_CALIBRATOR_HPP
#define JTCAL_CALIBRATOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jtcal/codebook.hpp"
#include "jtcal/numerics.hpp"
#include "jtcal/scenario.hpp"

namespace jtcal {

struct HypothesisGrid {
  /// Strictly increasing, uniform, in (-pi, pi]; the last entry is pi.
  std::vector<double> phases;

  std::size_t n() const noexcept { return phases.size(); }
};

/// {-pi + k*2pi/n : k = 1..n}. Requires n >= 2.
HypothesisGrid hypothesis_grid(std::size_t n);

struct VoteHistogram {
  std::vector<std::uint64_t> counts;
  /// Samples seen so far.
  std::uint64_t m = 0;

  VoteHistogram() = default;
  explicit VoteHistogram(std::size_t n) : counts(n, 0) {}

  friend bool operator==(const VoteHistogram&, const VoteHistogram&) = default;
};

/// transpose(h1_ul) combined with transpose(h2_ul) * exp(j*beta).
CMatrix compensated_channel(const CMatrix& h1_ul, const CMatrix& h2_ul, double beta,
                            CombineMode mode = CombineMode::SummedPorts);

/// Advances m and increments every count whose PMI equals the UE's.
VoteHistogram vote(VoteHistogram hist, Pmi pmi_ue, std::span<const Pmi> pmi_per_hypothesis);

/// Grid phase with the most votes. Ties go to the smallest |phase|, then the
/// smallest index. Throws std::logic_error when no sample has been voted.
double estimate_phase(const VoteHistogram& hist, const HypothesisGrid& grid);

/// True when exactly one hypothesis holds the maximum count.
bool has_unique_peak(const VoteHistogram& hist);

struct FrameRecord {
  VoteHistogram histogram;
  Pmi pmi_ue;
  /// Running estimate after this frame.
  double estimate = 0.0;
};

struct CalibrationTrace {
  std::uint64_t seed = 0;
  std::vector<FrameRecord> frames;
  double estimate = 0.0;
  /// wrap(estimate - true phase), in (-pi, pi].
  double error = 0.0;
  bool unique_peak = false;
};

/// One estimation period of `s`, with all randomness drawn from `seed`.
CalibrationTrace run_calibration(const Scenario& s, std::uint64_t seed);

}  // namespace jtcal

#endif  // JTCAL_CALIBRATOR_HPP
