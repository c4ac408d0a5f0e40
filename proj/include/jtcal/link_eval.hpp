// SPDX-License-Identifier: Apache-2.0
//
// Joint-transmission link quality as a function of the residual phase left
// after inter-cell calibration: MRT weights, the received signal, and a
// coherent combining gain proxy.

#ifndef JTCAL_LINK_EVAL_HPP
#define JTCAL_LINK_EVAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jtcal/numerics.hpp"
#include "jtcal/rf_error.hpp"

namespace jtcal {

struct JtWeights {
  CMatrix w1;  // n_tx x 1
  CMatrix w2;  // n_tx x 1
};

/// MRT towards each cell's single-antenna uplink estimate, with cell 2's
/// weight de-rotated by the estimated C_JT. ||w1|| = 1, ||w2|| = 1/delta_amp.
JtWeights mrt_weights(const CMatrix& h1_ul, const CMatrix& h2_ul, const CjtError& cjt_est);

/// r = h1_dl*w1*x + h2_dl*w2*x + noise.
CMatrix received_signal(const CMatrix& h1_dl, const CMatrix& h2_dl, const JtWeights& w, cdouble x,
                        const CMatrix& noise);
CMatrix received_signal(const CMatrix& h1_dl, const CMatrix& h2_dl, const JtWeights& w, cdouble x);

/// |1 + exp(j*phi)|^2 / 4 for two equal-norm links.
double coherent_gain(double residual_phase);
/// coherent_gain in dB; -inf at phi = pi.
double coherent_gain_db(double residual_phase);

struct LinkSweepConfig {
  std::size_t n_tx = 4;
  std::size_t n_runs = 2000;
  std::uint64_t base_seed = 1;
  /// Rescale cell 2's channel to cell 1's norm on every draw.
  bool equal_norm = false;
  /// Append a row whose residual phase is drawn uniformly on (-pi, pi].
  bool include_uniform = true;
};

struct LinkGainRow {
  std::string label;
  /// NaN for the uniform row.
  double phase = 0.0;
  double mean_power = 0.0;
  /// Relative to perfect compensation on the same draws.
  double gain_db = 0.0;
};

std::vector<LinkGainRow> evaluate_residual_sweep(const LinkSweepConfig& cfg, std::span<const double> phases);

}  // namespace jtcal

#endif  // JTCAL_LINK_EVAL_HPP
