// SPDX-License-Identifier: Apache-2.0
//
// eNB RF-chain reciprocity errors and their reduction to the inter-cell
// residual used by coherent joint transmission.

#ifndef JTCAL_RF_ERROR_HPP
#define JTCAL_RF_ERROR_HPP

#include <vector>

#include "jtcal/numerics.hpp"

namespace jtcal {

/// Per-antenna transmit and receive RF gains of one eNB.
struct RfChainSpec {
  std::vector<cdouble> tx_gains;
  std::vector<cdouble> rx_gains;

  std::size_t n_antennas() const noexcept { return tx_gains.size(); }
  void validate() const;
};

/// Diagonal of B_RX^-1 * B_TX, i.e. tx_i / rx_i.
std::vector<cdouble> reciprocity_matrix(const RfChainSpec& spec);

/// Effective downlink: h_dl * diag(tx_gains).
CMatrix apply_tx_error(const CMatrix& h_dl, const RfChainSpec& spec);

/// Effective uplink: diag(rx_gains) * h_ul.
CMatrix apply_rx_error(const CMatrix& h_ul, const RfChainSpec& spec);

/// Residual reciprocity error of one intra-cell calibrated eNB. Every
/// antenna shares the same tx/rx ratio, amp * exp(j*phase).
class CellRfError {
 public:
  CellRfError(double amp, double phase, std::size_t n_antennas = 1);

  /// Throws std::invalid_argument unless the spec's ratio is uniform to `tol`.
  static CellRfError from_spec(const RfChainSpec& spec, double tol = 1e-9);

  double residual_amp() const noexcept { return amp_; }
  /// In (-pi, pi].
  double residual_phase() const noexcept { return phase_; }
  cdouble scalar() const;
  const std::vector<cdouble>& c_diag() const noexcept { return c_diag_; }

 private:
  CellRfError(double amp, double phase, std::vector<cdouble> c_diag);

  double amp_;
  double phase_;
  std::vector<cdouble> c_diag_;
};

/// C_JT = delta_amp * exp(j*delta_phase).
struct CjtError {
  double delta_amp = 1.0;
  double delta_phase = 0.0;

  cdouble value() const;
  cdouble inverse() const;
};

CjtError cjt_from_cells(const CellRfError& c1, const CellRfError& c2);

}  // namespace jtcal

#endif  // JTCAL_RF_ERROR_HPP
