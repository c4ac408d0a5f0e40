// SPDX-License-Identifier: Apache-2.0

#include "jtcal/rf_error.hpp"

#include <cmath>
#include <stdexcept>

#include "jtcal/phase.hpp"

namespace jtcal {

void RfChainSpec::validate() const {
  if (tx_gains.size() != rx_gains.size())
    throw std::invalid_argument("RfChainSpec: tx and rx gain lists differ in length");
  for (const auto& g : tx_gains)
    if (!(std::abs(g) > 0.0)) throw std::invalid_argument("RfChainSpec: zero tx gain");
  for (const auto& g : rx_gains)
    if (!(std::abs(g) > 0.0)) throw std::invalid_argument("RfChainSpec: zero rx gain");
}

std::vector<cdouble> reciprocity_matrix(const RfChainSpec& spec) {
  spec.validate();
  std::vector<cdouble> c(spec.n_antennas());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = spec.tx_gains[i] / spec.rx_gains[i];
  return c;
}

CMatrix apply_tx_error(const CMatrix& h_dl, const RfChainSpec& spec) {
  spec.validate();
  if (spec.n_antennas() != h_dl.cols())
    throw std::invalid_argument("apply_tx_error: gain count does not match channel columns");
  CMatrix out = h_dl;
  for (std::size_t r = 0; r < h_dl.rows(); ++r)
    for (std::size_t c = 0; c < h_dl.cols(); ++c) out.set(r, c, h_dl(r, c) * spec.tx_gains[c]);
  return out;
}

CMatrix apply_rx_error(const CMatrix& h_ul, const RfChainSpec& spec) {
  spec.validate();
  if (spec.n_antennas() != h_ul.rows())
    throw std::invalid_argument("apply_rx_error: gain count does not match channel rows");
  CMatrix out = h_ul;
  for (std::size_t r = 0; r < h_ul.rows(); ++r)
    for (std::size_t c = 0; c < h_ul.cols(); ++c) out.set(r, c, spec.rx_gains[r] * h_ul(r, c));
  return out;
}

CellRfError::CellRfError(double amp, double phase, std::size_t n_antennas)
    : CellRfError(amp, phase, std::vector<cdouble>(n_antennas, std::polar(amp, wrap_phase(phase)))) {}

CellRfError::CellRfError(double amp, double phase, std::vector<cdouble> c_diag)
    : amp_(amp), phase_(wrap_phase(phase)), c_diag_(std::move(c_diag)) {
  if (!(amp_ > 0.0) || !std::isfinite(amp_)) throw std::invalid_argument("CellRfError: amplitude must be > 0");
  if (!std::isfinite(phase)) throw std::invalid_argument("CellRfError: phase must be finite");
  if (c_diag_.empty()) throw std::invalid_argument("CellRfError: at least one antenna required");
}

CellRfError CellRfError::from_spec(const RfChainSpec& spec, double tol) {
  auto c = reciprocity_matrix(spec);
  if (c.empty()) throw std::invalid_argument("CellRfError: empty RF chain spec");
  const cdouble ref = c.front();
  for (const auto& ci : c) {
    if (std::abs(ci - ref) > tol * std::abs(ref))
      throw std::invalid_argument("CellRfError: reciprocity ratio is not uniform across antennas");
  }
  return CellRfError(std::abs(ref), std::arg(ref), std::move(c));
}

cdouble CellRfError::scalar() const { return std::polar(amp_, phase_); }

cdouble CjtError::value() const { return std::polar(delta_amp, delta_phase); }

cdouble CjtError::inverse() const { return std::polar(1.0 / delta_amp, -delta_phase); }

namespace {

void require_uniform(const CellRfError& cell) {
  const cdouble ref = cell.scalar();
  for (const auto& ci : cell.c_diag()) {
    if (std::abs(ci - ref) > 1e-9 * std::abs(ref))
      throw std::invalid_argument("cjt_from_cells: cell error is not uniform across antennas");
  }
}

}  // namespace

CjtError cjt_from_cells(const CellRfError& c1, const CellRfError& c2) {
  require_uniform(c1);
  require_uniform(c2);
  return CjtError{c2.residual_amp() / c1.residual_amp(),
                  wrap_phase(c2.residual_phase() - c1.residual_phase())};
}

}  // namespace jtcal
