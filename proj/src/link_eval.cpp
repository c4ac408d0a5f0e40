// SPDX-License-Identifier: Apache-2.0

#include "jtcal/link_eval.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "jtcal/phase.hpp"
#include "jtcal/random.hpp"

namespace jtcal {

namespace {

CMatrix mrt_direction(const CMatrix& h_ul) {
  if (h_ul.cols() != 1) throw std::invalid_argument("mrt_weights: uplink must be a single-antenna column");
  const double norm = fro_norm(h_ul);
  if (!(norm > 0.0)) throw std::invalid_argument("mrt_weights: zero-norm channel");
  // Column form of transpose(h_ul) / ||h_ul||, conjugated so that
  // transpose(h_ul) * w = ||h_ul||.
  return conj_transpose(transpose(h_ul)) * cdouble(1.0 / norm);
}

}  // namespace

JtWeights mrt_weights(const CMatrix& h1_ul, const CMatrix& h2_ul, const CjtError& cjt_est) {
  if (!(cjt_est.delta_amp > 0.0)) throw std::invalid_argument("mrt_weights: amplitude ratio must be > 0");
  return {mrt_direction(h1_ul), mrt_direction(h2_ul) * cjt_est.inverse()};
}

CMatrix received_signal(const CMatrix& h1_dl, const CMatrix& h2_dl, const JtWeights& w, cdouble x,
                        const CMatrix& noise) {
  CMatrix r = matmul(h1_dl, w.w1) * x + matmul(h2_dl, w.w2) * x;
  if (noise.rows() != r.rows() || noise.cols() != r.cols())
    throw std::invalid_argument("received_signal: noise shape does not match the received signal");
  return r + noise;
}

CMatrix received_signal(const CMatrix& h1_dl, const CMatrix& h2_dl, const JtWeights& w, cdouble x) {
  return received_signal(h1_dl, h2_dl, w, x, CMatrix(h1_dl.rows(), 1));
}

double coherent_gain(double residual_phase) { return (1.0 + std::cos(residual_phase)) / 2.0; }

double coherent_gain_db(double residual_phase) {
  const double g = coherent_gain(residual_phase);
  return g > 0.0 ? 10.0 * std::log10(g) : -std::numeric_limits<double>::infinity();
}

std::vector<LinkGainRow> evaluate_residual_sweep(const LinkSweepConfig& cfg, std::span<const double> phases) {
  if (cfg.n_tx < 1 || cfg.n_runs < 1) throw std::invalid_argument("evaluate_residual_sweep: empty configuration");

  const std::size_t n_rows = phases.size() + (cfg.include_uniform ? 1 : 0);
  std::vector<double> power_sum(n_rows, 0.0);
  double coherent_sum = 0.0;
  const cdouble x = 1.0;

  for (std::size_t run = 0; run < cfg.n_runs; ++run) {
    Rng rng = Rng::derive(cfg.base_seed + run, Stream::LinkChannel);
    std::vector<cdouble> v1(cfg.n_tx), v2(cfg.n_tx);
    for (auto& z : v1) z = rng.complex_gaussian();
    for (auto& z : v2) z = rng.complex_gaussian();
    CMatrix h1_ul = CMatrix::column(v1);
    CMatrix h2_ul = CMatrix::column(v2);
    if (cfg.equal_norm) h2_ul *= fro_norm(h1_ul) / fro_norm(h2_ul);

    const CellRfError cell1(1.0, rng.uniform(-kPi, kPi));
    const CellRfError cell2(1.0, rng.uniform(-kPi, kPi));
    const CjtError truth = cjt_from_cells(cell1, cell2);
    const CMatrix h1_dl = transpose(h1_ul) * cell1.scalar();
    const CMatrix h2_dl = transpose(h2_ul) * cell2.scalar();

    auto received_power = [&](double residual) {
      const CjtError est{truth.delta_amp, wrap_phase(truth.delta_phase - residual)};
      return power(received_signal(h1_dl, h2_dl, mrt_weights(h1_ul, h2_ul, est), x)) / std::norm(x);
    };

    coherent_sum += received_power(0.0);
    for (std::size_t i = 0; i < phases.size(); ++i) power_sum[i] += received_power(phases[i]);
    if (cfg.include_uniform) {
      Rng phase_rng = Rng::derive(cfg.base_seed + run, Stream::LinkPhase);
      power_sum.back() += received_power(phase_rng.uniform(-kPi, kPi));
    }
  }

  const double runs = static_cast<double>(cfg.n_runs);
  const double coherent_mean = coherent_sum / runs;
  std::vector<LinkGainRow> rows;
  rows.reserve(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) {
    LinkGainRow row;
    const bool uniform = i == phases.size();
    row.label = uniform ? "uniform" : "fixed";
    row.phase = uniform ? std::numeric_limits<double>::quiet_NaN() : phases[i];
    row.mean_power = power_sum[i] / runs;
    row.gain_db = row.mean_power > 0.0 ? 10.0 * std::log10(row.mean_power / coherent_mean)
                                       : -std::numeric_limits<double>::infinity();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace jtcal
