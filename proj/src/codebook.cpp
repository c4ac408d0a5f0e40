// SPDX-License-Identifier: Apache-2.0

#include "jtcal/codebook.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "jtcal/phase.hpp"

namespace jtcal {

namespace {

using namespace std::complex_literals;

// Householder generating vectors u_n of the Rel-8 four-port codebook.
std::array<std::array<cdouble, 4>, 16> rel8_4tx_generators() {
  const double r = 1.0 / std::sqrt(2.0);
  return {{
      {1.0, -1.0, -1.0, -1.0},
      {1.0, -1i, 1.0, 1i},
      {1.0, 1.0, -1.0, 1.0},
      {1.0, 1i, 1.0, -1i},
      {1.0, (-1.0 - 1i) * r, -1i, (1.0 - 1i) * r},
      {1.0, (1.0 - 1i) * r, 1i, (-1.0 - 1i) * r},
      {1.0, (1.0 + 1i) * r, -1i, (-1.0 + 1i) * r},
      {1.0, (-1.0 + 1i) * r, 1i, (1.0 + 1i) * r},
      {1.0, -1.0, 1.0, 1.0},
      {1.0, -1i, -1.0, -1i},
      {1.0, 1.0, 1.0, -1.0},
      {1.0, 1i, -1.0, 1i},
      {1.0, -1.0, -1.0, 1.0},
      {1.0, -1.0, 1.0, -1.0},
      {1.0, 1.0, -1.0, -1.0},
      {1.0, 1.0, 1.0, 1.0},
  }};
}

// First column of W_n = I - 2 u u^H / (u^H u).
CMatrix householder_first_column(const std::array<cdouble, 4>& u) {
  double uu = 0.0;
  for (const auto& z : u) uu += std::norm(z);
  std::vector<cdouble> w(4);
  for (std::size_t i = 0; i < 4; ++i) w[i] = (i == 0 ? 1.0 : 0.0) - 2.0 * u[i] * std::conj(u[0]) / uu;
  return CMatrix(4, 1, std::move(w));
}

}  // namespace

Codebook::Codebook(CodebookId id, std::size_t n_ports, std::vector<CMatrix> vectors)
    : id_(id), n_ports_(n_ports), vectors_(std::move(vectors)) {}

Codebook build_codebook(CodebookId id, std::size_t n_ports, std::size_t dft_size) {
  std::vector<CMatrix> vectors;
  switch (id) {
    case CodebookId::Rel8_2Tx: {
      if (n_ports != 2) throw std::invalid_argument("Rel-8 2Tx codebook requires 2 ports");
      const double s = 1.0 / std::sqrt(2.0);
      for (cdouble second : {cdouble(1.0), cdouble(-1.0), 1i, -1i})
        vectors.push_back(CMatrix(2, 1, {s, s * second}));
      break;
    }
    case CodebookId::Rel8_4Tx: {
      if (n_ports != 4) throw std::invalid_argument("Rel-8 4Tx codebook requires 4 ports");
      for (const auto& u : rel8_4tx_generators()) vectors.push_back(householder_first_column(u));
      break;
    }
    case CodebookId::Dft: {
      if (n_ports < 1) throw std::invalid_argument("DFT codebook requires at least 1 port");
      const std::size_t beams = dft_size == 0 ? n_ports : dft_size;
      const double s = 1.0 / std::sqrt(static_cast<double>(n_ports));
      for (std::size_t k = 0; k < beams; ++k) {
        std::vector<cdouble> w(n_ports);
        for (std::size_t p = 0; p < n_ports; ++p) {
          const double angle = 2.0 * kPi * static_cast<double>(p * k % beams) / static_cast<double>(beams);
          w[p] = std::polar(s, angle);
        }
        vectors.emplace_back(n_ports, 1, std::move(w));
      }
      break;
    }
  }
  return Codebook(id, n_ports, std::move(vectors));
}

Codebook default_codebook(std::size_t n_ports) {
  if (n_ports == 2) return build_codebook(CodebookId::Rel8_2Tx, 2);
  if (n_ports == 4) return build_codebook(CodebookId::Rel8_4Tx, 4);
  return build_codebook(CodebookId::Dft, n_ports);
}

Pmi select_pmi(std::span<const CMatrix> h_eff, const Codebook& cb) {
  if (h_eff.empty()) throw std::invalid_argument("select_pmi: no channel given");
  for (const auto& h : h_eff) {
    if (h.cols() != cb.n_ports())
      throw std::invalid_argument("select_pmi: channel has " + std::to_string(h.cols()) +
                                  " columns, codebook has " + std::to_string(cb.n_ports()) + " ports");
  }
  // A relative margin keeps the choice stable under c*H rescaling when two
  // codewords tie up to rounding.
  constexpr double kTieMargin = 1e-12;
  Pmi best{0};
  double best_metric = -1.0;
  for (std::size_t k = 0; k < cb.size(); ++k) {
    double metric = 0.0;
    for (const auto& h : h_eff) metric += power(matmul(h, cb[k]));
    if (metric > best_metric * (1.0 + kTieMargin)) {
      best_metric = metric;
      best.index = k;
    }
  }
  return best;
}

Pmi select_pmi(const CMatrix& h_eff, const Codebook& cb) { return select_pmi(std::span(&h_eff, 1), cb); }

CMatrix combine_channels(const CMatrix& h1, const CMatrix& h2, CombineMode mode) {
  if (mode == CombineMode::SummedPorts) {
    if (h1.rows() != h2.rows() || h1.cols() != h2.cols())
      throw std::invalid_argument("combine_channels: summed ports need identical shapes");
    return h1 + h2;
  }
  return hconcat(h1, h2);
}

CMatrix port_virtualize(const CMatrix& h, std::size_t n_ports) {
  if (n_ports == 0 || h.cols() % n_ports != 0)
    throw std::invalid_argument("port_virtualize: " + std::to_string(h.cols()) +
                                " antennas cannot be split into " + std::to_string(n_ports) + " ports");
  const std::size_t group = h.cols() / n_ports;
  if (group == 1) return h;
  const double scale = 1.0 / std::sqrt(static_cast<double>(group));
  std::vector<cdouble> out(h.rows() * n_ports);
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t p = 0; p < n_ports; ++p) {
      cdouble sum = 0.0;
      for (std::size_t g = 0; g < group; ++g) sum += h(r, p * group + g);
      out[r * n_ports + p] = sum * scale;
    }
  return CMatrix(h.rows(), n_ports, std::move(out));
}

std::string_view to_string(CodebookId id) {
  switch (id) {
    case CodebookId::Rel8_2Tx: return "rel8-2tx";
    case CodebookId::Rel8_4Tx: return "rel8-4tx";
    case CodebookId::Dft: return "dft";
  }
  return "?";
}

std::string_view to_string(CombineMode mode) {
  return mode == CombineMode::SummedPorts ? "sum" : "concat";
}

}  // namespace jtcal
