// SPDX-License-Identifier: Apache-2.0
//
// Rank-1 precoding codebooks, PMI selection and the two ways the UE can see
// the CRS ports of a two-cell cooperating set.

#ifndef JTCAL_CODEBOOK_HPP
#define JTCAL_CODEBOOK_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "jtcal/numerics.hpp"

namespace jtcal {

enum class CodebookId { Rel8_2Tx, Rel8_4Tx, Dft };

struct Pmi {
  std::size_t index = 0;
  friend bool operator==(Pmi, Pmi) = default;
};

class Codebook {
 public:
  CodebookId id() const noexcept { return id_; }
  std::size_t n_ports() const noexcept { return n_ports_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  /// n_ports x 1 unit-norm column.
  const CMatrix& operator[](std::size_t i) const { return vectors_.at(i); }
  const std::vector<CMatrix>& vectors() const noexcept { return vectors_; }

 private:
  friend Codebook build_codebook(CodebookId, std::size_t, std::size_t);
  Codebook(CodebookId id, std::size_t n_ports, std::vector<CMatrix> vectors);

  CodebookId id_;
  std::size_t n_ports_;
  std::vector<CMatrix> vectors_;
};

/// Rel8_2Tx needs n_ports == 2, Rel8_4Tx needs n_ports == 4. Dft accepts any
/// port count; `dft_size` beams (default n_ports) spaced 2*pi/dft_size.
Codebook build_codebook(CodebookId id, std::size_t n_ports, std::size_t dft_size = 0);

/// The LTE Rel-8 codebook for 2 or 4 ports, DFT otherwise.
Codebook default_codebook(std::size_t n_ports);

/// argmax_k sum_f ||h_f * w_k||^2, lowest index on ties.
Pmi select_pmi(std::span<const CMatrix> h_eff, const Codebook& cb);
Pmi select_pmi(const CMatrix& h_eff, const Codebook& cb);

enum class CombineMode {
  /// Ports of both cells are indistinguishable and add up at the UE.
  SummedPorts,
  /// Ports are distinguishable; the UE sees [h1 | h2].
  ConcatenatedPorts,
};

CMatrix combine_channels(const CMatrix& h1, const CMatrix& h2, CombineMode mode);

/// Sums adjacent antenna columns in groups of cols/n_ports, scaled by
/// 1/sqrt(group) so that i.i.d. columns keep their power.
CMatrix port_virtualize(const CMatrix& h, std::size_t n_ports);

std::string_view to_string(CodebookId id);
std::string_view to_string(CombineMode mode);

}  // namespace jtcal

#endif  // JTCAL_CODEBOOK_HPP
