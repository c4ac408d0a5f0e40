// SPDX-License-Identifier: Apache-2.0

#ifndef JTCAL_RANDOM_HPP
#define JTCAL_RANDOM_HPP

#include <cstdint>
#include <random>

#include "jtcal/numerics.hpp"

namespace jtcal {

/// Named substreams so that changing one experiment axis never shifts the
/// draws consumed by another.
enum class Stream : std::uint32_t {
  Cell1Channel = 1,
  Cell2Channel = 2,
  UeNoise = 3,
  Enb1Noise = 4,
  Enb2Noise = 5,
  RfGains = 6,
  LinkChannel = 7,
  LinkPhase = 8,
};

/// Seed of substream `stream` of the run identified by `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::mt19937_64 engine(seq);
  return engine();
}

/// Seedable generator of circularly-symmetric complex Gaussians.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Substream `stream` of the run identified by `seed`.
  static Rng derive(std::uint64_t seed, Stream stream) { return Rng(derive_seed(seed, stream)); }

  /// CN(0, variance).
  cdouble complex_gaussian(double variance = 1.0) {
    const double s = std::sqrt(variance / 2.0);
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {s * re, s * im};
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  friend bool operator==(const Rng& a, const Rng& b) {
    return a.engine_ == b.engine_ && a.normal_ == b.normal_;
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace jtcal

#endif  // JTCAL_RANDOM_HPP
