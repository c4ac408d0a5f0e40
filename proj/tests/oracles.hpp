// SPDX-License-Identifier: Apache-2.0
//
// Independent reference computations for the unit and acceptance tests.
// Nothing here calls into the library's arithmetic paths.

#ifndef JTCAL_TESTS_ORACLES_HPP
#define JTCAL_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "jtcal/numerics.hpp"

namespace oracle {

using cd = std::complex<double>;

/// Row-major nested vectors, kept apart from CMatrix.
using Dense = std::vector<std::vector<cd>>;

inline Dense to_dense(const jtcal::CMatrix& m) {
  Dense d(m.rows(), std::vector<cd>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

inline Dense matmul(const Dense& a, const Dense& b) {
  Dense c(a.size(), std::vector<cd>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      cd acc = 0.0;
      for (std::size_t k = 0; k < b.size(); ++k) acc += a[i][k] * b[k][j];
      c[i][j] = acc;
    }
  return c;
}

inline double fro_norm(const Dense& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (const auto& z : row) s += z.real() * z.real() + z.imag() * z.imag();
  return std::sqrt(s);
}

/// Seeded matrix with entries uniform in the unit square, independent of the
/// library's Gaussian generator.
inline jtcal::CMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cd> v(rows * cols);
  for (auto& z : v) z = {u(gen), u(gen)};
  return jtcal::CMatrix(rows, cols, std::move(v));
}

/// J0(x) by its power series sum_k (-1)^k (x/2)^{2k} / (k!)^2.
inline double bessel_j0_series(double x) {
  double term = 1.0, sum = 1.0;
  const double q = x * x / 4.0;
  for (int k = 1; k < 60; ++k) {
    term *= -q / (static_cast<double>(k) * static_cast<double>(k));
    sum += term;
  }
  return sum;
}

/// Wrap into (-pi, pi] through atan2 of the unit phasor.
inline double wrap_via_atan2(double x) {
  const double w = std::atan2(std::sin(x), std::cos(x));
  return w <= -M_PI + 1e-15 ? M_PI : w;
}

/// argmax_k sum_f ||H_f w_k||^2 by explicit loops; lowest index wins ties.
inline std::size_t brute_force_pmi(const std::vector<Dense>& h, const std::vector<std::vector<cd>>& codebook) {
  std::size_t best = 0;
  double best_metric = -1.0;
  for (std::size_t k = 0; k < codebook.size(); ++k) {
    double metric = 0.0;
    for (const auto& hf : h)
      for (const auto& row : hf) {
        cd acc = 0.0;
        for (std::size_t p = 0; p < row.size(); ++p) acc += row[p] * codebook[k][p];
        metric += std::norm(acc);
      }
    if (metric > best_metric * (1.0 + 1e-12)) {
      best_metric = metric;
      best = k;
    }
  }
  return best;
}

}  // namespace oracle

#endif  // JTCAL_TESTS_ORACLES_HPP
