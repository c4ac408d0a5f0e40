// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "jtcal/numerics.hpp"
#include "oracles.hpp"

using namespace jtcal;
using namespace std::complex_literals;

namespace {

double max_rel_diff(const CMatrix& a, const oracle::Dense& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - b[i][j]) / std::max(1.0, std::abs(b[i][j])));
  return worst;
}

}  // namespace

TEST_CASE("matmul") {
  const CMatrix m{{1.0, 2.0 + 1i}, {-3i, 0.5}};

  SUBCASE("identity") { CHECK(matmul(CMatrix::identity(2), m) == m); }

  SUBCASE("scalar diagonal") {
    const CMatrix jI = CMatrix::identity(2) * 1i;
    const CMatrix ones{{1.0}, {1.0}};
    const CMatrix expected{{1i}, {1i}};
    CHECK(matmul(jI, ones) == expected);
  }

  SUBCASE("seeded 2x4 * 4x1 against triple loop") {
    const CMatrix a = oracle::random_matrix(2, 4, 11);
    const CMatrix b = oracle::random_matrix(4, 1, 12);
    const CMatrix c = matmul(a, b);
    REQUIRE(c.rows() == 2);
    REQUIRE(c.cols() == 1);
    CHECK(max_rel_diff(c, oracle::matmul(oracle::to_dense(a), oracle::to_dense(b))) < 1e-14);
  }

  SUBCASE("dimension mismatch") { CHECK_THROWS_AS(matmul(m, CMatrix(3, 1)), std::invalid_argument); }
}

TEST_CASE("transpose is plain, conj_transpose conjugates") {
  const CMatrix z{{2.0 - 1i}};
  CHECK(transpose(z) == z);

  const CMatrix row{{1.0, 1i}};
  const CMatrix col{{1.0}, {1i}};
  CHECK(transpose(row) == col);

  const CMatrix m = oracle::random_matrix(3, 5, 4);
  CHECK(transpose(transpose(m)) == m);
  CHECK(conj_transpose(conj_transpose(m)) == m);

  CHECK(conj_transpose(CMatrix{{1i}}) == CMatrix{{-1i}});
  const CMatrix real{{1.0, -2.0}, {3.5, 4.0}};
  CHECK(conj_transpose(real) == transpose(real));
}

TEST_CASE("fro_norm") {
  CHECK(fro_norm(CMatrix(3, 2)) == 0.0);
  CHECK(fro_norm(CMatrix{{3.0, 4i}}) == doctest::Approx(5.0).epsilon(1e-15));
  const CMatrix m = oracle::random_matrix(4, 4, 99);
  const double expected = oracle::fro_norm(oracle::to_dense(m));
  CHECK(std::abs(fro_norm(m) - expected) / expected < 1e-12);
}

TEST_CASE("matmul is associative") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CMatrix a = oracle::random_matrix(2, 3, 3 * seed);
    const CMatrix b = oracle::random_matrix(3, 4, 3 * seed + 1);
    const CMatrix c = oracle::random_matrix(4, 2, 3 * seed + 2);
    const CMatrix left = matmul(matmul(a, b), c);
    const CMatrix right = matmul(a, matmul(b, c));
    CHECK(fro_norm(left + right * -1.0) / fro_norm(left) < 1e-10);
  }
}

TEST_CASE("unitary rotation preserves the norm") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const double t = 0.1 * static_cast<double>(seed) + 0.05;
    const CMatrix u{{std::cos(t), -std::sin(t) * std::exp(1i * t)}, {std::sin(t), std::cos(t) * std::exp(1i * t)}};
    const CMatrix x = oracle::random_matrix(2, 1, seed + 1000);
    CHECK(std::abs(fro_norm(matmul(u, x)) - fro_norm(x)) / fro_norm(x) < 1e-10);
  }
}

TEST_CASE("entries are always finite") {
  CHECK_THROWS_AS(CMatrix(1, 1, {cdouble(NAN, 0.0)}), std::domain_error);
  CMatrix m(1, 1);
  CHECK_THROWS_AS(m.set(0, 0, cdouble(INFINITY, 0.0)), std::domain_error);
  CHECK_THROWS_AS(CMatrix(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(m.set(1, 0, 1.0), std::out_of_range);
}

TEST_CASE("hconcat") {
  const CMatrix a{{1.0}, {2.0}};
  const CMatrix b{{3.0, 4.0}, {5.0, 6.0}};
  CHECK(hconcat(a, b) == CMatrix{{1.0, 3.0, 4.0}, {2.0, 5.0, 6.0}});
  CHECK_THROWS_AS(hconcat(a, CMatrix(3, 1)), std::invalid_argument);
}
