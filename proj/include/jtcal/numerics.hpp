// SPDX-License-Identifier: Apache-2.0
//
// Small dense complex matrix kernel used by every other module.

#ifndef JTCAL_NUMERICS_HPP
#define JTCAL_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace jtcal {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix. All matrices in this library are at most
/// a handful of rows and columns, so there is no blocking or BLAS path.
/// Entries are always finite; every mutating entry point checks this.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries);
  CMatrix(std::initializer_list<std::initializer_list<cdouble>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const cdouble> diag);
  static CMatrix column(std::span<const cdouble> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  cdouble operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Bounds- and finiteness-checked write.
  void set(std::size_t r, std::size_t c, cdouble value);

  std::span<const cdouble> entries() const noexcept { return data_; }

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator*=(cdouble scalar);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator*(CMatrix a, cdouble scalar);
CMatrix operator*(cdouble scalar, CMatrix a);

CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// Plain transpose; entries are not conjugated.
CMatrix transpose(const CMatrix& a);

CMatrix conj_transpose(const CMatrix& a);

double fro_norm(const CMatrix& a);

/// Sum of squared magnitudes, i.e. fro_norm squared without the sqrt.
double power(const CMatrix& a);

/// Columns of `a` followed by the columns of `b`.
CMatrix hconcat(const CMatrix& a, const CMatrix& b);

}  // namespace jtcal

#endif  // JTCAL_NUMERICS_HPP
