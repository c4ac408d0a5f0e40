// SPDX-License-Identifier: Apache-2.0

#include "jtcal/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jtcal {

namespace {

bool is_finite(cdouble z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_finite(std::span<const cdouble> values) {
  for (const auto& z : values) {
    if (!is_finite(z)) throw std::domain_error("CMatrix: non-finite entry");
  }
}

std::string shape(const CMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("CMatrix: expected " + std::to_string(rows_ * cols_) +
                                " entries, got " + std::to_string(data_.size()));
  }
  check_finite(data_);
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cdouble>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("CMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  check_finite(data_);
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cdouble> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

CMatrix CMatrix::column(std::span<const cdouble> values) {
  return CMatrix(values.size(), 1, std::vector<cdouble>(values.begin(), values.end()));
}

void CMatrix::set(std::size_t r, std::size_t c, cdouble value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("CMatrix::set: index out of range");
  if (!is_finite(value)) throw std::domain_error("CMatrix::set: non-finite entry");
  data_[r * cols_ + c] = value;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("CMatrix +: shape mismatch " + shape(*this) + " vs " + shape(other));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  check_finite(data_);
  return *this;
}

CMatrix& CMatrix::operator*=(cdouble scalar) {
  for (auto& z : data_) z *= scalar;
  check_finite(data_);
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator*(CMatrix a, cdouble scalar) { return a *= scalar; }
CMatrix operator*(cdouble scalar, CMatrix a) { return a *= scalar; }

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimension mismatch " + shape(a) + " * " + shape(b));
  }
  std::vector<cdouble> out(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cdouble aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[i * b.cols() + j] += aik * b(k, j);
    }
  }
  return CMatrix(a.rows(), b.cols(), std::move(out));
}

CMatrix transpose(const CMatrix& a) {
  std::vector<cdouble> out(a.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j * a.rows() + i] = a(i, j);
  return CMatrix(a.cols(), a.rows(), std::move(out));
}

CMatrix conj_transpose(const CMatrix& a) {
  std::vector<cdouble> out(a.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[j * a.rows() + i] = std::conj(a(i, j));
  return CMatrix(a.cols(), a.rows(), std::move(out));
}

double power(const CMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return sum;
}

double fro_norm(const CMatrix& a) { return std::sqrt(power(a)); }

CMatrix hconcat(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("hconcat: row mismatch " + shape(a) + " | " + shape(b));
  }
  const std::size_t cols = a.cols() + b.cols();
  std::vector<cdouble> out(a.rows() * cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i * cols + j] = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out[i * cols + a.cols() + j] = b(i, j);
  }
  return CMatrix(a.rows(), cols, std::move(out));
}

}  // namespace jtcal
