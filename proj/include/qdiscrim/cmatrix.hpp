// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qdiscrim {

using cplx = std::complex<double>;

// Dense complex matrix, row major. Column vectors are n-by-1 matrices;
// everything in this library is small (dimension at most a few dozen),
// so no effort is spent on blocking or expression templates.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);
  static CMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
  static CMatrix diagonal(const std::vector<double>& entries);
  static CMatrix column_vector(const std::vector<cplx>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CMatrix adjoint() const;
  CMatrix hermitian_part() const;  // (A + A') / 2
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  // max_ij |a_ij - conj(a_ji)|; infinity for non-square input
  double hermiticity_residual() const;

  CMatrix col(std::size_t j) const;
  void set_col(std::size_t j, const CMatrix& v);
  // columns [first, first + count) as a new matrix
  CMatrix col_range(std::size_t first, std::size_t count) const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx z);
  CMatrix operator-() const;

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx z) { return a *= z; }
  friend CMatrix operator*(cplx z, CMatrix a) { return a *= z; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

// <x|y> for column vectors
cplx inner(const CMatrix& x, const CMatrix& y);
// |x><y|
CMatrix outer(const CMatrix& x, const CMatrix& y);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace qdiscrim
