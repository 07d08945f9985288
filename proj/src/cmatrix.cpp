// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/cmatrix.hpp"

#include <cmath>
#include <limits>

#include "qdiscrim/error.hpp"

namespace qdiscrim {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "elementwise op on " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::NotPsd: return "NotPsd";
    case ErrorKind::BadTrace: return "BadTrace";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegeneratePrior: return "DegeneratePrior";
    case ErrorKind::NotStandardShape: return "NotStandardShape";
    case ErrorKind::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorKind::ClosedFormNotApplicable: return "ClosedFormNotApplicable";
    case ErrorKind::Pi0NotPsd: return "Pi0NotPsd";
    case ErrorKind::InfeasibleMeasurement: return "InfeasibleMeasurement";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::BadFile: return "BadFile";
  }
  return "Unknown";
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  CMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged row in matrix literal");
    std::size_t j = 0;
    for (const auto& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<double>& entries) {
  CMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CMatrix CMatrix::column_vector(const std::vector<cplx>& entries) {
  CMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

CMatrix CMatrix::hermitian_part() const {
  if (!is_square()) throw Error(ErrorKind::NonSquare, "hermitian_part of non-square matrix");
  CMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return m;
}

cplx CMatrix::trace() const {
  if (!is_square()) throw Error(ErrorKind::NonSquare, "trace of non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::hermiticity_residual() const {
  if (!is_square()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

CMatrix CMatrix::col(std::size_t j) const {
  CMatrix v(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
  return v;
}

void CMatrix::set_col(std::size_t j, const CMatrix& v) {
  if (v.rows() != rows_ || v.cols() != 1) {
    throw Error(ErrorKind::DimensionMismatch, "set_col expects a column vector of matching height");
  }
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
}

CMatrix CMatrix::col_range(std::size_t first, std::size_t count) const {
  CMatrix m(rows_, count);
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, first + j);
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx z) {
  for (cplx& v : data_) v *= z;
  return *this;
}

CMatrix CMatrix::operator-() const {
  CMatrix m = *this;
  return m *= -1.0;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  CMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  }
  return m;
}

cplx inner(const CMatrix& x, const CMatrix& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "inner product expects column vectors of equal height");
  }
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) s += std::conj(x(i, 0)) * y(i, 0);
  return s;
}

CMatrix outer(const CMatrix& x, const CMatrix& y) {
  if (x.cols() != 1 || y.cols() != 1) {
    throw Error(ErrorKind::DimensionMismatch, "outer product expects column vectors");
  }
  CMatrix m(x.rows(), y.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < y.rows(); ++j) m(i, j) = x(i, 0) * std::conj(y(j, 0));
  return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace qdiscrim
