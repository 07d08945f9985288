// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qdiscrim/error.hpp"

namespace qdiscrim {

namespace {

constexpr double kHermTol = 1e-10;
constexpr int kMaxSweeps = 60;

// True if column a of m precedes column b: compare components as
// (re, im) pairs, first difference wins.
bool column_less(const CMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const cplx za = m(k, a), zb = m(k, b);
    if (za.real() != zb.real()) return za.real() < zb.real();
    if (za.imag() != zb.imag()) return za.imag() < zb.imag();
  }
  return false;
}

}  // namespace

void phase_normalize_columns(CMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const double mag = std::abs(m(i, j));
      if (mag > 1e-12) {
        const cplx phase = std::conj(m(i, j)) / mag;
        for (std::size_t k = 0; k < m.rows(); ++k) m(k, j) *= phase;
        // round-off can leave a stray imaginary part on the pivot
        m(i, j) = std::abs(m(i, j));
        break;
      }
    }
  }
}

EigenDecomposition eigh(const CMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NonSquare, "eigh expects a square matrix");
  const double herm = a.hermiticity_residual();
  if (herm > kHermTol) {
    throw Error(ErrorKind::NonHermitian, "hermiticity residual " + std::to_string(herm));
  }
  const std::size_t n = a.rows();
  CMatrix m = a.hermitian_part();
  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(1.0, m.frobenius_norm());
  const double skip = 1e-15 * scale;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx b = m(p, q);
        const double ab = std::abs(b);
        if (ab <= skip) continue;
        rotated = true;
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        const cplx u = b / ab;
        const double tau = (aqq - app) / (2.0 * ab);
        const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // m <- J' m J with J acting on the (p, q) plane as
        // [[u c, u s], [-s, c]]; columns first, then rows.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx kp = m(k, p), kq = m(k, q);
          m(k, p) = kp * (u * c) - kq * s;
          m(k, q) = kp * (u * s) + kq * c;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx pk = m(p, k), qk = m(q, k);
          m(p, k) = std::conj(u) * c * pk - s * qk;
          m(q, k) = std::conj(u) * s * pk + c * qk;
        }
        // closed-form pair update keeps the block exactly Hermitian
        m(p, p) = app - t * ab;
        m(q, q) = aqq + t * ab;
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx kp = v(k, p), kq = v(k, q);
          v(k, p) = kp * (u * c) - kq * s;
          v(k, q) = kp * (u * s) + kq * c;
        }
      }
    }
    if (!rotated) break;
  }

  phase_normalize_columns(v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return m(i, i).real() < m(j, j).real();
  });
  // settle near-degenerate runs by eigenvector content
  std::size_t lo = 0;
  while (lo < n) {
    std::size_t hi = lo + 1;
    while (hi < n) {
      const double a0 = m(order[hi - 1], order[hi - 1]).real();
      const double a1 = m(order[hi], order[hi]).real();
      if (std::abs(a1 - a0) > 1e-12 * std::max(1.0, std::abs(a1))) break;
      ++hi;
    }
    if (hi - lo > 1) {
      std::sort(order.begin() + lo, order.begin() + hi,
                [&](std::size_t i, std::size_t j) { return column_less(v, i, j); });
    }
    lo = hi;
  }

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = m(order[j], order[j]).real();
    out.eigenvectors.set_col(j, v.col(order[j]));
  }
  return out;
}

CMatrix sqrt_psd(const CMatrix& a) {
  EigenDecomposition ed = eigh(a);
  if (!ed.eigenvalues.empty() && ed.eigenvalues.front() < -1e-8) {
    throw Error(ErrorKind::NotPsd, "minimum eigenvalue " + std::to_string(ed.eigenvalues.front()));
  }
  const std::size_t n = a.rows();
  if (n == 0) return a;
  // eigenvalues within roundoff of zero are exact zeros: their square
  // roots would otherwise inject sqrt(eps)-sized noise into the result.
  // The floor sits well above the spectral perturbation of inputs
  // assembled from chains of matrix products (observed up to ~200 eps).
  const double scale =
      std::max(std::abs(ed.eigenvalues.front()), std::abs(ed.eigenvalues.back()));
  const double floor = 1024.0 * std::numeric_limits<double>::epsilon() * scale;
  CMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (ed.eigenvalues[k] <= floor) continue;
    const double lam = std::sqrt(ed.eigenvalues[k]);
    const CMatrix vk = ed.eigenvectors.col(k);
    out += lam * outer(vk, vk);
  }
  return out.hermitian_part();
}

double trace_norm(const CMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NonSquare, "trace_norm expects a square matrix");
  EigenDecomposition ed = eigh((a.adjoint() * a).hermitian_part());
  double s = 0.0;
  for (double lam : ed.eigenvalues) s += std::sqrt(std::max(lam, 0.0));
  return s;
}

CMatrix project_psd(const CMatrix& a) {
  EigenDecomposition ed = eigh(a);
  const std::size_t n = a.rows();
  CMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (ed.eigenvalues[k] <= 0.0) continue;
    const CMatrix vk = ed.eigenvectors.col(k);
    out += ed.eigenvalues[k] * outer(vk, vk);
  }
  return out.hermitian_part();
}

CMatrix gram_schmidt(const CMatrix& cols, double drop_tol) {
  std::vector<CMatrix> kept;
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    CMatrix w = cols.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const CMatrix& k : kept) w -= inner(k, w) * k;
    }
    const double nw = w.frobenius_norm();
    if (nw <= drop_tol) continue;
    kept.push_back(w * (1.0 / nw));
  }
  CMatrix out(cols.rows(), kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) out.set_col(j, kept[j]);
  return out;
}

CMatrix complete_columns(const CMatrix& space, const CMatrix& existing, std::size_t count) {
  std::vector<CMatrix> kept;
  for (std::size_t j = 0; j < space.cols() && kept.size() < count; ++j) {
    CMatrix w = space.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t e = 0; e < existing.cols(); ++e) {
        const CMatrix ex = existing.col(e);
        w -= inner(ex, w) * ex;
      }
      for (const CMatrix& k : kept) w -= inner(k, w) * k;
    }
    const double nw = w.frobenius_norm();
    if (nw > 1e-8) kept.push_back(w * (1.0 / nw));
  }
  if (kept.size() < count) {
    throw std::logic_error("complete_columns: span too small for requested completion");
  }
  CMatrix out(space.rows(), count);
  for (std::size_t j = 0; j < count; ++j) out.set_col(j, kept[j]);
  return out;
}

}  // namespace qdiscrim
