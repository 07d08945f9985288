// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/canonical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdiscrim/error.hpp"
#include "qdiscrim/linalg.hpp"

namespace qdiscrim {

namespace {

// C^2 below this is an exactly orthogonal direction; between this and
// the eigensolver noise floor the normalized image P2 r_i is still
// accurate, so no gray zone remains in practice.
constexpr double kZeroOverlapSq = 1e-14;
// width of an overlap-square group treated as degenerate
constexpr double kClusterTol = 1e-8;

}  // namespace

CMatrix orthonormalize_cluster(const CMatrix& cols) {
  CMatrix out = gram_schmidt(cols, 1e-10);
  if (out.cols() != cols.cols()) {
    throw std::logic_error("orthonormalize_cluster: dependent columns in a degenerate group");
  }
  return out;
}

CMatrix complete_in_support(const CMatrix& support_basis, const CMatrix& existing,
                            std::size_t count) {
  return complete_columns(support_basis, existing, count);
}

CanonicalFrame build_frame(const DiscriminationInstance& inst) {
  if (!inst.standard_shape) {
    throw Error(ErrorKind::NotStandardShape,
                "ranks " + std::to_string(inst.rho1.rank) + ", " + std::to_string(inst.rho2.rank) +
                    " with joint dimension " + std::to_string(inst.joint_dim));
  }
  const std::size_t d = inst.d;
  const std::size_t dim = inst.rho1.dim;
  const CMatrix& t1 = inst.rho1.support_basis;  // dim x d
  const CMatrix p2 = (inst.rho2.support_basis * inst.rho2.support_basis.adjoint()).hermitian_part();

  // P1 P2 P1 compressed to supp(rho1) coordinates
  const CMatrix compressed = (t1.adjoint() * (p2 * t1)).hermitian_part();
  EigenDecomposition ed = eigh(compressed);  // overlap squares, ascending

  CMatrix r_basis = t1 * ed.eigenvectors;
  phase_normalize_columns(r_basis);

  // re-orthonormalize degenerate overlap groups in input order
  std::size_t lo = 0;
  while (lo < d) {
    std::size_t hi = lo + 1;
    while (hi < d && std::abs(ed.eigenvalues[hi] - ed.eigenvalues[hi - 1]) <= kClusterTol) ++hi;
    if (hi - lo > 1) {
      const CMatrix fixed = orthonormalize_cluster(r_basis.col_range(lo, hi - lo));
      for (std::size_t j = 0; j < hi - lo; ++j) r_basis.set_col(lo + j, fixed.col(j));
    }
    lo = hi;
  }
  phase_normalize_columns(r_basis);

  CanonicalFrame frame;
  frame.d = d;
  frame.dim = dim;
  frame.r_basis = r_basis;
  frame.overlaps.resize(d);
  frame.sines.resize(d);

  std::vector<bool> zero(d, false);
  for (std::size_t i = 0; i < d; ++i) {
    const double c2 = ed.eigenvalues[i];
    if (c2 <= kZeroOverlapSq) {
      zero[i] = true;
      frame.overlaps[i] = 0.0;
    } else {
      frame.overlaps[i] = std::sqrt(c2);
    }
    if (frame.overlaps[i] > 1.0 - 1e-9) {
      throw Error(ErrorKind::DegenerateOverlap,
                  "overlap " + std::to_string(frame.overlaps[i]) + " at index " +
                      std::to_string(i) + " leaves no unambiguous direction");
    }
    frame.sines[i] = std::sqrt(1.0 - frame.overlaps[i] * frame.overlaps[i]);
  }

  // partners: normalized image under P2 where the overlap is nonzero,
  // then fill the orthogonal directions from supp(rho2) itself
  CMatrix s_basis(dim, d);
  std::size_t zero_count = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (zero[i]) {
      ++zero_count;
      continue;
    }
    CMatrix img = p2 * r_basis.col(i);
    const double nrm = img.frobenius_norm();
    s_basis.set_col(i, img * (1.0 / nrm));
  }
  if (zero_count > 0) {
    CMatrix existing(dim, d - zero_count);
    std::size_t k = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (!zero[i]) existing.set_col(k++, s_basis.col(i));
    CMatrix fill = complete_in_support(inst.rho2.support_basis, existing, zero_count);
    phase_normalize_columns(fill);
    k = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (zero[i]) s_basis.set_col(i, fill.col(k++));
  }
  frame.s_basis = s_basis;

  frame.v_basis = CMatrix(dim, d);
  frame.w_basis = CMatrix(dim, d);
  for (std::size_t i = 0; i < d; ++i) {
    const double c = frame.overlaps[i];
    const double s = frame.sines[i];
    frame.v_basis.set_col(i, (r_basis.col(i) - c * s_basis.col(i)) * (1.0 / s));
    frame.w_basis.set_col(i, (s_basis.col(i) - c * r_basis.col(i)) * (1.0 / s));
  }

  frame.r_mat = (r_basis.adjoint() * (inst.rho1.mat * r_basis)).hermitian_part();
  frame.s_mat = (s_basis.adjoint() * (inst.rho2.mat * s_basis)).hermitian_part();
  return frame;
}

}  // namespace qdiscrim
