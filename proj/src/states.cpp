// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/states.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qdiscrim/error.hpp"
#include "qdiscrim/linalg.hpp"

namespace qdiscrim {

namespace {

constexpr double kRankTol = 1e-9;

}  // namespace

DensityOperator validate_density(const CMatrix& mat) {
  if (!mat.is_square()) throw Error(ErrorKind::NonSquare, "density matrix must be square");
  const double herm = mat.hermiticity_residual();
  if (herm > 1e-10) {
    throw Error(ErrorKind::NonHermitian, "hermiticity residual " + std::to_string(herm));
  }
  const double trace_residual = std::abs(mat.trace() - cplx(1.0));
  if (trace_residual > 1e-10) {
    throw Error(ErrorKind::BadTrace, "trace residual " + std::to_string(trace_residual));
  }
  EigenDecomposition ed = eigh(mat);
  if (!ed.eigenvalues.empty() && ed.eigenvalues.front() < -1e-10) {
    throw Error(ErrorKind::NotPsd, "minimum eigenvalue " + std::to_string(ed.eigenvalues.front()));
  }

  DensityOperator out;
  out.mat = mat.hermitian_part();
  out.dim = mat.rows();
  out.spectrum = ed.eigenvalues;
  std::size_t rank = 0;
  for (double lam : ed.eigenvalues)
    if (lam > kRankTol) ++rank;
  out.rank = rank;
  // eigenvalues are ascending, so the support is the tail block
  out.support_basis = ed.eigenvectors.col_range(out.dim - rank, rank);
  return out;
}

DiscriminationInstance make_instance(DensityOperator rho1, DensityOperator rho2, double eta1) {
  if (rho1.dim != rho2.dim) {
    throw Error(ErrorKind::DimensionMismatch, "hypotheses live in dimensions " +
                                                  std::to_string(rho1.dim) + " and " +
                                                  std::to_string(rho2.dim));
  }
  if (!(eta1 > 0.0) || !(eta1 < 1.0)) {
    throw Error(ErrorKind::DegeneratePrior, "eta1 = " + std::to_string(eta1) +
                                                " is outside the open interval (0, 1)");
  }

  DiscriminationInstance inst;
  inst.eta1 = eta1;
  inst.eta2 = 1.0 - eta1;
  inst.rho1 = std::move(rho1);
  inst.rho2 = std::move(rho2);

  const CMatrix p1 = inst.rho1.support_basis * inst.rho1.support_basis.adjoint();
  const CMatrix p2 = inst.rho2.support_basis * inst.rho2.support_basis.adjoint();
  EigenDecomposition ed = eigh((p1 + p2).hermitian_part());
  std::size_t joint = 0;
  for (double lam : ed.eigenvalues)
    if (lam > kRankTol) ++joint;
  inst.joint_dim = joint;

  inst.standard_shape =
      inst.rho1.rank == inst.rho2.rank && inst.joint_dim == 2 * inst.rho1.rank && inst.rho1.rank > 0;
  inst.d = inst.standard_shape ? inst.rho1.rank : 0;
  return inst;
}

SupportProjectors support_projectors(const DiscriminationInstance& inst) {
  SupportProjectors out;
  out.p1 = (inst.rho1.support_basis * inst.rho1.support_basis.adjoint()).hermitian_part();
  out.p2 = (inst.rho2.support_basis * inst.rho2.support_basis.adjoint()).hermitian_part();
  return out;
}

}  // namespace qdiscrim
