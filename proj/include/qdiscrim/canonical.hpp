// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qdiscrim/states.hpp"

namespace qdiscrim {

// Paired orthonormal bases for the two supports, aligned so that
// <r_i|s_j> = C_i delta_ij with 0 <= C_i < 1 ascending. v_i spans the
// part of supp(rho1) outside supp(rho2) and w_i the mirror image:
//   v_i = (r_i - C_i s_i) / S_i,   w_i = (s_i - C_i r_i) / S_i,
// with S_i = sqrt(1 - C_i^2). r_mat and s_mat are the states expressed
// in their own bases.
struct CanonicalFrame {
  std::size_t d = 0;
  std::size_t dim = 0;            // ambient dimension
  std::vector<double> overlaps;   // C_i, ascending
  std::vector<double> sines;      // S_i
  CMatrix r_basis;                // dim x d
  CMatrix s_basis;
  CMatrix v_basis;
  CMatrix w_basis;
  CMatrix r_mat;                  // d x d, r_ij = <r_i|rho1|r_j>
  CMatrix s_mat;                  // d x d, s_ij = <s_i|rho2|s_j>
};

// Diagonalizes P1 P2 P1 restricted to supp(rho1). Requires the standard
// shape; rejects overlaps within 1e-9 of 1 (supports touch). Overlap
// groups whose squares agree within 1e-8 are re-orthonormalized in
// place so the basis is reproducible; every basis column has its first
// sizable component rotated real positive.
CanonicalFrame build_frame(const DiscriminationInstance& inst);

// Gram-Schmidt in input order; column count must be preserved.
CMatrix orthonormalize_cluster(const CMatrix& cols);

// Orthonormal columns inside span(support_basis) orthogonal to all of
// `existing`; used to pick partner vectors for zero-overlap directions.
CMatrix complete_in_support(const CMatrix& support_basis, const CMatrix& existing,
                            std::size_t count);

}  // namespace qdiscrim
