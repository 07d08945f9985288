// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qdiscrim/cmatrix.hpp"

namespace qdiscrim {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  CMatrix eigenvectors;             // orthonormal columns, same order
};

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
// Deterministic: fixed sweep order, eigenvalues ascending, degenerate
// groups ordered by the lexicographically smallest eigenvector after
// phase normalization (first nonzero component real positive).
// Rejects input whose hermiticity residual exceeds 1e-10.
EigenDecomposition eigh(const CMatrix& a);

// Principal square root of a positive semidefinite Hermitian matrix.
// Eigenvalues in [-1e-8, 0) are clipped to zero; below that is an error.
CMatrix sqrt_psd(const CMatrix& a);

// Sum of singular values.
double trace_norm(const CMatrix& a);

// Nearest positive semidefinite matrix in Frobenius norm
// (negative eigenvalues clipped to zero).
CMatrix project_psd(const CMatrix& a);

// Modified Gram-Schmidt over the columns, in order, with one
// re-orthogonalization pass. Columns whose residual norm falls at or
// below drop_tol are dropped; the survivors are orthonormal.
CMatrix gram_schmidt(const CMatrix& cols, double drop_tol = 1e-10);

// Rotate each column's global phase so its first component of
// magnitude above 1e-12 is real positive.
void phase_normalize_columns(CMatrix& m);

// Pick `count` orthonormal columns inside span(space) orthogonal to all
// columns of `existing`, scanning the columns of `space` in order.
CMatrix complete_columns(const CMatrix& space, const CMatrix& existing, std::size_t count);

}  // namespace qdiscrim
