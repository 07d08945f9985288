// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qdiscrim/cmatrix.hpp"

namespace qdiscrim {

// A validated density operator together with its support data.
struct DensityOperator {
  CMatrix mat;            // Hermitian, PSD, unit trace
  std::size_t dim = 0;
  std::size_t rank = 0;   // eigenvalues above 1e-9
  CMatrix support_basis;  // dim x rank, orthonormal columns
  std::vector<double> spectrum;  // ascending
};

// Checks hermiticity (residual <= 1e-10), unit trace (|tr - 1| <= 1e-10)
// and positivity (eigenvalues >= -1e-10), then records rank and support.
DensityOperator validate_density(const CMatrix& mat);

// Two hypotheses with prior probabilities. The closed-form machinery
// needs the standard shape: equal ranks d and a joint support of
// dimension exactly 2d.
struct DiscriminationInstance {
  DensityOperator rho1;
  DensityOperator rho2;
  double eta1 = 0.0;
  double eta2 = 0.0;
  std::size_t joint_dim = 0;
  bool standard_shape = false;
  std::size_t d = 0;  // common rank when standard_shape, else 0
};

DiscriminationInstance make_instance(DensityOperator rho1, DensityOperator rho2, double eta1);

struct SupportProjectors {
  CMatrix p1;
  CMatrix p2;
};

SupportProjectors support_projectors(const DiscriminationInstance& inst);

}  // namespace qdiscrim
