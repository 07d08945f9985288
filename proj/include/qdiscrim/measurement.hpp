// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qdiscrim/canonical.hpp"
#include "qdiscrim/fidelity.hpp"

namespace qdiscrim {

// What the optimal measurement does along one canonical direction.
enum class Regime {
  ProjectOn1,  // alpha = 1, beta = 0: never report state 2 here
  Povm,        // interior weights, both detections active
  ProjectOn2,  // alpha = 0, beta = 1
};

struct CoefficientPlan {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<Regime> regime;
};

// Three detection operators on the ambient space. pi1 detects the
// first state (it annihilates the second), pi2 the reverse, pi0
// absorbs the rest. alpha and beta are the weights in the kernel
// bases: pi1 = V alpha V', pi2 = W beta W'.
struct Measurement {
  CMatrix pi0;
  CMatrix pi1;
  CMatrix pi2;
  CMatrix alpha;  // d x d Hermitian
  CMatrix beta;
};

// Per-direction optimum. The interior weights are
//   alpha_i = (1 - q C_i / t_i) / S_i^2,  beta_i = (1 - t_i C_i / q) / S_i^2,
// with q = sqrt(eta2/eta1) and t_i = sqrt(r_ii/s_ii); a direction is
// clamped to a projection when q leaves [C_i t_i, t_i / C_i].
// Requires an applicable closed form.
CoefficientPlan plan_coefficients(const CanonicalFrame& frame, double eta1, double eta2,
                                  const FidelityReport& fid);

Measurement assemble_measurement(const CanonicalFrame& frame, const CoefficientPlan& plan);
// general Hermitian weights; psd_tol gates how negative the smallest
// eigenvalue of pi0 may be before assembly is rejected
Measurement assemble_measurement(const CanonicalFrame& frame, const CMatrix& alpha,
                                 const CMatrix& beta, double psd_tol = 1e-9);

double failure_probability(const CanonicalFrame& frame, const CoefficientPlan& plan, double eta1,
                           double eta2);
double failure_probability(const CanonicalFrame& frame, const CMatrix& alpha, const CMatrix& beta,
                           double eta1, double eta2);

// Prior-ratio window [lo_i, hi_i] in which direction i stays interior,
// plus their intersection: the window where every direction is
// interior and the fidelity floor is met with equality.
struct RegimeWindows {
  std::vector<double> lo;
  std::vector<double> hi;  // +inf where C_i = 0
  double all_lo = 0.0;
  double all_hi = 0.0;
};

RegimeWindows regime_windows(const CanonicalFrame& frame);

// Which of the 2d + 1 prior-ratio cells `ratio` falls in: the number
// of window endpoints strictly passed, counting lo_i as passed when
// ratio >= lo_i so that boundaries land in the interior cell.
int region_index(const RegimeWindows& windows, double ratio);

}  // namespace qdiscrim
