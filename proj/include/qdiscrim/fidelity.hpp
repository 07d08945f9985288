// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qdiscrim/canonical.hpp"
#include "qdiscrim/states.hpp"

namespace qdiscrim {

struct FidelityReport {
  double f_general = 0.0;        // tr sqrt(sqrt(rho2) rho1 sqrt(rho2))
  double f_diagonal_form = 0.0;  // sum_i C_i sqrt(r_ii s_ii)
  double f_class_form = 0.0;     // sum_i C_i r_ii
  bool closed_form_applicable = false;
  bool class_form_valid = false;  // r_mat and s_mat agree entrywise
  double bound = 0.0;             // 2 sqrt(eta1 eta2) F, floor on the failure probability
  // the prior ratio sqrt(eta2/eta1) must fall in [lo, hi] for the
  // floor to be attainable at all; hi is +inf when tr(P1 rho2) is 0
  double interval_lo = 0.0;
  double interval_hi = 0.0;
};

double fidelity_general(const DensityOperator& rho1, const DensityOperator& rho2);
double fidelity_diagonal_form(const CanonicalFrame& frame);

// The diagonal formula is exact when both states are diagonal in their
// canonical bases; agreement of the two fidelity routes within 1e-8 is
// the working test for that.
bool closed_form_applicable(double f_general, double f_diagonal);

FidelityReport fidelity_report(const DiscriminationInstance& inst, const CanonicalFrame& frame);

}  // namespace qdiscrim
