// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qdiscrim/measurement.hpp"
#include "qdiscrim/oracle.hpp"

namespace qdiscrim {

enum class SolveMethod { ClosedForm, Numerical };

struct SolveReport {
  CanonicalFrame frame;
  Measurement measurement;
  double q_opt = 1.0;
  double fidelity = 0.0;   // general-route value
  double bound = 0.0;      // 2 sqrt(eta1 eta2) F
  bool saturated = false;  // q_opt equals the bound
  int region_index = 0;
  double necessary_lo = 0.0;  // prior-ratio interval where the bound could bind
  double necessary_hi = 0.0;
  double achieved_lo = 0.0;   // interval where this instance's optimum binds it
  double achieved_hi = 0.0;
  SolveMethod method = SolveMethod::ClosedForm;
  bool oracle_checked = false;
  double oracle_gap = 0.0;       // q_opt - oracle's q, when checked
  bool oracle_converged = true;  // meaningful for Numerical or checked reports
};

struct SolveOptions {
  OracleConfig oracle;
  // referee closed-form results that carry no optimality certificate
  // (off-diagonal canonical matrices in a partially clamped region)
  bool crosscheck_marginal = true;
};

// Closed form when the canonical matrices are diagonal enough for it,
// otherwise the numerical path on the same frame.
SolveReport solve(const DiscriminationInstance& inst, const SolveOptions& opts = {});

}  // namespace qdiscrim
