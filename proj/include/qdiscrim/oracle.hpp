// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qdiscrim/measurement.hpp"

namespace qdiscrim {

// Projected gradient ascent settings. The objective is linear and the
// feasible set convex, so restarts exist only to expose projection
// trouble, not local optima; they must agree.
struct OracleConfig {
  int max_iters = 20000;
  double step = 0.05;
  double tol = 1e-7;   // stationarity residual at unit step
  int restarts = 8;
  std::uint64_t seed = 0;
  bool parallel = false;
};

struct OracleResult {
  double q_num = 1.0;
  CMatrix alpha;  // d x d Hermitian, weights in the kernel bases
  CMatrix beta;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;  // stationarity residual of the winner
  int best_restart = 0;
  std::vector<double> objectives;  // per restart, for consistency checks
  std::vector<double> residuals;   // per restart stationarity residuals
};

// Maximizes eta1 tr(rho1 Pi1) + eta2 tr(rho2 Pi2) over unambiguous
// measurements by projected gradient ascent, with the feasible set
// handled by Dykstra's alternating projections. Independent of the
// closed form: truth data for it.
OracleResult optimize(const DiscriminationInstance& inst, const OracleConfig& cfg = {});
OracleResult optimize(const CanonicalFrame& frame, double eta1, double eta2,
                      const OracleConfig& cfg = {});

// Throws NotConverged, carrying the best feasible value found, when the
// stationarity test failed; passes the result through otherwise.
const OracleResult& require_converged(const OracleResult& res);

// Residuals of every measurement constraint against an instance.
struct FeasibilityReport {
  double min_eig_pi0 = 0.0;
  double min_eig_pi1 = 0.0;
  double min_eig_pi2 = 0.0;
  double max_eig_pi0 = 0.0;
  double max_eig_pi1 = 0.0;
  double max_eig_pi2 = 0.0;
  double completeness_residual = 0.0;  // ||pi0 + pi1 + pi2 - I||_F
  double kill1_residual = 0.0;         // ||rho1 pi2||_F
  double kill2_residual = 0.0;         // ||rho2 pi1||_F

  // largest violation across all constraints
  double worst() const;
  bool ok(double tol) const { return worst() <= tol; }
};

FeasibilityReport feasibility_check(const DiscriminationInstance& inst, const Measurement& m);

}  // namespace qdiscrim
