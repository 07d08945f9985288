// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qdiscrim/error.hpp"
#include "qdiscrim/linalg.hpp"

namespace qdiscrim {

namespace {

double diag_real(const CMatrix& m, std::size_t i) { return m(i, i).real(); }

}  // namespace

RegimeWindows regime_windows(const CanonicalFrame& frame) {
  RegimeWindows w;
  w.lo.resize(frame.d);
  w.hi.resize(frame.d);
  w.all_lo = 0.0;
  w.all_hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < frame.d; ++i) {
    const double c = frame.overlaps[i];
    if (c == 0.0) {
      // an orthogonal direction is interior for every prior
      w.lo[i] = 0.0;
      w.hi[i] = std::numeric_limits<double>::infinity();
    } else {
      const double t = std::sqrt(diag_real(frame.r_mat, i) / diag_real(frame.s_mat, i));
      w.lo[i] = c * t;
      w.hi[i] = t / c;
    }
    w.all_lo = std::max(w.all_lo, w.lo[i]);
    w.all_hi = std::min(w.all_hi, w.hi[i]);
  }
  return w;
}

int region_index(const RegimeWindows& windows, double ratio) {
  int idx = 0;
  for (double lo : windows.lo)
    if (ratio >= lo) ++idx;
  for (double hi : windows.hi)
    if (ratio > hi) ++idx;
  return idx;
}

CoefficientPlan plan_coefficients(const CanonicalFrame& frame, double eta1, double eta2,
                                  const FidelityReport& fid) {
  if (!fid.closed_form_applicable) {
    throw Error(ErrorKind::ClosedFormNotApplicable,
                "fidelity routes disagree by " +
                    std::to_string(std::abs(fid.f_general - fid.f_diagonal_form)));
  }
  const double ratio = std::sqrt(eta2 / eta1);
  CoefficientPlan plan;
  plan.alpha.resize(frame.d);
  plan.beta.resize(frame.d);
  plan.regime.resize(frame.d);
  const RegimeWindows w = regime_windows(frame);
  for (std::size_t i = 0; i < frame.d; ++i) {
    const double c = frame.overlaps[i];
    if (c == 0.0) {
      plan.alpha[i] = 1.0;
      plan.beta[i] = 1.0;
      plan.regime[i] = Regime::Povm;
      continue;
    }
    if (ratio < w.lo[i]) {
      plan.alpha[i] = 1.0;
      plan.beta[i] = 0.0;
      plan.regime[i] = Regime::ProjectOn1;
    } else if (ratio > w.hi[i]) {
      plan.alpha[i] = 0.0;
      plan.beta[i] = 1.0;
      plan.regime[i] = Regime::ProjectOn2;
    } else {
      const double t = std::sqrt(diag_real(frame.r_mat, i) / diag_real(frame.s_mat, i));
      const double s2 = frame.sines[i] * frame.sines[i];
      plan.alpha[i] = std::clamp((1.0 - (ratio / t) * c) / s2, 0.0, 1.0);
      plan.beta[i] = std::clamp((1.0 - (t / ratio) * c) / s2, 0.0, 1.0);
      plan.regime[i] = Regime::Povm;
    }
  }
  return plan;
}

Measurement assemble_measurement(const CanonicalFrame& frame, const CoefficientPlan& plan) {
  return assemble_measurement(frame, CMatrix::diagonal(plan.alpha), CMatrix::diagonal(plan.beta));
}

Measurement assemble_measurement(const CanonicalFrame& frame, const CMatrix& alpha,
                                 const CMatrix& beta, double psd_tol) {
  Measurement m;
  m.alpha = alpha;
  m.beta = beta;
  m.pi1 = (frame.v_basis * alpha * frame.v_basis.adjoint()).hermitian_part();
  m.pi2 = (frame.w_basis * beta * frame.w_basis.adjoint()).hermitian_part();
  m.pi0 = (CMatrix::identity(frame.dim) - m.pi1 - m.pi2).hermitian_part();
  EigenDecomposition ed = eigh(m.pi0);
  if (ed.eigenvalues.front() < -psd_tol) {
    throw Error(ErrorKind::Pi0NotPsd,
                "inconclusive operator has eigenvalue " + std::to_string(ed.eigenvalues.front()));
  }
  return m;
}

double failure_probability(const CanonicalFrame& frame, const CoefficientPlan& plan, double eta1,
                           double eta2) {
  double detected = 0.0;
  for (std::size_t i = 0; i < frame.d; ++i) {
    const double s2 = frame.sines[i] * frame.sines[i];
    detected += s2 * (eta1 * plan.alpha[i] * diag_real(frame.r_mat, i) +
                      eta2 * plan.beta[i] * diag_real(frame.s_mat, i));
  }
  return 1.0 - detected;
}

double failure_probability(const CanonicalFrame& frame, const CMatrix& alpha, const CMatrix& beta,
                           double eta1, double eta2) {
  // tr(rho1 pi1) = sum_ij S_i S_j alpha_ij r_ji, and likewise for 2
  const CMatrix ds = CMatrix::diagonal(frame.sines);
  const double det1 = ((ds * alpha * ds) * frame.r_mat).trace().real();
  const double det2 = ((ds * beta * ds) * frame.s_mat).trace().real();
  return 1.0 - eta1 * det1 - eta2 * det2;
}

}  // namespace qdiscrim
