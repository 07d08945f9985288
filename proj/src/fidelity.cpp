// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/fidelity.hpp"

#include <cmath>
#include <limits>

#include "qdiscrim/linalg.hpp"

namespace qdiscrim {

double fidelity_general(const DensityOperator& rho1, const DensityOperator& rho2) {
  // compress onto the support of rho1: the nonzero spectrum of
  // sqrt(rho1) rho2 sqrt(rho1) equals that of B' rho2 B with
  // B = support_basis diag(sqrt(lambda)), a rank x rank problem with no
  // zero eigenspace to amplify roundoff through the square roots
  const std::size_t rank = rho1.rank;
  std::vector<double> roots(rank);
  for (std::size_t j = 0; j < rank; ++j)
    roots[j] = std::sqrt(std::max(rho1.spectrum[rho1.dim - rank + j], 0.0));
  const CMatrix b = rho1.support_basis * CMatrix::diagonal(roots);
  EigenDecomposition ed = eigh((b.adjoint() * rho2.mat * b).hermitian_part());
  double f = 0.0;
  for (double lam : ed.eigenvalues) f += std::sqrt(std::max(lam, 0.0));
  return f;
}

double fidelity_diagonal_form(const CanonicalFrame& frame) {
  double f = 0.0;
  for (std::size_t i = 0; i < frame.d; ++i) {
    const double r = frame.r_mat(i, i).real();
    const double s = frame.s_mat(i, i).real();
    f += frame.overlaps[i] * std::sqrt(std::max(r, 0.0) * std::max(s, 0.0));
  }
  return f;
}

bool closed_form_applicable(double f_general, double f_diagonal) {
  return std::abs(f_general - f_diagonal) <= 1e-8;
}

FidelityReport fidelity_report(const DiscriminationInstance& inst, const CanonicalFrame& frame) {
  FidelityReport rep;
  rep.f_general = fidelity_general(inst.rho1, inst.rho2);
  rep.f_diagonal_form = fidelity_diagonal_form(frame);
  rep.closed_form_applicable = closed_form_applicable(rep.f_general, rep.f_diagonal_form);
  rep.class_form_valid = max_abs_diff(frame.r_mat, frame.s_mat) <= 1e-8;
  double class_form = 0.0;
  for (std::size_t i = 0; i < frame.d; ++i)
    class_form += frame.overlaps[i] * frame.r_mat(i, i).real();
  rep.f_class_form = class_form;
  rep.bound = 2.0 * std::sqrt(inst.eta1 * inst.eta2) * rep.f_general;

  // tr(P2 rho1) = sum_i C_i^2 r_ii and tr(P1 rho2) = sum_i C_i^2 s_ii,
  // computed from the frame where both are exact
  double tr_p2_rho1 = 0.0;
  double tr_p1_rho2 = 0.0;
  for (std::size_t i = 0; i < frame.d; ++i) {
    const double c2 = frame.overlaps[i] * frame.overlaps[i];
    tr_p2_rho1 += c2 * frame.r_mat(i, i).real();
    tr_p1_rho2 += c2 * frame.s_mat(i, i).real();
  }
  if (rep.f_general > 1e-15) {
    rep.interval_lo = tr_p2_rho1 / rep.f_general;
    rep.interval_hi = tr_p1_rho2 > 1e-15 ? rep.f_general / tr_p1_rho2
                                         : std::numeric_limits<double>::infinity();
  } else {
    rep.interval_lo = 0.0;
    rep.interval_hi = std::numeric_limits<double>::infinity();
  }
  return rep;
}

}  // namespace qdiscrim
