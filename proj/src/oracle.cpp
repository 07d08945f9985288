// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

#include "qdiscrim/canonical.hpp"
#include "qdiscrim/error.hpp"
#include "qdiscrim/linalg.hpp"
#include "qdiscrim/rng.hpp"

namespace qdiscrim {

namespace {

// Dykstra budgets: loose inside the ascent loop, tight for the final
// polish and the stationarity probe. Endpoint drift alone is not a
// convergence test (the increments can cancel across a cycle while the
// iterate is still far from feasible), so every exit also requires the
// feasibility residual to be small, and the ascent loop refuses
// candidates whose projection ran out of budget while infeasible.
constexpr int kCyclesLoose = 2000;
constexpr double kDriftLoose = 1e-10;
constexpr double kFeasLoose = 1e-10;
constexpr int kCyclesTight = 20000;
constexpr double kDriftTight = 1e-13;
constexpr double kFeasTight = 1e-12;
constexpr double kFeasAccept = 1e-8;
constexpr double kMaxStep = 1e4;

struct PairMat {
  CMatrix x;
  CMatrix y;
};

double pair_dist(const PairMat& a, const PairMat& b) {
  const double dx = (a.x - b.x).frobenius_norm();
  const double dy = (a.y - b.y).frobenius_norm();
  return std::sqrt(dx * dx + dy * dy);
}

// Everything below works in joint-support coordinates, where the first
// d axes carry the first state's eigenbasis and the last d axes its
// complement inside the joint span.
struct JointProblem {
  std::size_t d = 0;
  std::size_t n = 0;  // 2d
  CMatrix vb;         // n x d, kernel basis killing the second state
  CMatrix wb;         // n x d, kernel basis killing the first
  CMatrix g1;         // eta1 rho1, the gradient in x
  CMatrix g2;         // eta2 rho2
};

JointProblem make_problem(const CanonicalFrame& frame, double eta1, double eta2) {
  JointProblem p;
  p.d = frame.d;
  p.n = 2 * frame.d;
  const std::size_t d = p.d;

  CMatrix rho1(p.n, p.n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho1(i, j) = frame.r_mat(i, j);

  CMatrix ms(p.n, d);  // column i holds the partner vector s_i
  for (std::size_t i = 0; i < d; ++i) {
    ms(i, i) = frame.overlaps[i];
    ms(d + i, i) = frame.sines[i];
  }
  const CMatrix rho2 = (ms * frame.s_mat * ms.adjoint()).hermitian_part();

  p.vb = CMatrix(p.n, d);
  p.wb = CMatrix(p.n, d);
  for (std::size_t i = 0; i < d; ++i) {
    p.vb(i, i) = frame.sines[i];
    p.vb(d + i, i) = -frame.overlaps[i];
    p.wb(d + i, i) = 1.0;
  }

  p.g1 = rho1 * eta1;
  p.g2 = rho2 * eta2;
  return p;
}

double objective(const JointProblem& p, const PairMat& z) {
  return (p.g1 * z.x).trace().real() + (p.g2 * z.y).trace().real();
}

// nearest element of {m : m = B h B', h >= 0}
CMatrix project_block_psd(const CMatrix& m, const CMatrix& basis) {
  const CMatrix h = (basis.adjoint() * m * basis).hermitian_part();
  return (basis * project_psd(h) * basis.adjoint()).hermitian_part();
}

// nearest Hermitian matrix with eigenvalues at most one
CMatrix cap_at_identity(const CMatrix& m) {
  EigenDecomposition ed = eigh(m);
  CMatrix out(m.rows(), m.cols());
  for (std::size_t k = 0; k < ed.eigenvalues.size(); ++k) {
    const double lam = std::min(ed.eigenvalues[k], 1.0);
    if (lam == 0.0) continue;
    const CMatrix vk = ed.eigenvectors.col(k);
    out += lam * outer(vk, vk);
  }
  return out.hermitian_part();
}

// distance of the pair from the constraint sets; the identity cap
// holds exactly after the closing shift, measured anyway as an audit
double cone_distance(const JointProblem& p, const PairMat& z) {
  const double dx = (z.x - project_block_psd(z.x, p.vb)).frobenius_norm();
  const double dy = (z.y - project_block_psd(z.y, p.wb)).frobenius_norm();
  const EigenDecomposition ed = eigh((z.x + z.y).hermitian_part());
  const double over = std::max(0.0, ed.eigenvalues.back() - 1.0);
  return std::max({dx, dy, over});
}

struct Projected {
  PairMat z;
  double feas = 0.0;  // cone_distance at exit
};

// Dykstra's algorithm over three convex sets: x in the first kernel
// cone, y in the second, x + y capped by the identity. The increments
// are what distinguishes this from plain alternating projection; they
// make the limit the true nearest feasible pair.
Projected project_feasible(const JointProblem& p, PairMat z, int max_cycles, double drift_tol,
                           double feas_tol) {
  CMatrix inc1(p.n, p.n);
  CMatrix inc2(p.n, p.n);
  PairMat inc3{CMatrix(p.n, p.n), CMatrix(p.n, p.n)};
  double feas = -1.0;
  for (int cycle = 0; cycle < max_cycles; ++cycle) {
    const PairMat before = z;

    CMatrix w1 = z.x + inc1;
    z.x = project_block_psd(w1, p.vb);
    inc1 = w1 - z.x;

    CMatrix w2 = z.y + inc2;
    z.y = project_block_psd(w2, p.wb);
    inc2 = w2 - z.y;

    const CMatrix sx = z.x + inc3.x;
    const CMatrix sy = z.y + inc3.y;
    const CMatrix s0 = (sx + sy).hermitian_part();
    // projecting (a, b) onto {x + y <= I} shifts both halves equally
    const CMatrix shift = (cap_at_identity(s0) - s0) * 0.5;
    z.x = (sx + shift).hermitian_part();
    z.y = (sy + shift).hermitian_part();
    inc3.x = sx - z.x;
    inc3.y = sy - z.y;

    feas = -1.0;
    if (pair_dist(z, before) <= drift_tol) {
      feas = cone_distance(p, z);
      if (feas <= feas_tol) break;
    }
  }
  if (feas < 0.0) feas = cone_distance(p, z);
  return {std::move(z), feas};
}

struct RestartOutcome {
  PairMat z;
  double obj = 0.0;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;
};

PairMat random_start(const JointProblem& p, std::uint64_t seed) {
  CounterRng rng(seed);
  auto random_block = [&](const CMatrix& basis) {
    CMatrix g(p.d, p.d);
    for (std::size_t i = 0; i < p.d; ++i)
      for (std::size_t j = 0; j < p.d; ++j)
        g(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    CMatrix h = (g * g.adjoint()).hermitian_part();
    EigenDecomposition ed = eigh(h);
    if (ed.eigenvalues.back() > 0.0) h *= 0.9 / ed.eigenvalues.back();
    return (basis * h * basis.adjoint()).hermitian_part();
  };
  return {random_block(p.vb), random_block(p.wb)};
}

RestartOutcome run_restart(const JointProblem& p, PairMat start, const OracleConfig& cfg) {
  RestartOutcome out;
  PairMat z = project_feasible(p, std::move(start), kCyclesLoose, kDriftLoose, kFeasLoose).z;
  double obj = objective(p, z);
  double step = cfg.step;
  int stall = 0;

  while (out.iterations < cfg.max_iters) {
    ++out.iterations;
    PairMat trial{(z.x + p.g1 * step).hermitian_part(), (z.y + p.g2 * step).hermitian_part()};
    Projected cand = project_feasible(p, std::move(trial), kCyclesLoose, kDriftLoose, kFeasLoose);
    const double cobj = objective(p, cand.z);
    // an unconverged projection can report an inflated objective from
    // outside the feasible set; treat it like a failed trial
    if (cand.feas <= kFeasAccept && cobj >= obj - 1e-14) {
      const double moved = pair_dist(cand.z, z);
      z = std::move(cand.z);
      obj = cobj;
      // the iterate stops moving once it sits on the maximizing face
      if (moved <= 1e-8) {
        if (++stall >= 3) break;
      } else {
        stall = 0;
      }
      step = std::min(step * 2.0, kMaxStep);
    } else {
      step *= 0.5;
      if (step < 1e-14) break;
    }
  }

  z = project_feasible(p, std::move(z), kCyclesTight, kDriftTight, kFeasTight).z;
  out.obj = objective(p, z);
  PairMat probe{(z.x + p.g1).hermitian_part(), (z.y + p.g2).hermitian_part()};
  probe = project_feasible(p, std::move(probe), kCyclesTight, kDriftTight, kFeasTight).z;
  out.residual = pair_dist(probe, z);
  out.converged = out.residual <= cfg.tol;
  out.z = std::move(z);
  return out;
}

}  // namespace

OracleResult optimize(const CanonicalFrame& frame, double eta1, double eta2,
                      const OracleConfig& cfg) {
  const JointProblem p = make_problem(frame, eta1, eta2);
  const int restarts = std::max(cfg.restarts, 1);

  std::vector<RestartOutcome> outcomes(restarts);
  auto run_one = [&](int r) {
    PairMat start = r == 0 ? PairMat{CMatrix(p.n, p.n), CMatrix(p.n, p.n)}
                           : random_start(p, CounterRng::word_at(cfg.seed, 1000 + r));
    return run_restart(p, std::move(start), cfg);
  };
  if (cfg.parallel && restarts > 1) {
    std::vector<std::future<RestartOutcome>> futures;
    futures.reserve(restarts);
    for (int r = 0; r < restarts; ++r)
      futures.push_back(std::async(std::launch::async, run_one, r));
    for (int r = 0; r < restarts; ++r) outcomes[r] = futures[r].get();
  } else {
    for (int r = 0; r < restarts; ++r) outcomes[r] = run_one(r);
  }

  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (outcomes[r].obj > outcomes[best].obj) best = r;

  OracleResult res;
  res.q_num = 1.0 - outcomes[best].obj;
  res.alpha = (p.vb.adjoint() * outcomes[best].z.x * p.vb).hermitian_part();
  res.beta = (p.wb.adjoint() * outcomes[best].z.y * p.wb).hermitian_part();
  res.iterations = outcomes[best].iterations;
  res.converged = outcomes[best].converged;
  res.residual = outcomes[best].residual;
  res.best_restart = best;
  res.objectives.reserve(restarts);
  res.residuals.reserve(restarts);
  for (const RestartOutcome& o : outcomes) {
    res.objectives.push_back(o.obj);
    res.residuals.push_back(o.residual);
  }
  return res;
}

const OracleResult& require_converged(const OracleResult& res) {
  if (!res.converged) {
    throw Error(ErrorKind::NotConverged, "stationarity residual " + std::to_string(res.residual) +
                                             ", best feasible Q " + std::to_string(res.q_num));
  }
  return res;
}

OracleResult optimize(const DiscriminationInstance& inst, const OracleConfig& cfg) {
  const CanonicalFrame frame = build_frame(inst);
  return optimize(frame, inst.eta1, inst.eta2, cfg);
}

double FeasibilityReport::worst() const {
  double w = 0.0;
  w = std::max(w, -min_eig_pi0);
  w = std::max(w, -min_eig_pi1);
  w = std::max(w, -min_eig_pi2);
  w = std::max(w, max_eig_pi0 - 1.0);
  w = std::max(w, max_eig_pi1 - 1.0);
  w = std::max(w, max_eig_pi2 - 1.0);
  w = std::max(w, completeness_residual);
  w = std::max(w, kill1_residual);
  w = std::max(w, kill2_residual);
  return w;
}

FeasibilityReport feasibility_check(const DiscriminationInstance& inst, const Measurement& m) {
  FeasibilityReport rep;
  EigenDecomposition e0 = eigh(m.pi0);
  EigenDecomposition e1 = eigh(m.pi1);
  EigenDecomposition e2 = eigh(m.pi2);
  rep.min_eig_pi0 = e0.eigenvalues.front();
  rep.min_eig_pi1 = e1.eigenvalues.front();
  rep.min_eig_pi2 = e2.eigenvalues.front();
  rep.max_eig_pi0 = e0.eigenvalues.back();
  rep.max_eig_pi1 = e1.eigenvalues.back();
  rep.max_eig_pi2 = e2.eigenvalues.back();
  const CMatrix sum = m.pi0 + m.pi1 + m.pi2;
  rep.completeness_residual = (sum - CMatrix::identity(sum.rows())).frobenius_norm();
  rep.kill1_residual = (inst.rho1.mat * m.pi2).frobenius_norm();
  rep.kill2_residual = (inst.rho2.mat * m.pi1).frobenius_norm();
  return rep;
}

}  // namespace qdiscrim
