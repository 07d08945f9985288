// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/sampler.hpp"

#include <cmath>
#include <string>

#include "qdiscrim/error.hpp"
#include "qdiscrim/rng.hpp"

namespace qdiscrim {

namespace {

// Born weights may come out of the assembled operators a hair negative;
// clip inside this band, reject beyond it.
constexpr double kClipTol = 1e-9;

struct OutcomeTable {
  // probs[state][outcome], rows normalized
  double probs[2][3];
};

OutcomeTable born_table(const DiscriminationInstance& inst, const Measurement& m) {
  OutcomeTable t{};
  const CMatrix* rhos[2] = {&inst.rho1.mat, &inst.rho2.mat};
  const CMatrix* pis[3] = {&m.pi0, &m.pi1, &m.pi2};
  for (int k = 0; k < 2; ++k) {
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      double p = ((*rhos[k]) * (*pis[j])).trace().real();
      if (p < -kClipTol) {
        throw Error(ErrorKind::InfeasibleMeasurement,
                    "outcome " + std::to_string(j) + " has weight " + std::to_string(p) +
                        " under state " + std::to_string(k + 1));
      }
      if (std::abs(p) <= kClipTol) p = 0.0;
      t.probs[k][j] = p;
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw Error(ErrorKind::InfeasibleMeasurement,
                  "outcome weights sum to " + std::to_string(sum) + " under state " +
                      std::to_string(k + 1));
    }
    for (int j = 0; j < 3; ++j) t.probs[k][j] /= sum;
  }
  return t;
}

void accumulate(std::array<std::array<std::uint64_t, 2>, 3>& counts, const OutcomeTable& t,
                double eta1, std::uint64_t first, std::uint64_t count, std::uint64_t seed) {
  for (std::uint64_t trial = first; trial < first + count; ++trial) {
    const double u_state = CounterRng::unit_at(seed, 2 * trial);
    const int state = u_state < eta1 ? 0 : 1;
    const double u_outcome = CounterRng::unit_at(seed, 2 * trial + 1);
    int outcome = 2;
    if (u_outcome < t.probs[state][0]) {
      outcome = 0;
    } else if (u_outcome < t.probs[state][0] + t.probs[state][1]) {
      outcome = 1;
    }
    ++counts[outcome][state];
  }
}

}  // namespace

std::array<std::array<std::uint64_t, 2>, 3> sample_range(const DiscriminationInstance& inst,
                                                         const Measurement& m, std::uint64_t first,
                                                         std::uint64_t count, std::uint64_t seed) {
  const OutcomeTable t = born_table(inst, m);
  std::array<std::array<std::uint64_t, 2>, 3> counts{};
  accumulate(counts, t, inst.eta1, first, count, seed);
  return counts;
}

SampleReport sample(const DiscriminationInstance& inst, const Measurement& m, std::uint64_t trials,
                    std::uint64_t seed) {
  const OutcomeTable t = born_table(inst, m);
  SampleReport rep;
  rep.trials = trials;
  accumulate(rep.counts, t, inst.eta1, 0, trials, seed);

  const double n = static_cast<double>(trials);
  const double fails = static_cast<double>(rep.counts[0][0] + rep.counts[0][1]);
  const double errors = static_cast<double>(rep.counts[1][1] + rep.counts[2][0]);
  rep.empirical_failure = trials == 0 ? 0.0 : fails / n;
  rep.empirical_error = trials == 0 ? 0.0 : errors / n;
  rep.analytic_failure = inst.eta1 * t.probs[0][0] + inst.eta2 * t.probs[1][0];
  rep.stderr_failure =
      trials == 0 ? 0.0 : std::sqrt(rep.empirical_failure * (1.0 - rep.empirical_failure) / n);
  rep.within_five_sigma =
      std::abs(rep.empirical_failure - rep.analytic_failure) <= 5.0 * rep.stderr_failure + 1e-9;
  return rep;
}

}  // namespace qdiscrim
