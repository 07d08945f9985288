// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "qdiscrim/measurement.hpp"
#include "qdiscrim/states.hpp"

namespace qdiscrim {

struct SampleReport {
  std::uint64_t trials = 0;
  // counts[outcome][state]: outcome 0 inconclusive, 1 and 2 the
  // detections; state 0 and 1 the prepared hypothesis
  std::array<std::array<std::uint64_t, 2>, 3> counts{};
  double empirical_failure = 0.0;
  double empirical_error = 0.0;  // conclusive but wrong, must stay zero
  double stderr_failure = 0.0;   // binomial
  double analytic_failure = 0.0;
  bool within_five_sigma = false;
};

// Monte Carlo run of the measurement: draw the prepared state from the
// priors, then the outcome from its Born distribution. Trial t uses
// counter words 2t and 2t + 1 of `seed`, so counts over any partition
// of [0, trials) add up to the full run.
SampleReport sample(const DiscriminationInstance& inst, const Measurement& m, std::uint64_t trials,
                    std::uint64_t seed);

// counts for trials [first, first + count), for partition tests and
// sharded runs
std::array<std::array<std::uint64_t, 2>, 3> sample_range(const DiscriminationInstance& inst,
                                                         const Measurement& m, std::uint64_t first,
                                                         std::uint64_t count, std::uint64_t seed);

}  // namespace qdiscrim
