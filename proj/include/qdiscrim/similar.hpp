// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qdiscrim/states.hpp"

namespace qdiscrim {

// Recipe for a pair of rank-d states in dimension 2d related by a
// block rotation: rho2 = U rho1 U' with U a direct sum of d plane
// rotations by angles theta_i. The pair then shares one canonical
// matrix (s_mat = r_mat) and has overlaps cos(theta_i).
struct SimilarClassSpec {
  std::size_t d = 0;
  CMatrix r_mat;               // d x d density matrix of the first state
  std::vector<double> thetas;  // each in (0, pi/2]
  double eta1 = 0.5;
};

// Returns the embedded instance and the rotation that links the two
// states. rho1 lives on the first d coordinates; rotation i mixes
// coordinates i and d + i.
std::pair<DiscriminationInstance, CMatrix> generate(const SimilarClassSpec& spec);

// Deterministic in (d, seed): a generic complex density matrix and
// angles bounded away from both 0 and pi/2, priors in [0.05, 0.95].
SimilarClassSpec random_spec(std::size_t d, std::uint64_t seed);

}  // namespace qdiscrim
