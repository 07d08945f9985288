// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared generators and independent reference evaluators for the test
// suites. The reference formulas here are written directly from the
// per-direction branch expressions, on purpose not reusing the plan /
// assembly code under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qdiscrim/canonical.hpp"
#include "qdiscrim/linalg.hpp"
#include "qdiscrim/rng.hpp"
#include "qdiscrim/similar.hpp"
#include "qdiscrim/states.hpp"

namespace testsupport {

using qdiscrim::CMatrix;
using qdiscrim::CounterRng;
using qdiscrim::cplx;
using qdiscrim::DiscriminationInstance;

inline CMatrix random_matrix(std::size_t rows, std::size_t cols, CounterRng& rng) {
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return m;
}

inline CMatrix random_hermitian(std::size_t n, CounterRng& rng) {
  return random_matrix(n, n, rng).hermitian_part();
}

inline CMatrix random_psd(std::size_t n, CounterRng& rng) {
  const CMatrix g = random_matrix(n, n, rng);
  return (g * g.adjoint()).hermitian_part();
}

// full rank, eigenvalues bounded away from zero
inline CMatrix random_density(std::size_t n, CounterRng& rng) {
  CMatrix r = random_psd(n, rng);
  r += (0.05 * static_cast<double>(n)) * CMatrix::identity(n);
  r *= 1.0 / r.trace().real();
  return r.hermitian_part();
}

inline CMatrix random_unitary(std::size_t n, CounterRng& rng) {
  return qdiscrim::eigh(random_hermitian(n, rng)).eigenvectors;
}

// A standard-shape pair assembled from explicit principal-angle data:
// rho1 = E a E' on the first d axes, rho2 = M b M' with partner columns
// m_i = c_i e_i + sqrt(1 - c_i^2) e_{d+i}. An optional ambient rotation
// hides the construction; extra_dims pads with unused directions.
inline DiscriminationInstance instance_from_blocks(const std::vector<double>& c, const CMatrix& a,
                                                   const CMatrix& b, double eta1,
                                                   std::uint64_t rotate_seed = 0,
                                                   std::size_t extra_dims = 0) {
  const std::size_t d = c.size();
  const std::size_t n = 2 * d + extra_dims;
  CMatrix rho1(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho1(i, j) = a(i, j);
  CMatrix ms(n, d);
  for (std::size_t i = 0; i < d; ++i) {
    ms(i, i) = c[i];
    ms(d + i, i) = std::sqrt(1.0 - c[i] * c[i]);
  }
  CMatrix rho2 = (ms * b * ms.adjoint()).hermitian_part();
  if (rotate_seed != 0) {
    CounterRng rng(rotate_seed);
    const CMatrix u = random_unitary(n, rng);
    rho1 = (u * rho1 * u.adjoint()).hermitian_part();
    rho2 = (u * rho2 * u.adjoint()).hermitian_part();
  }
  return make_instance(qdiscrim::validate_density(rho1), qdiscrim::validate_density(rho2), eta1);
}

// Diagonal-canonical data: ascending overlaps with clear gaps, diagonal
// weights with r visibly different from s.
struct DiagonalData {
  std::vector<double> c;
  std::vector<double> r;
  std::vector<double> s;
  double eta1 = 0.5;
};

inline std::vector<double> random_simplex(std::size_t d, CounterRng& rng, double floor_weight) {
  std::vector<double> w(d);
  double sum = 0.0;
  for (double& x : w) {
    x = rng.uniform(floor_weight, 1.0);
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

inline DiagonalData random_diagonal_data(std::size_t d, std::uint64_t seed) {
  CounterRng rng(seed);
  DiagonalData data;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> c(d);
    for (double& x : c) x = rng.uniform(0.05, 0.95);
    std::sort(c.begin(), c.end());
    bool spaced = true;
    for (std::size_t i = 1; i < d; ++i)
      if (c[i] - c[i - 1] < 0.03) spaced = false;
    if (!spaced) continue;
    data.c = std::move(c);
    break;
  }
  data.r = random_simplex(d, rng, 0.15);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    data.s = random_simplex(d, rng, 0.15);
    double diff = 0.0;
    for (std::size_t i = 0; i < d; ++i) diff = std::max(diff, std::abs(data.r[i] - data.s[i]));
    if (diff > 0.03 || d == 1) break;
  }
  data.eta1 = rng.uniform(0.1, 0.9);
  return data;
}

inline DiscriminationInstance diagonal_instance(const DiagonalData& data,
                                                std::uint64_t rotate_seed = 0,
                                                std::size_t extra_dims = 0) {
  return instance_from_blocks(data.c, CMatrix::diagonal(data.r), CMatrix::diagonal(data.s),
                              data.eta1, rotate_seed, extra_dims);
}

// Independent per-direction evaluator for diagonal-canonical data:
//   interior        2 sqrt(eta1 eta2 r_i s_i) C_i
//   ratio below     eta1 r_i C_i^2 + eta2 s_i
//   ratio above     eta1 r_i + eta2 s_i C_i^2
inline double reference_q_diagonal(const DiagonalData& data) {
  const double eta1 = data.eta1;
  const double eta2 = 1.0 - eta1;
  const double ratio = std::sqrt(eta2 / eta1);
  double q = 0.0;
  for (std::size_t i = 0; i < data.c.size(); ++i) {
    const double c = data.c[i];
    const double r = data.r[i];
    const double s = data.s[i];
    const double t = std::sqrt(r / s);
    if (c > 0.0 && ratio < c * t) {
      q += eta1 * r * c * c + eta2 * s;
    } else if (c > 0.0 && ratio > t / c) {
      q += eta1 * r + eta2 * s * c * c;
    } else {
      q += 2.0 * std::sqrt(eta1 * eta2 * r * s) * c;
    }
  }
  return q;
}

// same branches specialized to shared weights (r = s)
inline double reference_q_shared(const std::vector<double>& c, const std::vector<double>& r,
                                 double eta1) {
  DiagonalData data;
  data.c = c;
  data.r = r;
  data.s = r;
  data.eta1 = eta1;
  return reference_q_diagonal(data);
}

inline double reference_q_shared(const qdiscrim::SimilarClassSpec& spec) {
  std::vector<double> c(spec.d);
  std::vector<double> r(spec.d);
  // ascending overlaps, weights following their directions
  std::vector<std::size_t> order(spec.d);
  for (std::size_t i = 0; i < spec.d; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::cos(spec.thetas[i]) < std::cos(spec.thetas[j]);
  });
  for (std::size_t k = 0; k < spec.d; ++k) {
    c[k] = std::cos(spec.thetas[order[k]]);
    r[k] = spec.r_mat(order[k], order[k]).real();
  }
  return reference_q_shared(c, r, spec.eta1);
}

}  // namespace testsupport
