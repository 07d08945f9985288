// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/similar.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdiscrim/error.hpp"
#include "qdiscrim/rng.hpp"

namespace qdiscrim {

std::pair<DiscriminationInstance, CMatrix> generate(const SimilarClassSpec& spec) {
  if (spec.d == 0) throw Error(ErrorKind::BadSpec, "d must be positive");
  if (spec.r_mat.rows() != spec.d || spec.r_mat.cols() != spec.d) {
    throw Error(ErrorKind::BadSpec, "r_mat must be " + std::to_string(spec.d) + "x" +
                                        std::to_string(spec.d));
  }
  if (spec.thetas.size() != spec.d) {
    throw Error(ErrorKind::BadSpec, "need exactly d rotation angles");
  }
  for (double th : spec.thetas) {
    if (!(th > 0.0) || th > std::numbers::pi / 2 + 1e-12) {
      throw Error(ErrorKind::BadSpec, "angle " + std::to_string(th) + " outside (0, pi/2]");
    }
  }

  const std::size_t d = spec.d;
  const std::size_t n = 2 * d;

  CMatrix rho1(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho1(i, j) = spec.r_mat(i, j);

  // direct sum of plane rotations in the (i, d + i) coordinate pairs
  CMatrix u = CMatrix::identity(n);
  for (std::size_t i = 0; i < d; ++i) {
    const double c = std::cos(spec.thetas[i]);
    const double s = std::sin(spec.thetas[i]);
    u(i, i) = c;
    u(i, d + i) = -s;
    u(d + i, i) = s;
    u(d + i, d + i) = c;
  }

  const CMatrix rho2 = (u * rho1 * u.adjoint()).hermitian_part();

  DensityOperator r1;
  DensityOperator r2;
  try {
    r1 = validate_density(rho1);
    r2 = validate_density(rho2);
  } catch (const Error& e) {
    throw Error(ErrorKind::BadSpec, std::string("r_mat is not a density matrix (") + e.what() + ")");
  }
  if (r1.rank != d) {
    throw Error(ErrorKind::BadSpec, "r_mat must have full rank " + std::to_string(d) +
                                        ", got " + std::to_string(r1.rank));
  }
  return {make_instance(std::move(r1), std::move(r2), spec.eta1), u};
}

SimilarClassSpec random_spec(std::size_t d, std::uint64_t seed) {
  CounterRng rng(seed);
  SimilarClassSpec spec;
  spec.d = d;

  // G G' / tr, generically full rank with sizable coherences
  CMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      g(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  CMatrix r = (g * g.adjoint()).hermitian_part();
  // keep the spectrum away from zero so the rank is unambiguous
  r += 0.05 * static_cast<double>(d) * CMatrix::identity(d);
  r *= 1.0 / r.trace().real();
  spec.r_mat = r.hermitian_part();

  spec.thetas.resize(d);
  for (std::size_t i = 0; i < d; ++i) spec.thetas[i] = rng.uniform(0.15, std::numbers::pi / 2 - 0.15);
  spec.eta1 = rng.uniform(0.05, 0.95);
  return spec;
}

}  // namespace qdiscrim
