// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qdiscrim/canonical.hpp"
#include "qdiscrim/error.hpp"
#include "qdiscrim/linalg.hpp"
#include "qdiscrim/similar.hpp"
#include "qdiscrim/states.hpp"
#include "support.hpp"

using namespace qdiscrim;

namespace {

// exp(A) by scaling and squaring on the plain Taylor series
CMatrix matrix_exp(const CMatrix& a) {
  const int squarings = 8;
  CMatrix x = a * (1.0 / std::pow(2.0, squarings));
  CMatrix term = CMatrix::identity(a.rows());
  CMatrix sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * x * (1.0 / static_cast<double>(k));
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace

TEST_CASE("generate: the rotation is the exponential of the block generator") {
  SimilarClassSpec spec;
  spec.d = 2;
  spec.r_mat = CMatrix::diagonal({0.45, 0.55});
  spec.thetas = {0.7, 0.3};
  spec.eta1 = 0.5;
  auto [inst, u] = generate(spec);

  CMatrix gen(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    gen(2 + i, i) = spec.thetas[i];
    gen(i, 2 + i) = -spec.thetas[i];
  }
  CHECK(max_abs_diff(u, matrix_exp(gen)) < 1e-10);
  CHECK(max_abs_diff(u.adjoint() * u, CMatrix::identity(4)) < 1e-12);
}

TEST_CASE("generate: second state is the rotated first state") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const SimilarClassSpec spec = random_spec(1 + seed % 3, 800 + seed);
    auto [inst, u] = generate(spec);
    CHECK(max_abs_diff(inst.rho2.mat, (u * inst.rho1.mat * u.adjoint()).hermitian_part()) <
          1e-12);
    CHECK(max_abs_diff(u.adjoint() * u, CMatrix::identity(2 * spec.d)) < 1e-12);
    // embedding puts the first state on the leading coordinates
    for (std::size_t i = 0; i < spec.d; ++i)
      for (std::size_t j = 0; j < spec.d; ++j)
        CHECK(std::abs(inst.rho1.mat(i, j) - spec.r_mat(i, j)) < 1e-15);
    CHECK(inst.rho1.mat(2 * spec.d - 1, 2 * spec.d - 1).real() == 0.0);
  }
}

TEST_CASE("generate: rotation carries each canonical direction onto its partner") {
  const SimilarClassSpec spec = random_spec(3, 42);
  auto [inst, u] = generate(spec);
  const CanonicalFrame f = build_frame(inst);
  for (std::size_t i = 0; i < f.d; ++i)
    for (std::size_t j = 0; j < f.d; ++j) {
      const cplx got = inner(f.r_basis.col(j), u * f.r_basis.col(i));
      const double want = (i == j) ? f.overlaps[i] : 0.0;
      CHECK(std::abs(got - want) < 1e-12);
    }
}

TEST_CASE("generate: named rejections for malformed specs") {
  SimilarClassSpec spec;
  spec.d = 2;
  spec.r_mat = CMatrix::diagonal({0.4, 0.6});
  spec.thetas = {0.3, 0.7};
  spec.eta1 = 0.5;

  {
    SimilarClassSpec bad = spec;
    bad.d = 0;
    bad.r_mat = CMatrix(0, 0);
    bad.thetas = {};
    CHECK_THROWS_AS(generate(bad), Error);
  }
  {
    SimilarClassSpec bad = spec;
    bad.thetas = {0.3};
    CHECK_THROWS_AS(generate(bad), Error);
  }
  {
    SimilarClassSpec bad = spec;
    bad.thetas = {0.3, 0.0};
    CHECK_THROWS_AS(generate(bad), Error);
  }
  {
    SimilarClassSpec bad = spec;
    bad.thetas = {0.3, std::numbers::pi / 2 + 0.1};
    CHECK_THROWS_AS(generate(bad), Error);
  }
  {
    SimilarClassSpec bad = spec;
    bad.r_mat = CMatrix::diagonal({0.4, 0.7});  // trace 1.1
    CHECK_THROWS_AS(generate(bad), Error);
  }
  {
    SimilarClassSpec bad = spec;
    bad.r_mat = CMatrix::diagonal({1.0, 0.0});  // rank deficient
    try {
      generate(bad);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadSpec);
    }
  }
  // a right angle is allowed: supports become orthogonal
  {
    SimilarClassSpec edge = spec;
    edge.thetas = {std::numbers::pi / 2, std::numbers::pi / 2};
    auto [inst, u] = generate(edge);
    CHECK(inst.standard_shape);
    const CanonicalFrame f = build_frame(inst);
    CHECK(f.overlaps[0] < 1e-10);
    CHECK(f.overlaps[1] < 1e-10);
  }
}

TEST_CASE("random_spec: deterministic in the seed and within bounds") {
  const SimilarClassSpec a = random_spec(3, 9);
  const SimilarClassSpec b = random_spec(3, 9);
  CHECK(max_abs_diff(a.r_mat, b.r_mat) == 0.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(a.thetas[i] == b.thetas[i]);
  CHECK(a.eta1 == b.eta1);

  const SimilarClassSpec c = random_spec(3, 10);
  CHECK(max_abs_diff(a.r_mat, c.r_mat) > 0.0);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SimilarClassSpec s = random_spec(1 + seed % 3, seed);
    CHECK(s.eta1 >= 0.05);
    CHECK(s.eta1 <= 0.95);
    for (double th : s.thetas) {
      CHECK(th >= 0.15);
      CHECK(th <= std::numbers::pi / 2 - 0.15);
    }
    CHECK(s.r_mat.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    auto [inst, u] = generate(s);
    CHECK(inst.standard_shape);
  }
}
