// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>

#include "doctest.h"
#include "qdiscrim/canonical.hpp"
#include "qdiscrim/fidelity.hpp"
#include "qdiscrim/linalg.hpp"
#include "qdiscrim/similar.hpp"
#include "qdiscrim/states.hpp"
#include "support.hpp"

using namespace qdiscrim;

TEST_CASE("fidelity_general: identical, orthogonal and pure pairs") {
  DensityOperator a = validate_density(CMatrix::diagonal({0.3, 0.7}));
  CHECK(fidelity_general(a, a) == doctest::Approx(1.0).epsilon(1e-10));

  DensityOperator e0 = validate_density(CMatrix::diagonal({1.0, 0.0}));
  DensityOperator e1 = validate_density(CMatrix::diagonal({0.0, 1.0}));
  CHECK(fidelity_general(e0, e1) == doctest::Approx(0.0).epsilon(1e-10));

  // pure states: the fidelity is the magnitude of the inner product
  const double c = 0.7;
  CMatrix psi = CMatrix::column_vector({c, std::sqrt(1.0 - c * c)});
  DensityOperator p = validate_density(outer(psi, psi));
  CHECK(fidelity_general(e0, p) == doctest::Approx(0.7).epsilon(1e-10));
}

TEST_CASE("fidelity_general: symmetric and unitary invariant") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CounterRng rng(300 + seed);
    DensityOperator r1 = validate_density(testsupport::random_density(4, rng));
    DensityOperator r2 = validate_density(testsupport::random_density(4, rng));
    const double f12 = fidelity_general(r1, r2);
    const double f21 = fidelity_general(r2, r1);
    CHECK(f12 == doctest::Approx(f21).epsilon(1e-9));
    CHECK(f12 >= 0.0);
    CHECK(f12 <= 1.0 + 1e-10);

    const CMatrix u = testsupport::random_unitary(4, rng);
    DensityOperator q1 = validate_density((u * r1.mat * u.adjoint()).hermitian_part());
    DensityOperator q2 = validate_density((u * r2.mat * u.adjoint()).hermitian_part());
    CHECK(fidelity_general(q1, q2) == doctest::Approx(f12).epsilon(1e-9));
  }
}

TEST_CASE("fidelity routes agree on diagonal-canonical pairs") {
  testsupport::DiagonalData data;
  data.c = {0.5, 0.9};
  data.r = {0.3, 0.7};
  data.s = {0.6, 0.4};
  data.eta1 = 0.5;
  const DiscriminationInstance inst = testsupport::diagonal_instance(data, 12);
  const CanonicalFrame frame = build_frame(inst);
  const FidelityReport rep = fidelity_report(inst, frame);

  const double expected = 0.5 * std::sqrt(0.18) + 0.9 * std::sqrt(0.28);
  CHECK(rep.f_diagonal_form == doctest::Approx(expected).epsilon(1e-10));
  CHECK(rep.f_general == doctest::Approx(expected).epsilon(1e-9));
  CHECK(rep.closed_form_applicable);
  CHECK_FALSE(rep.class_form_valid);
  CHECK(rep.bound == doctest::Approx(expected).epsilon(1e-9));  // equal priors
}

TEST_CASE("fidelity routes agree for every diagonal instance") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const testsupport::DiagonalData data = testsupport::random_diagonal_data(d, 70 * d + seed);
      const DiscriminationInstance inst = testsupport::diagonal_instance(data, seed);
      const CanonicalFrame frame = build_frame(inst);
      const FidelityReport rep = fidelity_report(inst, frame);
      CHECK(rep.closed_form_applicable);
      double expected = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        expected += data.c[i] * std::sqrt(data.r[i] * data.s[i]);
      CHECK(rep.f_general == doctest::Approx(expected).epsilon(1e-8));
    }
  }
}

TEST_CASE("class form matches the general route for block-rotation pairs") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const SimilarClassSpec spec = random_spec(1 + seed % 3, 500 + seed);
    auto [inst, u] = generate(spec);
    const CanonicalFrame frame = build_frame(inst);
    const FidelityReport rep = fidelity_report(inst, frame);
    CHECK(rep.class_form_valid);
    CHECK(rep.closed_form_applicable);
    double class_sum = 0.0;
    for (std::size_t i = 0; i < frame.d; ++i)
      class_sum += frame.overlaps[i] * frame.r_mat(i, i).real();
    CHECK(rep.f_class_form == doctest::Approx(class_sum).epsilon(1e-12));
    CHECK(rep.f_general == doctest::Approx(class_sum).epsilon(1e-8));
    CHECK(rep.f_diagonal_form == doctest::Approx(class_sum).epsilon(1e-8));
  }
}

TEST_CASE("generic instances are flagged outside the diagonal closed form") {
  // non-commuting canonical matrices: distinct overlaps with an r_mat
  // carrying off-diagonal weight while s_mat stays diagonal
  CMatrix a = CMatrix::from_rows({{0.5, 0.2}, {0.2, 0.5}});
  CMatrix b = CMatrix::diagonal({0.35, 0.65});
  const DiscriminationInstance inst =
      testsupport::instance_from_blocks({0.4, 0.8}, a, b, 0.5, 21);
  const CanonicalFrame frame = build_frame(inst);
  const FidelityReport rep = fidelity_report(inst, frame);
  CHECK_FALSE(rep.closed_form_applicable);
  CHECK_FALSE(rep.class_form_valid);
  CHECK(std::abs(rep.f_general - rep.f_diagonal_form) > 1e-8);
}

TEST_CASE("fidelity bound and attainability interval") {
  testsupport::DiagonalData data;
  data.c = {0.6};
  data.r = {1.0};
  data.s = {1.0};
  data.eta1 = 0.2;
  const DiscriminationInstance inst = testsupport::diagonal_instance(data);
  const CanonicalFrame frame = build_frame(inst);
  const FidelityReport rep = fidelity_report(inst, frame);
  CHECK(rep.f_general == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(rep.bound == doctest::Approx(2.0 * std::sqrt(0.2 * 0.8) * 0.6).epsilon(1e-10));
  // tr(P2 rho1) = tr(P1 rho2) = C^2 for a single pure pair
  CHECK(rep.interval_lo == doctest::Approx(0.36 / 0.6).epsilon(1e-10));
  CHECK(rep.interval_hi == doctest::Approx(0.6 / 0.36).epsilon(1e-10));
}

TEST_CASE("attainability interval endpoints for orthogonal supports") {
  testsupport::DiagonalData data;
  data.c = {0.0};
  data.r = {1.0};
  data.s = {1.0};
  data.eta1 = 0.5;
  const DiscriminationInstance inst = testsupport::diagonal_instance(data);
  const CanonicalFrame frame = build_frame(inst);
  const FidelityReport rep = fidelity_report(inst, frame);
  CHECK(rep.f_general < 1e-12);
  CHECK(rep.bound < 1e-12);
  CHECK(rep.interval_lo == 0.0);
  CHECK(std::isinf(rep.interval_hi));
}
