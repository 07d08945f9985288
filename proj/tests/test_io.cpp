// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "qdiscrim/error.hpp"
#include "qdiscrim/io.hpp"
#include "support.hpp"

using namespace qdiscrim;
using nlohmann::json;

namespace {

json minimal_direct() {
  json j;
  j["v"] = 1;
  j["dim"] = 2;
  j["rho1"] = json::array({json::array({json::array({1.0, 0.0}), json::array({0.0, 0.0})}),
                           json::array({json::array({0.0, 0.0}), json::array({0.0, 0.0})})});
  j["rho2"] = json::array({json::array({json::array({0.25, 0.0}), json::array({0.25, -0.1})}),
                           json::array({json::array({0.25, 0.1}), json::array({0.75, 0.0})})});
  j["eta1"] = 0.4;
  return j;
}

}  // namespace

TEST_CASE("io: matrices survive a dump and parse round trip") {
  CounterRng rng(314);
  const CMatrix m = testsupport::random_matrix(3, 4, rng);
  const json j = json::parse(matrix_to_json(m).dump());
  const CMatrix back = matrix_from_json(j);
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 4);
  CHECK(max_abs_diff(m, back) == 0.0);
}

TEST_CASE("io: direct instance files round trip through json") {
  const InstanceFile file = parse_instance_json(minimal_direct());
  CHECK_FALSE(file.has_similar);
  CHECK(file.eta1 == 0.4);
  CHECK(file.rho1(0, 0) == cplx(1.0, 0.0));
  CHECK(file.rho2(0, 1) == cplx(0.25, -0.1));

  const InstanceFile again = parse_instance_json(json::parse(instance_to_json(file).dump()));
  CHECK(max_abs_diff(again.rho1, file.rho1) == 0.0);
  CHECK(max_abs_diff(again.rho2, file.rho2) == 0.0);
  CHECK(again.eta1 == file.eta1);
}

TEST_CASE("io: similar instance files round trip and realize") {
  const SimilarClassSpec spec = random_spec(2, 77);
  InstanceFile file;
  file.has_similar = true;
  file.similar = spec;
  const InstanceFile again = parse_instance_json(json::parse(instance_to_json(file).dump()));
  REQUIRE(again.has_similar);
  CHECK(again.similar.d == spec.d);
  CHECK(again.similar.eta1 == spec.eta1);
  CHECK(max_abs_diff(again.similar.r_mat, spec.r_mat) == 0.0);
  REQUIRE(again.similar.thetas.size() == spec.thetas.size());
  for (std::size_t i = 0; i < spec.thetas.size(); ++i)
    CHECK(again.similar.thetas[i] == spec.thetas[i]);

  const DiscriminationInstance a = realize(file);
  const DiscriminationInstance b = generate(spec).first;
  CHECK(max_abs_diff(a.rho1.mat, b.rho1.mat) == 0.0);
  CHECK(max_abs_diff(a.rho2.mat, b.rho2.mat) == 0.0);
}

TEST_CASE("io: schema violations are rejected by name") {
  auto expect_badfile = [](json j, const char* needle) {
    try {
      parse_instance_json(j);
      FAIL_CHECK("expected a rejection mentioning " << needle);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadFile);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_badfile(json::array(), "object");

  json j = minimal_direct();
  j.erase("v");
  expect_badfile(j, "\"v\"");

  j = minimal_direct();
  j["v"] = 2;
  expect_badfile(j, "version");

  j = minimal_direct();
  j["similar"] = json::object();
  expect_badfile(j, "not both");

  j = minimal_direct();
  j.erase("dim");
  expect_badfile(j, "\"dim\"");

  j = minimal_direct();
  j["dim"] = 3;
  expect_badfile(j, "shapes");

  j = minimal_direct();
  j.erase("eta1");
  expect_badfile(j, "\"eta1\"");

  j = minimal_direct();
  j["rho1"][0][1] = json::array({1.0});
  expect_badfile(j, "[re, im]");

  j = minimal_direct();
  j["rho1"][1] = json::array({json::array({0.0, 0.0})});
  expect_badfile(j, "length");

  json s;
  s["v"] = 1;
  s["similar"] = {{"d", 1}, {"thetas", 0.3}, {"eta1", 0.5},
                  {"r_mat", json::array({json::array({json::array({1.0, 0.0})})})}};
  expect_badfile(s, "\"thetas\"");
}

TEST_CASE("io: files load from disk and bad files are named") {
  const std::string path = "qdiscrim_io_test.json";
  {
    std::ofstream out(path);
    out << instance_to_json(parse_instance_json(minimal_direct())).dump(2);
  }
  const InstanceFile file = load_instance_file(path);
  CHECK(file.eta1 == 0.4);
  const DiscriminationInstance inst = realize(file);
  CHECK(inst.rho1.dim == 2);
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(load_instance_file("qdiscrim_io_nope.json"), doctest::Contains("cannot open"),
                       Error);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_WITH_AS(load_instance_file(path), doctest::Contains("parse error"), Error);
  std::remove(path.c_str());
}

TEST_CASE("io: frames round trip exactly") {
  const DiscriminationInstance inst = generate(random_spec(2, 88)).first;
  const CanonicalFrame frame = build_frame(inst);
  const CanonicalFrame back = frame_from_json(json::parse(frame_to_json(frame).dump()));
  CHECK(back.d == frame.d);
  CHECK(back.dim == frame.dim);
  CHECK(max_abs_diff(back.r_basis, frame.r_basis) == 0.0);
  CHECK(max_abs_diff(back.w_basis, frame.w_basis) == 0.0);
  CHECK(max_abs_diff(back.r_mat, frame.r_mat) == 0.0);
  for (std::size_t i = 0; i < frame.d; ++i) {
    CHECK(back.overlaps[i] == frame.overlaps[i]);
    CHECK(back.sines[i] == frame.sines[i]);
  }
}

TEST_CASE("io: solve reports serialize with open intervals as null") {
  // orthogonal pure pair: the attainability interval is [0, inf)
  CMatrix s1(2, 2), s2(2, 2);
  s1(0, 0) = 1.0;
  s2(1, 1) = 1.0;
  const DiscriminationInstance inst =
      make_instance(validate_density(s1), validate_density(s2), 0.5);
  const SolveReport rep = solve(inst);
  const json j = report_to_json(rep);
  CHECK(j["q_opt"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j["method"] == "closed_form");
  CHECK(j["necessary_interval"][1].is_null());
  CHECK(j["measurement"]["pi1"].is_array());

  const SampleReport sr = sample(inst, rep.measurement, 50, 3);
  const json sj = sample_to_json(sr, 3);
  CHECK(sj["trials"] == 50);
  CHECK(sj["seed"] == 3);
  REQUIRE(sj["counts"].size() == 3);
  CHECK(sj["counts"][0][0].get<std::uint64_t>() + sj["counts"][0][1].get<std::uint64_t>() == 0);
  CHECK(sj["within_five_sigma"].get<bool>());
}
