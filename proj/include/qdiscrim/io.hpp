// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "json.hpp"
#include "qdiscrim/oracle.hpp"
#include "qdiscrim/sampler.hpp"
#include "qdiscrim/similar.hpp"
#include "qdiscrim/solver.hpp"

namespace qdiscrim {

// On-disk instance description, schema version 1. Either the two
// density matrices are given directly (with "dim", "rho1", "rho2",
// "eta1") or a "similar" block holds a SimilarClassSpec. Complex
// entries are [re, im] pairs.
struct InstanceFile {
  int version = 1;
  bool has_similar = false;
  SimilarClassSpec similar;
  CMatrix rho1;
  CMatrix rho2;
  double eta1 = 0.5;
};

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

InstanceFile parse_instance_json(const nlohmann::json& j);
InstanceFile load_instance_file(const std::string& path);
nlohmann::json instance_to_json(const InstanceFile& file);

// Build the live instance the file describes.
DiscriminationInstance realize(const InstanceFile& file);

nlohmann::json frame_to_json(const CanonicalFrame& frame);
CanonicalFrame frame_from_json(const nlohmann::json& j);
nlohmann::json measurement_to_json(const Measurement& m);
nlohmann::json report_to_json(const SolveReport& rep);
nlohmann::json sample_to_json(const SampleReport& rep, std::uint64_t seed);
nlohmann::json similar_to_json(const SimilarClassSpec& spec);

}  // namespace qdiscrim
