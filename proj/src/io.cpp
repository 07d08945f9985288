// SPDX-License-Identifier: Apache-2.0
#include "qdiscrim/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "qdiscrim/error.hpp"

namespace qdiscrim {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw Error(ErrorKind::BadFile, where + " must be a number");
  return j.get<double>();
}

// json has no literal for infinity; an open endpoint dumps as null
json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

const json& require_key(const json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::BadFile, where + " is missing \"" + key + "\"");
  return *it;
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::BadFile, "matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw Error(ErrorKind::BadFile, "matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw Error(ErrorKind::BadFile, "matrix rows must all have length " + std::to_string(cols));
    }
    for (std::size_t k = 0; k < cols; ++k) {
      const json& e = j[i][k];
      if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorKind::BadFile, "matrix entries must be [re, im] pairs");
      }
      m(i, k) = cplx(require_number(e[0], "matrix entry"), require_number(e[1], "matrix entry"));
    }
  }
  return m;
}

InstanceFile parse_instance_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::BadFile, "instance file must be a JSON object");
  const json& v = require_key(j, "v", "instance file");
  if (!v.is_number_integer() || v.get<int>() != 1) {
    throw Error(ErrorKind::BadFile, "unsupported schema version");
  }

  InstanceFile file;
  const bool has_similar = j.contains("similar");
  const bool has_direct = j.contains("rho1") || j.contains("rho2");
  if (has_similar && has_direct) {
    throw Error(ErrorKind::BadFile, "give either \"similar\" or explicit matrices, not both");
  }

  if (has_similar) {
    const json& s = j["similar"];
    if (!s.is_object()) throw Error(ErrorKind::BadFile, "\"similar\" must be an object");
    file.has_similar = true;
    const json& d = require_key(s, "d", "similar block");
    if (!d.is_number_integer() || d.get<int>() <= 0) {
      throw Error(ErrorKind::BadFile, "\"d\" must be a positive integer");
    }
    file.similar.d = d.get<std::size_t>();
    file.similar.r_mat = matrix_from_json(require_key(s, "r_mat", "similar block"));
    const json& thetas = require_key(s, "thetas", "similar block");
    if (!thetas.is_array()) throw Error(ErrorKind::BadFile, "\"thetas\" must be an array");
    for (const json& th : thetas) file.similar.thetas.push_back(require_number(th, "theta"));
    file.similar.eta1 = require_number(require_key(s, "eta1", "similar block"), "eta1");
    file.eta1 = file.similar.eta1;
    return file;
  }

  const json& dim = require_key(j, "dim", "instance file");
  if (!dim.is_number_integer() || dim.get<int>() <= 0) {
    throw Error(ErrorKind::BadFile, "\"dim\" must be a positive integer");
  }
  file.rho1 = matrix_from_json(require_key(j, "rho1", "instance file"));
  file.rho2 = matrix_from_json(require_key(j, "rho2", "instance file"));
  const std::size_t n = dim.get<std::size_t>();
  if (file.rho1.rows() != n || file.rho1.cols() != n || file.rho2.rows() != n ||
      file.rho2.cols() != n) {
    throw Error(ErrorKind::BadFile, "matrix shapes disagree with \"dim\"");
  }
  file.eta1 = require_number(require_key(j, "eta1", "instance file"), "eta1");
  return file;
}

InstanceFile load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadFile, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::BadFile, std::string("parse error in ") + path + ": " + e.what());
  }
  return parse_instance_json(j);
}

json instance_to_json(const InstanceFile& file) {
  json j;
  j["v"] = 1;
  if (file.has_similar) {
    j["similar"] = similar_to_json(file.similar);
    return j;
  }
  j["dim"] = file.rho1.rows();
  j["rho1"] = matrix_to_json(file.rho1);
  j["rho2"] = matrix_to_json(file.rho2);
  j["eta1"] = file.eta1;
  return j;
}

json similar_to_json(const SimilarClassSpec& spec) {
  json s;
  s["d"] = spec.d;
  s["r_mat"] = matrix_to_json(spec.r_mat);
  s["thetas"] = spec.thetas;
  s["eta1"] = spec.eta1;
  return s;
}

DiscriminationInstance realize(const InstanceFile& file) {
  if (file.has_similar) return generate(file.similar).first;
  return make_instance(validate_density(file.rho1), validate_density(file.rho2), file.eta1);
}

json frame_to_json(const CanonicalFrame& frame) {
  json j;
  j["d"] = frame.d;
  j["dim"] = frame.dim;
  j["overlaps"] = frame.overlaps;
  j["sines"] = frame.sines;
  j["r_basis"] = matrix_to_json(frame.r_basis);
  j["s_basis"] = matrix_to_json(frame.s_basis);
  j["v_basis"] = matrix_to_json(frame.v_basis);
  j["w_basis"] = matrix_to_json(frame.w_basis);
  j["r_mat"] = matrix_to_json(frame.r_mat);
  j["s_mat"] = matrix_to_json(frame.s_mat);
  return j;
}

CanonicalFrame frame_from_json(const json& j) {
  CanonicalFrame frame;
  frame.d = require_key(j, "d", "frame").get<std::size_t>();
  frame.dim = require_key(j, "dim", "frame").get<std::size_t>();
  frame.overlaps = require_key(j, "overlaps", "frame").get<std::vector<double>>();
  frame.sines = require_key(j, "sines", "frame").get<std::vector<double>>();
  frame.r_basis = matrix_from_json(require_key(j, "r_basis", "frame"));
  frame.s_basis = matrix_from_json(require_key(j, "s_basis", "frame"));
  frame.v_basis = matrix_from_json(require_key(j, "v_basis", "frame"));
  frame.w_basis = matrix_from_json(require_key(j, "w_basis", "frame"));
  frame.r_mat = matrix_from_json(require_key(j, "r_mat", "frame"));
  frame.s_mat = matrix_from_json(require_key(j, "s_mat", "frame"));
  return frame;
}

json measurement_to_json(const Measurement& m) {
  json j;
  j["pi0"] = matrix_to_json(m.pi0);
  j["pi1"] = matrix_to_json(m.pi1);
  j["pi2"] = matrix_to_json(m.pi2);
  j["alpha"] = matrix_to_json(m.alpha);
  j["beta"] = matrix_to_json(m.beta);
  return j;
}

json report_to_json(const SolveReport& rep) {
  json j;
  j["q_opt"] = rep.q_opt;
  j["fidelity"] = rep.fidelity;
  j["bound"] = rep.bound;
  j["saturated"] = rep.saturated;
  j["region_index"] = rep.region_index;
  j["necessary_interval"] = json::array({rep.necessary_lo, finite_or_null(rep.necessary_hi)});
  j["achieved_interval"] = json::array({rep.achieved_lo, finite_or_null(rep.achieved_hi)});
  j["method"] = rep.method == SolveMethod::ClosedForm ? "closed_form" : "numerical";
  j["oracle_checked"] = rep.oracle_checked;
  if (rep.oracle_checked) {
    j["oracle_gap"] = rep.oracle_gap;
    j["oracle_converged"] = rep.oracle_converged;
  }
  j["overlaps"] = rep.frame.overlaps;
  j["measurement"] = measurement_to_json(rep.measurement);
  return j;
}

json sample_to_json(const SampleReport& rep, std::uint64_t seed) {
  json j;
  j["trials"] = rep.trials;
  j["seed"] = seed;
  json counts = json::array();
  for (const auto& row : rep.counts) counts.push_back(json::array({row[0], row[1]}));
  j["counts"] = counts;
  j["empirical_failure"] = rep.empirical_failure;
  j["empirical_error"] = rep.empirical_error;
  j["stderr_failure"] = rep.stderr_failure;
  j["analytic_failure"] = rep.analytic_failure;
  j["within_five_sigma"] = rep.within_five_sigma;
  return j;
}

}  // namespace qdiscrim
