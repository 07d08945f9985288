// SPDX-License-Identifier: Apache-2.0
// Python bindings: matrices cross the boundary as nested [row][col]
// lists of complex numbers, reports as plain dicts.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <vector>

#include "qdiscrim/canonical.hpp"
#include "qdiscrim/error.hpp"
#include "qdiscrim/fidelity.hpp"
#include "qdiscrim/sampler.hpp"
#include "qdiscrim/similar.hpp"
#include "qdiscrim/solver.hpp"

namespace py = pybind11;
using namespace qdiscrim;

namespace {

using Rows = std::vector<std::vector<std::complex<double>>>;

CMatrix to_cmatrix(const Rows& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw Error(ErrorKind::NonSquare, "ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Rows to_rows(const CMatrix& m) {
  Rows rows(m.rows(), std::vector<std::complex<double>>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

DiscriminationInstance instance_of(const Rows& rho1, const Rows& rho2, double eta1) {
  return make_instance(validate_density(to_cmatrix(rho1)),
                       validate_density(to_cmatrix(rho2)), eta1);
}

py::object interval_entry(double value) {
  if (!std::isfinite(value)) return py::none();
  return py::float_(value);
}

py::dict report_dict(const SolveReport& rep) {
  py::dict d;
  d["q_opt"] = rep.q_opt;
  d["fidelity"] = rep.fidelity;
  d["bound"] = rep.bound;
  d["saturated"] = rep.saturated;
  d["region_index"] = rep.region_index;
  d["method"] = rep.method == SolveMethod::ClosedForm ? "closed_form" : "numerical";
  d["necessary_interval"] =
      py::make_tuple(interval_entry(rep.necessary_lo), interval_entry(rep.necessary_hi));
  d["achieved_interval"] =
      py::make_tuple(interval_entry(rep.achieved_lo), interval_entry(rep.achieved_hi));
  d["alpha"] = to_rows(rep.measurement.alpha);
  d["beta"] = to_rows(rep.measurement.beta);
  d["pi0"] = to_rows(rep.measurement.pi0);
  d["pi1"] = to_rows(rep.measurement.pi1);
  d["pi2"] = to_rows(rep.measurement.pi2);
  return d;
}

py::dict solve_py(const Rows& rho1, const Rows& rho2, double eta1) {
  return report_dict(solve(instance_of(rho1, rho2, eta1)));
}

double fidelity_py(const Rows& rho1, const Rows& rho2) {
  return fidelity_general(validate_density(to_cmatrix(rho1)),
                          validate_density(to_cmatrix(rho2)));
}

std::vector<double> overlaps_py(const Rows& rho1, const Rows& rho2, double eta1) {
  return build_frame(instance_of(rho1, rho2, eta1)).overlaps;
}

py::dict similar_py(const std::vector<double>& thetas, const Rows& r_mat, double eta1) {
  SimilarClassSpec spec;
  spec.d = thetas.size();
  spec.thetas = thetas;
  spec.r_mat = to_cmatrix(r_mat);
  spec.eta1 = eta1;
  const auto [inst, s_mat] = generate(spec);
  py::dict d;
  d["rho1"] = to_rows(inst.rho1.mat);
  d["rho2"] = to_rows(inst.rho2.mat);
  d["eta1"] = inst.eta1;
  d["s_mat"] = to_rows(s_mat);
  return d;
}

py::dict sample_py(const Rows& rho1, const Rows& rho2, double eta1, std::uint64_t trials,
                   std::uint64_t seed) {
  const DiscriminationInstance inst = instance_of(rho1, rho2, eta1);
  const SolveReport rep = solve(inst);
  const SampleReport sr = sample(inst, rep.measurement, trials, seed);
  py::dict d;
  d["counts"] = sr.counts;
  d["empirical_failure"] = sr.empirical_failure;
  d["empirical_error"] = sr.empirical_error;
  d["analytic_failure"] = sr.analytic_failure;
  d["stderr_failure"] = sr.stderr_failure;
  d["within_five_sigma"] = sr.within_five_sigma;
  d["q_opt"] = rep.q_opt;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "optimal unambiguous discrimination of two mixed states";
  py::register_exception<Error>(m, "DiscriminationError");
  m.def("solve", &solve_py, py::arg("rho1"), py::arg("rho2"), py::arg("eta1"),
        "Optimal inconclusive probability and measurement for two density "
        "matrices given as nested lists; returns a report dict.");
  m.def("fidelity", &fidelity_py, py::arg("rho1"), py::arg("rho2"),
        "Fidelity F = tr sqrt(sqrt(rho2) rho1 sqrt(rho2)).");
  m.def("canonical_overlaps", &overlaps_py, py::arg("rho1"), py::arg("rho2"),
        py::arg("eta1") = 0.5,
        "Ascending canonical overlaps C_i of a standard-shape pair.");
  m.def("similar_states", &similar_py, py::arg("thetas"), py::arg("r_mat"),
        py::arg("eta1"),
        "Build a similar-class pair from per-direction angles and the "
        "weight matrix of the first state.");
  m.def("sample", &sample_py, py::arg("rho1"), py::arg("rho2"), py::arg("eta1"),
        py::arg("trials"), py::arg("seed") = 1,
        "Solve, then simulate the optimal measurement; counts[k][i] is how "
        "often outcome k fired when state i+1 was sent.");
  m.attr("__version__") = "0.1.0";
}
