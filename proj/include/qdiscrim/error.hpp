// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qdiscrim {

// Every way an operation can reject its input, named so callers can
// branch on the condition instead of parsing message text.
enum class ErrorKind {
  NonSquare,
  NonHermitian,
  NotPsd,
  BadTrace,
  DimensionMismatch,
  DegeneratePrior,
  NotStandardShape,
  DegenerateOverlap,
  ClosedFormNotApplicable,
  Pi0NotPsd,
  InfeasibleMeasurement,
  NotConverged,
  BadSpec,
  BadFile,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qdiscrim
