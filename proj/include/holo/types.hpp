// Copyright 2026 The holonomy-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace holo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// hbar = 1 throughout; every frequency is an angular frequency in
// rad/(unit time).

enum class ErrorCode {
  NonHermitianInput,
  NonAntiHermitianInput,
  DimensionMismatch,
  ArityMismatch,
  NonHermitianEvaluation,
  DegeneracyMismatch,
  GapCollapse,
  GaugeDiscontinuity,
  UnitarityLoss,
  OpenPath,
  OutOfRange,
  NormDrift,
  StepUnstable,
  ExcessLeakage,
  UndefinedCone,
  NoInteriorMaximum,
  ConfigInvalid,
  ScenarioFailed,
  IoFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace holo
