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

#include "holo/numerics.hpp"

namespace holo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NonAntiHermitianInput: return "NonAntiHermitianInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonHermitianEvaluation: return "NonHermitianEvaluation";
    case ErrorCode::DegeneracyMismatch: return "DegeneracyMismatch";
    case ErrorCode::GapCollapse: return "GapCollapse";
    case ErrorCode::GaugeDiscontinuity: return "GaugeDiscontinuity";
    case ErrorCode::UnitarityLoss: return "UnitarityLoss";
    case ErrorCode::OpenPath: return "OpenPath";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NormDrift: return "NormDrift";
    case ErrorCode::StepUnstable: return "StepUnstable";
    case ErrorCode::ExcessLeakage: return "ExcessLeakage";
    case ErrorCode::UndefinedCone: return "UndefinedCone";
    case ErrorCode::NoInteriorMaximum: return "NoInteriorMaximum";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ScenarioFailed: return "ScenarioFailed";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

double unitarity_defect(const Matrix& u) {
  return max_abs(u.adjoint() * u - Matrix::Identity(u.cols(), u.cols()));
}

EigenDecomposition eigh(const Matrix& h) {
  if (h.rows() != h.cols() || h.rows() < 1)
    fail(ErrorCode::DimensionMismatch, "eigh expects a square matrix");
  if (!h.allFinite())
    fail(ErrorCode::NonHermitianInput, "matrix has non-finite entries");
  const double scale = std::max(1.0, max_abs(h));
  const double asym = max_abs(h - h.adjoint());
  if (asym > 1e-12 * scale)
    fail(ErrorCode::NonHermitianInput,
         "asymmetry " + std::to_string(asym) + " exceeds tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h));
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::StepUnstable, "eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix unitary_exp(const Matrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorCode::DimensionMismatch, "unitary_exp expects a square matrix");
  if (!a.allFinite())
    fail(ErrorCode::NonAntiHermitianInput, "matrix has non-finite entries");
  const double scale = std::max(1.0, max_abs(a));
  if (max_abs(a + a.adjoint()) > 1e-12 * scale)
    fail(ErrorCode::NonAntiHermitianInput,
         "matrix is not anti-Hermitian within tolerance");
  // A = -iH with H = iA Hermitian, so exp(A) = V exp(-i diag) V^dag.
  EigenDecomposition ed = eigh(Complex(0.0, 1.0) * a);
  Vector phases(ed.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases[k] = std::exp(Complex(0.0, -ed.eigenvalues[k]));
  return ed.eigenvectors * phases.asDiagonal() * ed.eigenvectors.adjoint();
}

double unitary_distance(const Matrix& u, const Matrix& v, DistanceMode mode) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    fail(ErrorCode::DimensionMismatch, "unitary_distance expects equal shapes");
  if (mode == DistanceMode::exact) return max_abs(u - v);
  const Complex overlap = (v.adjoint() * u).trace();
  const double phi = (overlap == Complex(0.0, 0.0)) ? 0.0 : std::arg(overlap);
  return max_abs(u - std::exp(Complex(0.0, phi)) * v);
}

Matrix polar_unitary(const Matrix& m, double* min_singular) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (min_singular) {
    *min_singular =
        svd.singularValues().size() ? svd.singularValues().minCoeff() : 0.0;
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace holo
