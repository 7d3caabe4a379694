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

#include "holo/types.hpp"

namespace holo {

/// Largest entry magnitude, the matrix max-norm used for all tolerances.
double max_abs(const Matrix& m);

/// (M + M^dagger) / 2
Matrix hermitize(const Matrix& m);

/// Max-norm of U^dagger U - I.
double unitarity_defect(const Matrix& u);

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;          // columns, orthonormal
};

/// Hermitian eigendecomposition. The input is symmetrized before solving;
/// asymmetry beyond 1e-12 (relative to the max-norm) is rejected.
EigenDecomposition eigh(const Matrix& h);

/// exp(A) for anti-Hermitian A, via the spectral decomposition of iA.
/// The result is unitary to roundoff regardless of the spectrum.
Matrix unitary_exp(const Matrix& a);

enum class DistanceMode { exact, up_to_global_phase };

/// Max-norm distance between two equally sized matrices. In
/// up_to_global_phase mode V is first rotated by the phase of tr(V^dag U).
double unitary_distance(const Matrix& u, const Matrix& v, DistanceMode mode);

/// Unitary factor of the polar decomposition of M (via SVD). When
/// min_singular is given it receives the smallest singular value of M,
/// which measures how close M is to losing rank.
Matrix polar_unitary(const Matrix& m, double* min_singular = nullptr);

}  // namespace holo
