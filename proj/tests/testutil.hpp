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

#include <random>

#include "holo/numerics.hpp"

namespace holo::test {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo = 0.0, double hi = 1.0) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

inline Complex gaussian(std::mt19937_64& gen) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return Complex(dist(gen), dist(gen));
}

inline Matrix random_matrix(int n, std::mt19937_64& gen) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = gaussian(gen);
  return m;
}

inline Matrix random_hermitian(int n, std::mt19937_64& gen) {
  return hermitize(random_matrix(n, gen));
}

/// Haar-ish random unitary via QR with phase-fixed diagonal.
inline Matrix random_unitary(int n, std::mt19937_64& gen) {
  const Matrix m = random_matrix(n, gen);
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= (d == Complex(0.0)) ? 1.0 : d / std::abs(d);
  }
  return q;
}

}  // namespace holo::test
