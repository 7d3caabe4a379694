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

#include <optional>

#include "holo/frames.hpp"

namespace holo {

/// Slow traversal of a parameter path: t = total_time * s on a uniform
/// grid of time_steps intervals.
struct Schedule {
  double total_time = 0.0;
  int time_steps = 0;
  ParameterPath path;
};

/// time_steps == 0 picks the default of about 32 steps per unit time
/// (200 T / 2 pi) with a floor of 1000.
Schedule make_schedule(ParameterPath path, double total_time, int time_steps = 0);

/// Integrates i dpsi/dt = H(lambda(t)) psi with per-step exact exponentials
/// of the midpoint-frozen Hamiltonian. Unconditionally norm preserving;
/// accuracy is limited by dt^2 commutator terms.
Vector propagate(const HamiltonianFamily& family, const Schedule& schedule,
                 const Vector& psi0);

/// Same stepper applied to several initial states at once (columns).
Matrix propagate_columns(const HamiltonianFamily& family, const Schedule& schedule,
                         const Matrix& columns);

struct OracleOptions {
  std::optional<Matrix> initial_frame;
  double leakage_budget = 1e-2;
  FrameOptions frame_options{};
  int workers = 0;
};

struct OracleResult {
  Matrix holonomy;           // rows index the initial frame vector; the
                             // dynamical phase has been divided out
  double leakage = 0.0;      // 1 - mean squared projection onto the frame
  double dynamical_phase = 0.0;  // integral of the cluster eigenvalue
  double total_time = 0.0;
  std::vector<double> row_leakage;
};

/// Propagates every frame vector of the selected cluster around the closed
/// schedule, removes exp(-i integral E dt), and projects back onto the
/// starting frame. The result converges to the Wilson loop as total_time
/// grows; leakage measures how adiabatic the run actually was.
OracleResult extract_holonomy(const HamiltonianFamily& family,
                              const Schedule& schedule,
                              const ClusterSelector& selector,
                              const OracleOptions& options = {});

}  // namespace holo
