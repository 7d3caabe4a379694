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

#include <map>
#include <string>
#include <vector>

#include "holo/holonomy.hpp"
#include "holo/oracle.hpp"

namespace holo {

/// Qubit under a rotating drive tone.
struct RabiDrive {
  double omega0 = 0.0;  // qubit transition frequency
  double omega = 0.0;   // drive frequency
  double omega1 = 0.0;  // drive amplitude

  void validate() const;
};

/// Polar angle of the effective field axis in the rotating frame:
/// cos(theta) = (omega0 - omega) / sqrt((omega0 - omega)^2 + omega1^2).
double cone_angle(const RabiDrive& drive);

enum class Route { closed_form, wilson, oracle };

const char* route_name(Route route);

struct GateOptions {
  int wilson_steps = 4000;
  double oracle_time = 1000.0;
  int oracle_steps = 0;  // 0 = schedule default
  double leakage_budget = 1e-2;
  int workers = 0;
};

/// Synthesized gate plus the numbers needed to judge it.
struct GateReport {
  Matrix achieved;
  Matrix target;
  double distance = 0.0;  // up to a global phase
  Route route = Route::closed_form;
  std::map<std::string, double> phases;
  std::map<std::string, double> diagnostics;
  std::vector<std::string> notes;
  bool basis_mismatch = false;
};

/// Conical loop phase gate. The aligned/anti-aligned levels pick up
/// opposite geometric phases -/+ pi(1 - cos theta) per loop, so the gate
/// is diag(1, e^{i alpha}) with alpha = 2 pi (1 - cos theta) * loops up to
/// a global phase.
GateReport phase_gate(const RabiDrive& drive, int loops, Route route,
                      const GateOptions& options = {});

/// The four static levels, labeled, plus the conditional a transitions.
struct TwoSpinLevels {
  double e_uu, e_ud, e_du, e_dd;
  double omega_plus;   // a transition with b up:   omega_a + pi j
  double omega_minus;  // a transition with b down: omega_a - pi j
};

TwoSpinLevels two_spin_levels(const TwoSpinSystem& system);

/// Conditional geometric phases of spin a for the two b states.
struct ConditionalPhases {
  double cos_plus, cos_minus;      // cone cosines for b up / b down
  double gamma_plus, gamma_minus;  // a-up branch phases
  double delta_gamma;              // gamma_plus - gamma_minus
  double phi_uu, phi_ud, phi_du, phi_dd;
  double beta;  // phi_uu - phi_ud - phi_du + phi_dd = 2 pi (cos+ - cos-)
};

ConditionalPhases conditional_phases(const TwoSpinSystem& system,
                                     const DriveTone& drive);

/// Amplitude at which |delta_gamma| is stationary. Found by a coarse log
/// scan bracketing an interior maximum, refined by golden section;
/// NoInteriorMaximum when the scan is monotone (e.g. a drive centered
/// between the two transitions, or j == 0).
struct OptimalAmplitude {
  double omega1_star = 0.0;
  double delta_gamma_max = 0.0;
};

OptimalAmplitude optimal_amplitude(const TwoSpinSystem& system, double omega);

/// Conditional-phase gate on the driven two-spin system, reported as
/// local phase gates times a pure conditional phase beta on the uu (=11)
/// state.
GateReport cphase_gate(const TwoSpinSystem& system, const DriveTone& drive,
                       Route route, const GateOptions& options = {});

struct TripodParams {
  double coupling = 1.0;  // B
  double theta = 0.0;
  double phi = 0.0;

  double omega0() const;
  double omega1() const;
  double omega_a() const;
  double gap() const { return coupling; }  // energy splitting of the
                                           // bright levels, not a solid angle
};

Matrix tripod_hamiltonian(const TripodParams& params);

/// Dark-state pair as columns [chi1 chi2].
Matrix dark_states(double theta, double phi);

/// Rotation gate in the dark-state basis from one phi circle at fixed
/// theta_hold: angle gamma = 2 pi cos(theta_hold). gamma = pi/4
/// (cos theta = 1/8) realizes a Hadamard up to a fixed basis relabeling,
/// which the report states explicitly instead of absorbing.
GateReport hadamard_gate(double theta_hold, Route route,
                         const GateOptions& options = {});

/// [[cos g, -sin g], [sin g, cos g]]
Matrix rotation_matrix(double gamma);

/// (1/sqrt2) [[1, 1], [1, -1]]
Matrix hadamard_matrix();

/// Unsigned rotation angle from the eigenvalue phases of a 2x2 unitary;
/// invariant under any constant re-gauging of the frame.
double rotation_angle(const Matrix& u);

}  // namespace holo
