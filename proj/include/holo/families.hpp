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

#include <array>

#include "holo/frames.hpp"

namespace holo {

// Built-in families. Conventions shared by all of them:
//  * spin basis order (uu, ud, du, dd), first factor = spin a, up = bit 1;
//  * positive phi traverses counterclockwise around +z;
//  * driven systems are expressed in the frame co-rotating with the drive
//    tone, where the slow loop coordinate is the drive phase phi.

/// Single qubit in a field of fixed magnitude; coordinates (theta, phi).
/// H = (field/2) * n(theta, phi) . sigma. The aligned eigenstate at +field/2
/// is cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct BlochParams {
  double field = 1.0;
};

HamiltonianFamily bloch_family(const BlochParams& params = {});

/// Two spin-1/2 nuclei with scalar coupling j: the interaction enters as
/// 2*pi*j * S_az x S_bz, shifting the a transition to omega_a +/- pi*j
/// depending on the b state.
struct TwoSpinSystem {
  double omega_a = 0.0;
  double omega_b = 0.0;
  double j = 0.0;

  double pi_j() const;
  void validate() const;  // requires omega_a > omega_b
};

/// Rotating drive tone applied to spin a.
struct DriveTone {
  double omega = 0.0;
  double omega1 = 0.0;

  void validate() const;  // requires omega1 >= 0
};

/// Static two-spin Hamiltonian; constant (arity 0, coordinates ignored).
HamiltonianFamily two_spin_family(const TwoSpinSystem& system);

/// Two-spin system plus the drive tone on spin a, in the co-rotating
/// frame; single coordinate phi (the drive phase).
HamiltonianFamily driven_two_spin_family(const TwoSpinSystem& system,
                                         const DriveTone& drive);

/// Level bookkeeping for the driven two-spin family.
struct DrivenTwoSpinLevel {
  bool a_aligned;    // spin a follows (+) or opposes (-) its cone axis
  bool b_up;
  double energy;     // rotating-frame eigenvalue
  double cos_cone;   // cone angle of the effective a field for this b state
};

std::array<DrivenTwoSpinLevel, 4> driven_two_spin_levels(
    const TwoSpinSystem& system, const DriveTone& drive);

/// Four-level tripod: qubit states |0>, |1>, ancilla |a>, excited |b>,
/// couplings (omega0, omega1, omega_a) = B (sin t cos p, sin t sin p, cos t).
/// Spectrum is {-B, 0, 0, +B}; coordinates (theta, phi).
HamiltonianFamily tripod_family(double coupling = 1.0);

/// The two zero-eigenvalue (dark) states as columns [chi1 chi2]:
/// chi1 = sin(phi)|0> - cos(phi)|1>,
/// chi2 = cos(theta)cos(phi)|0> + cos(theta)sin(phi)|1> - sin(theta)|a>.
Matrix tripod_dark_frame(double theta, double phi);

}  // namespace holo
