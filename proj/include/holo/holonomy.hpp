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

#include <cstdint>
#include <optional>

#include "holo/families.hpp"
#include "holo/frames.hpp"

namespace holo {

// Loop quantities follow one orientation convention: positive phi runs
// counterclockwise around +z, phases enter as exp(i*gamma), and the Bloch
// aligned level has A_phi = -(1 - cos theta)/2, so a full circle gives
// gamma = -pi(1 - cos theta).
//
// Holonomy matrices are stored with ROWS indexing the initial frame
// vector: entry (l, n) is the amplitude on frame vector n of the loop
// image of frame vector l. Under a constant re-gauge W of the frame the
// matrix is conjugated by conj(W); its spectrum is gauge-invariant.

struct SolidAngle {
  double value = 0.0;  // steradians
};

/// Solid angle of a cone of polar angle theta: 2*pi*(1 - cos theta).
SolidAngle cone_solid_angle(double theta);

struct LoopOptions {
  int steps = 4000;
  std::optional<Matrix> initial_frame;  // gauge seed at the base point
  FrameOptions frame_options{};
  double defect_tolerance = 1e-8;
  int workers = 0;
};

/// Geometric phase of a non-degenerate level around a closed loop,
/// accumulated segment by segment in the family's analytic gauge (raw
/// value, not reduced mod 2*pi). Second-order accurate in 1/steps.
double abelian_phase(const HamiltonianFamily& family, const ParameterPath& path,
                     const ClusterSelector& selector,
                     const LoopOptions& options = {});

struct Holonomy {
  Matrix matrix;  // N x N, rows index the initial frame vector
  int steps = 0;
  double unitarity_defect = 0.0;        // before the final projection
  double min_transport_overlap = 1.0;   // smallest overlap singular value seen
  std::string path_label;
};

/// Path-ordered loop holonomy of a degenerate cluster. Each segment
/// contributes the unitary polar factor of the frame overlap, which equals
/// exp(i * A . dlambda) evaluated at the segment midpoint up to O(1/M^3)
/// per segment; the product converges at O(1/M^2) and is exactly unitary.
/// In the Abelian case the result equals exp(i * abelian_phase).
Holonomy wilson_loop(const HamiltonianFamily& family, const ParameterPath& path,
                     const ClusterSelector& selector,
                     const LoopOptions& options = {});

/// Enclosed solid angle of a loop theta(phi) winding once in phi:
/// integral of (1 - cos theta) d phi. The midpoint rule is spectrally
/// accurate for smooth periodic profiles.
double loop_solid_angle(const std::function<double(double)>& theta_of_phi,
                        int samples = 1 << 13);

/// Cone wobbled by a low-order Fourier series in phi with seeded
/// coefficients. With renormalize set, a constant theta offset is solved
/// for (by bisection) so the enclosed solid angle matches the unperturbed
/// cone at theta0.
struct PerturbedCone {
  ParameterPath path;
  std::function<double(double)> theta_of_phi;
  double theta_offset = 0.0;
  double raw_solid_angle = 0.0;      // before renormalization
  double solid_angle = 0.0;          // after
  std::vector<double> cos_coefficients;
  std::vector<double> sin_coefficients;
};

PerturbedCone perturbed_cone_path(double theta0, std::uint64_t seed,
                                  double amplitude = 0.1, int harmonics = 3,
                                  bool renormalize = true);

}  // namespace holo
