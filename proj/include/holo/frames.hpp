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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holo/numerics.hpp"
#include "holo/types.hpp"

namespace holo {

/// Piecewise-smooth control curve s in [0,1] -> parameter point.
///
/// Angle-valued coordinates may declare a period; the closure test then
/// compares coordinates modulo that period, so a phi coordinate may run
/// 0 -> 2*pi*winding without wrapping.
struct ParameterPath {
  std::function<RealVector(double)> position;
  std::function<RealVector(double)> velocity;  // d lambda / ds; optional
  bool closed = false;
  std::string label;
  RealVector periods;  // per coordinate; 0 or empty = not periodic

  RealVector velocity_at(double s) const;  // analytic or central difference
};

/// Circle at fixed polar angle: s -> (theta, 2*pi*winding*s).
ParameterPath phi_circle_path(double theta, double winding = 1.0,
                              std::string label = "");

/// Degenerate loop that stays at one point.
ParameterPath constant_path(RealVector point, std::string label = "");

/// Max coordinate distance between path ends, taking periods into account.
double path_closure_gap(const ParameterPath& path);

/// Checks the closed flag against the actual endpoints (tolerance 1e-10
/// per coordinate) and, when a Lipschitz bound is given, that adjacent
/// samples at the stated resolution stay below bound * resolution.
void validate_path(const ParameterPath& path, int arity,
                   double lipschitz_bound = 0.0, double resolution = 1e-4);

/// Eigenvalue cluster addressed by target value, never by index.
struct ClusterSelector {
  double target = 0.0;
  int multiplicity = 1;
};

struct FrameOptions {
  double cluster_gap_rel = 1e-8;  // eigenvalues this close belong together
  double min_gap_rel = 1e-6;      // smaller cluster separation is a collapse
  double min_overlap = 1e-6;      // smaller overlap singular value is a
                                  // gauge discontinuity
};

/// Orthonormal basis of one eigenvalue cluster at one parameter point.
struct Frame {
  RealVector point;
  Matrix vectors;  // dim x N, orthonormal columns
  double energy = 0.0;
  ClusterSelector selector;
};

/// Map from a parameter point to a Hermitian matrix. analytic_frames, when
/// present, must return a smooth single-valued orthonormal gauge for the
/// requested cluster; it is what makes raw (unwrapped) phase integrals
/// well defined.
struct HamiltonianFamily {
  std::string name;
  int dim = 0;
  int arity = 0;
  std::function<Matrix(const RealVector&)> evaluate;
  std::function<Matrix(const RealVector&, const ClusterSelector&)>
      analytic_frames;

  bool has_analytic_frames() const { return static_cast<bool>(analytic_frames); }
};

/// Evaluates the family and enforces arity, finiteness and Hermiticity.
Matrix eval(const HamiltonianFamily& family, const RealVector& point);

/// Finds the eigenvalue cluster nearest selector.target, checks its
/// multiplicity and its separation from the rest of the spectrum, and
/// returns an orthonormal frame. With a reference the frame is rotated by
/// the unitary polar factor of raw^dag * ref, the Procrustes solution that
/// brings it as close to the reference as the subspace allows.
Frame select_frame(const HamiltonianFamily& family, const RealVector& point,
                   const ClusterSelector& selector,
                   const Frame* reference = nullptr,
                   const FrameOptions& options = {});

/// A smooth gauge: point -> orthonormal frame matrix.
using FrameField = std::function<Matrix(const RealVector&)>;

/// The family's own analytic gauge for the given cluster.
FrameField analytic_frame_field(const HamiltonianFamily& family,
                                const ClusterSelector& selector);

/// Eigensolver frames aligned to one fixed reference frame. Smooth only
/// while the subspace keeps full-rank overlap with the reference; beyond
/// that select_frame raises GaugeDiscontinuity.
FrameField reference_aligned_field(const HamiltonianFamily& family,
                                   const ClusterSelector& selector, Frame reference,
                                   const FrameOptions& options = {});

/// Gauge potential component A_k = i F^dag (d_k F), central difference with
/// the field's own gauge, Hermitized. Error is O(step^2).
Matrix connection_at(const FrameField& field, const RealVector& point,
                     int coordinate, double step = 1e-5);

struct ConnectionSample {
  RealVector point;
  std::vector<Matrix> components;  // one per coordinate
};

ConnectionSample connection_sample(const FrameField& field,
                                   const RealVector& point, double step = 1e-5);

/// Registry entry for the built-in families (consumed by the CLI).
struct FamilyInfo {
  std::string name;
  std::string parameters;
  std::string coordinates;
};

const std::vector<FamilyInfo>& family_registry();

}  // namespace holo
