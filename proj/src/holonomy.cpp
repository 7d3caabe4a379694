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

#include "holo/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "holo/parallel.hpp"

namespace holo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_closed(const ParameterPath& path) {
  if (!path.closed)
    fail(ErrorCode::OpenPath, "loop quantities need a closed path ('" +
                                  path.label + "' is open)");
  if (path_closure_gap(path) > 1e-10)
    fail(ErrorCode::OpenPath,
         "path endpoints differ by more than 1e-10 ('" + path.label + "')");
}

void require_steps(int steps) {
  if (steps < 4) fail(ErrorCode::OutOfRange, "loop discretization too coarse");
}

// Frame at the loop base point: caller-supplied gauge seed, else the
// family's analytic gauge, else the raw eigensolver frame.
Matrix base_frame(const HamiltonianFamily& family, const RealVector& point,
                  const ClusterSelector& selector, const LoopOptions& options) {
  Matrix f0;
  if (options.initial_frame) {
    f0 = *options.initial_frame;
    if (f0.rows() != family.dim || f0.cols() != selector.multiplicity)
      fail(ErrorCode::DimensionMismatch, "initial frame has the wrong shape");
    if (unitarity_defect(f0) > 1e-10)
      fail(ErrorCode::GaugeDiscontinuity, "initial frame is not orthonormal");
    const Matrix h = eval(family, point);
    const Frame probe =
        select_frame(family, point, selector, nullptr, options.frame_options);
    const double scale = std::max(1.0, max_abs(h));
    if (max_abs(h * f0 - probe.energy * f0) > 1e-8 * scale)
      fail(ErrorCode::DegeneracyMismatch,
           "initial frame does not span the selected cluster");
  } else if (family.has_analytic_frames()) {
    f0 = family.analytic_frames(point, selector);
  } else {
    f0 = select_frame(family, point, selector, nullptr, options.frame_options)
             .vectors;
  }
  return f0;
}

}  // namespace

SolidAngle cone_solid_angle(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    fail(ErrorCode::OutOfRange, "cone angle must lie in [0, pi]");
  return SolidAngle{kTwoPi * (1.0 - std::cos(theta))};
}

double abelian_phase(const HamiltonianFamily& family, const ParameterPath& path,
                     const ClusterSelector& selector, const LoopOptions& options) {
  if (selector.multiplicity != 1)
    fail(ErrorCode::DegeneracyMismatch,
         "the Abelian phase is defined for a non-degenerate level");
  require_closed(path);
  require_steps(options.steps);
  if (!family.has_analytic_frames())
    fail(ErrorCode::GaugeDiscontinuity,
         "raw accumulated phases need the family's analytic gauge");

  const int m = options.steps;
  // Eigensolver frames pinned to the analytic gauge at every sample; the
  // select_frame call also audits multiplicity and gap point by point.
  std::vector<Vector> frames(m);
  parallel_for(m, options.workers, [&](int i) {
    const RealVector point = path.position(static_cast<double>(i) / m);
    const Matrix ref = family.analytic_frames(point, selector);
    const Frame raw =
        select_frame(family, point, selector, nullptr, options.frame_options);
    const Complex overlap = (raw.vectors.col(0).adjoint() * ref.col(0))(0, 0);
    if (std::abs(overlap) < options.frame_options.min_overlap)
      fail(ErrorCode::GaugeDiscontinuity,
           "eigenframe has no overlap with the analytic gauge");
    frames[i] = raw.vectors.col(0) * (overlap / std::abs(overlap));
  });

  double gamma = 0.0;
  for (int i = 1; i <= m; ++i) {
    const Vector& prev = frames[i - 1];
    const Vector& cur = frames[i % m];  // close on the first frame
    const Complex z = prev.dot(cur);
    if (std::abs(z) < options.frame_options.min_overlap)
      fail(ErrorCode::GaugeDiscontinuity,
           "loop discretization too coarse: adjacent frames nearly orthogonal");
    gamma += -std::arg(z);
  }
  return gamma;
}

Holonomy wilson_loop(const HamiltonianFamily& family, const ParameterPath& path,
                     const ClusterSelector& selector, const LoopOptions& options) {
  require_closed(path);
  require_steps(options.steps);
  const int m = options.steps;

  const RealVector start = path.position(0.0);
  const Matrix f0 = base_frame(family, start, selector, options);

  std::vector<Matrix> raw(m);  // raw cluster frames at s_i, i in [1, m)
  parallel_for(m - 1, options.workers, [&](int idx) {
    const int i = idx + 1;
    const RealVector point = path.position(static_cast<double>(i) / m);
    raw[i] = select_frame(family, point, selector, nullptr, options.frame_options)
                 .vectors;
  });

  // Discrete parallel transport: each segment multiplies in the unitary
  // polar factor of the frame overlap, i.e. exp(i A . dlambda) sampled at
  // the segment midpoint. The loop closes on the base frame itself.
  Matrix g = f0;
  double min_overlap_seen = 1.0;
  for (int i = 1; i <= m; ++i) {
    const Matrix& target = (i == m) ? f0 : raw[i];
    double smin = 0.0;
    const Matrix w = polar_unitary(target.adjoint() * g, &smin);
    min_overlap_seen = std::min(min_overlap_seen, smin);
    if (smin < options.frame_options.min_overlap)
      fail(ErrorCode::GaugeDiscontinuity,
           "transport overlap lost rank at step " + std::to_string(i));
    g = target * w;
  }

  Matrix closure = f0.adjoint() * g;
  const double defect = unitarity_defect(closure);
  if (defect > 1e-10) closure = polar_unitary(closure);
  if (unitarity_defect(closure) > options.defect_tolerance)
    fail(ErrorCode::UnitarityLoss,
         "holonomy unitarity defect " + std::to_string(defect) +
             " exceeds tolerance");

  Holonomy result;
  result.matrix = closure.transpose();  // rows index the initial frame vector
  result.steps = m;
  result.unitarity_defect = defect;
  result.min_transport_overlap = min_overlap_seen;
  result.path_label = path.label;
  return result;
}

double loop_solid_angle(const std::function<double(double)>& theta_of_phi,
                        int samples) {
  if (samples < 8) fail(ErrorCode::OutOfRange, "too few quadrature samples");
  double sum = 0.0;
  const double dphi = kTwoPi / samples;
  for (int i = 0; i < samples; ++i) {
    const double phi = (i + 0.5) * dphi;
    sum += 1.0 - std::cos(theta_of_phi(phi));
  }
  return sum * dphi;
}

PerturbedCone perturbed_cone_path(double theta0, std::uint64_t seed,
                                  double amplitude, int harmonics,
                                  bool renormalize) {
  if (!(theta0 > 0.0 && theta0 < std::numbers::pi))
    fail(ErrorCode::OutOfRange, "cone angle must lie strictly inside (0, pi)");
  if (harmonics < 1 || amplitude < 0.0)
    fail(ErrorCode::OutOfRange, "invalid perturbation parameters");

  // Deterministic uniform draws straight from the generator bits, so the
  // perturbation is identical across platforms for a given seed.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  PerturbedCone cone;
  for (int k = 1; k <= harmonics; ++k) {
    cone.cos_coefficients.push_back(amplitude * (2.0 * uniform() - 1.0) / k);
    cone.sin_coefficients.push_back(amplitude * (2.0 * uniform() - 1.0) / k);
  }

  auto theta_fn = [theta0, cone](double phi, double offset) {
    double theta = theta0 + offset;
    for (size_t k = 0; k < cone.cos_coefficients.size(); ++k) {
      theta += cone.cos_coefficients[k] * std::cos((k + 1) * phi) +
               cone.sin_coefficients[k] * std::sin((k + 1) * phi);
    }
    return theta;
  };

  cone.raw_solid_angle =
      loop_solid_angle([&](double phi) { return theta_fn(phi, 0.0); });

  double offset = 0.0;
  if (renormalize) {
    const double target = cone_solid_angle(theta0).value;
    double lo = -1.0, hi = 1.0;
    auto mismatch = [&](double d) {
      return loop_solid_angle([&](double phi) { return theta_fn(phi, d); }) -
             target;
    };
    if (mismatch(lo) > 0.0 || mismatch(hi) < 0.0)
      fail(ErrorCode::OutOfRange, "solid-angle renormalization lost its bracket");
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (mismatch(mid) > 0.0 ? hi : lo) = mid;
    }
    offset = 0.5 * (lo + hi);
  }
  cone.theta_offset = offset;
  cone.theta_of_phi = [theta_fn, offset](double phi) {
    return theta_fn(phi, offset);
  };
  cone.solid_angle = loop_solid_angle(cone.theta_of_phi);

  // Keep the wobble safely away from the poles, where the frame gauge
  // degenerates.
  for (int i = 0; i <= 256; ++i) {
    const double theta = cone.theta_of_phi(kTwoPi * i / 256.0);
    if (theta < 0.02 || theta > std::numbers::pi - 0.02)
      fail(ErrorCode::OutOfRange, "perturbed cone reaches a pole");
  }

  ParameterPath path;
  auto theta_of_phi = cone.theta_of_phi;
  path.position = [theta_of_phi](double s) {
    RealVector p(2);
    const double phi = kTwoPi * s;
    p << theta_of_phi(phi), phi;
    return p;
  };
  path.closed = true;
  path.periods = RealVector::Zero(2);
  path.periods[1] = kTwoPi;
  path.label = "perturbed-cone seed=" + std::to_string(seed);
  cone.path = std::move(path);
  return cone;
}

}  // namespace holo
