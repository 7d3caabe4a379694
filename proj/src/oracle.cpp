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

#include "holo/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "holo/parallel.hpp"

namespace holo {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix step_propagator(const HamiltonianFamily& family, const ParameterPath& path,
                       double s, double dt) {
  const Matrix h = eval(family, path.position(s));
  const EigenDecomposition ed = eigh(h);
  Vector phases(ed.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases[k] = std::exp(-kI * ed.eigenvalues[k] * dt);
  return ed.eigenvectors * phases.asDiagonal() * ed.eigenvectors.adjoint();
}

}  // namespace

Schedule make_schedule(ParameterPath path, double total_time, int time_steps) {
  if (!(total_time > 0.0))
    fail(ErrorCode::OutOfRange, "schedule total_time must be positive");
  int steps = time_steps;
  if (steps == 0) {
    steps = static_cast<int>(
        std::ceil(200.0 * total_time / (2.0 * std::numbers::pi)));
  }
  steps = std::max(steps, 1000);
  return Schedule{total_time, steps, std::move(path)};
}

Matrix propagate_columns(const HamiltonianFamily& family, const Schedule& schedule,
                         const Matrix& columns) {
  if (schedule.time_steps < 1000)
    fail(ErrorCode::OutOfRange, "schedule needs at least 1000 time steps");
  if (columns.rows() != family.dim)
    fail(ErrorCode::DimensionMismatch, "state dimension does not match family");
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    const double norm = columns.col(c).norm();
    if (std::abs(norm - 1.0) > 1e-10)
      fail(ErrorCode::OutOfRange, "initial states must be normalized");
  }

  const double dt = schedule.total_time / schedule.time_steps;
  Matrix psi = columns;
  for (int i = 0; i < schedule.time_steps; ++i) {
    const double s_mid = (i + 0.5) / schedule.time_steps;
    psi = step_propagator(family, schedule.path, s_mid, dt) * psi;
    if (!psi.allFinite())
      fail(ErrorCode::StepUnstable,
           "propagation produced non-finite amplitudes at step " +
               std::to_string(i));
  }
  for (Eigen::Index c = 0; c < psi.cols(); ++c) {
    if (std::abs(psi.col(c).norm() - 1.0) > 1e-6)
      fail(ErrorCode::NormDrift, "state norm drifted beyond 1e-6");
  }
  return psi;
}

Vector propagate(const HamiltonianFamily& family, const Schedule& schedule,
                 const Vector& psi0) {
  Matrix cols(psi0.size(), 1);
  cols.col(0) = psi0;
  return propagate_columns(family, schedule, cols).col(0);
}

OracleResult extract_holonomy(const HamiltonianFamily& family,
                              const Schedule& schedule,
                              const ClusterSelector& selector,
                              const OracleOptions& options) {
  if (!schedule.path.closed || path_closure_gap(schedule.path) > 1e-10)
    fail(ErrorCode::OpenPath, "holonomy extraction needs a closed schedule");

  const RealVector start = schedule.path.position(0.0);
  Matrix f0;
  if (options.initial_frame) {
    f0 = *options.initial_frame;
  } else if (family.has_analytic_frames()) {
    f0 = family.analytic_frames(start, selector);
  } else {
    f0 = select_frame(family, start, selector, nullptr, options.frame_options)
             .vectors;
  }
  if (f0.rows() != family.dim || f0.cols() != selector.multiplicity)
    fail(ErrorCode::DimensionMismatch, "initial frame has the wrong shape");

  const Matrix psi_final = propagate_columns(family, schedule, f0);

  // Dynamical phase: trapezoid rule on the cluster eigenvalue over the
  // time grid. The whole cluster must share one eigenvalue.
  const int grid = schedule.time_steps;
  std::vector<double> energy(grid + 1);
  const double scale_guard = options.frame_options.cluster_gap_rel;
  parallel_for(grid + 1, options.workers, [&](int i) {
    const RealVector point =
        schedule.path.position(static_cast<double>(i) / grid);
    const Matrix h = eval(family, point);
    const EigenDecomposition ed = eigh(h);
    const double scale = std::max(1.0, max_abs(h));
    int lo = 0, hi = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < ed.eigenvalues.size(); ++k) {
      const double d = std::abs(ed.eigenvalues[k] - selector.target);
      if (d < best) {
        best = d;
        lo = hi = k;
      }
    }
    while (lo > 0 && ed.eigenvalues[lo] - ed.eigenvalues[lo - 1] <=
                         scale_guard * scale)
      --lo;
    while (hi + 1 < ed.eigenvalues.size() &&
           ed.eigenvalues[hi + 1] - ed.eigenvalues[hi] <= scale_guard * scale)
      ++hi;
    if (hi - lo + 1 != selector.multiplicity)
      fail(ErrorCode::DegeneracyMismatch,
           "cluster multiplicity changed along the schedule");
    if (ed.eigenvalues[hi] - ed.eigenvalues[lo] > scale_guard * scale)
      fail(ErrorCode::DegeneracyMismatch,
           "cluster eigenvalue spread exceeds tolerance");
    energy[i] = ed.eigenvalues.segment(lo, hi - lo + 1).mean();
  });
  const double dt = schedule.total_time / grid;
  double dyn_phase = 0.5 * (energy.front() + energy.back());
  for (int i = 1; i < grid; ++i) dyn_phase += energy[i];
  dyn_phase *= dt;

  const Matrix projection = f0.adjoint() * psi_final;  // (n, l)
  OracleResult result;
  result.total_time = schedule.total_time;
  result.dynamical_phase = dyn_phase;
  result.holonomy =
      (projection * std::exp(kI * dyn_phase)).transpose();  // rows = initial
  result.row_leakage.resize(projection.cols());
  double mean_leak = 0.0;
  for (Eigen::Index l = 0; l < projection.cols(); ++l) {
    const double captured = projection.col(l).squaredNorm();
    result.row_leakage[l] = 1.0 - captured;
    mean_leak += result.row_leakage[l];
  }
  result.leakage = mean_leak / projection.cols();
  if (result.leakage > options.leakage_budget)
    fail(ErrorCode::ExcessLeakage,
         "leakage " + std::to_string(result.leakage) +
             " exceeds the adiabaticity budget (total_time too small)");
  return result;
}

}  // namespace holo
