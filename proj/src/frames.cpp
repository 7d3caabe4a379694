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

#include "holo/frames.hpp"

#include <cmath>
#include <numbers>

namespace holo {

namespace {

double periodic_gap(double a, double b, double period) {
  double d = std::abs(a - b);
  if (period > 0.0) d = std::abs(d - period * std::round(d / period));
  return d;
}

}  // namespace

RealVector ParameterPath::velocity_at(double s) const {
  if (velocity) return velocity(s);
  const double h = 1e-6;
  const double lo = std::max(0.0, s - h);
  const double hi = std::min(1.0, s + h);
  return (position(hi) - position(lo)) / (hi - lo);
}

ParameterPath phi_circle_path(double theta, double winding, std::string label) {
  ParameterPath path;
  const double span = 2.0 * std::numbers::pi * winding;
  path.position = [theta, span](double s) {
    RealVector p(2);
    p << theta, span * s;
    return p;
  };
  path.velocity = [span](double) {
    RealVector v(2);
    v << 0.0, span;
    return v;
  };
  path.closed = std::abs(winding - std::round(winding)) < 1e-12;
  path.periods = RealVector::Zero(2);
  path.periods[1] = 2.0 * std::numbers::pi;
  path.label = label.empty()
                   ? "phi-circle theta=" + std::to_string(theta) +
                         " winding=" + std::to_string(winding)
                   : std::move(label);
  return path;
}

ParameterPath constant_path(RealVector point, std::string label) {
  ParameterPath path;
  path.position = [point](double) { return point; };
  path.velocity = [n = point.size()](double) { return RealVector::Zero(n); };
  path.closed = true;
  path.label = label.empty() ? "constant" : std::move(label);
  return path;
}

double path_closure_gap(const ParameterPath& path) {
  const RealVector a = path.position(0.0);
  const RealVector b = path.position(1.0);
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "path endpoints have different arity");
  double gap = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const double period = (path.periods.size() > k) ? path.periods[k] : 0.0;
    gap = std::max(gap, periodic_gap(a[k], b[k], period));
  }
  return gap;
}

void validate_path(const ParameterPath& path, int arity, double lipschitz_bound,
                   double resolution) {
  if (!path.position) fail(ErrorCode::ConfigInvalid, "path has no evaluator");
  const RealVector start = path.position(0.0);
  if (start.size() != arity)
    fail(ErrorCode::ArityMismatch,
         "path arity " + std::to_string(start.size()) + " does not match " +
             std::to_string(arity));
  for (Eigen::Index k = 0; k < start.size(); ++k)
    if (!std::isfinite(start[k]))
      fail(ErrorCode::OutOfRange, "path coordinates are not finite");
  if (path.closed && path_closure_gap(path) > 1e-10)
    fail(ErrorCode::OpenPath, "path is flagged closed but endpoints differ");
  if (lipschitz_bound > 0.0) {
    RealVector prev = start;
    for (double s = resolution; s <= 1.0 + 0.5 * resolution; s += resolution) {
      const RealVector cur = path.position(std::min(s, 1.0));
      if ((cur - prev).cwiseAbs().maxCoeff() > lipschitz_bound * resolution)
        fail(ErrorCode::OutOfRange,
             "path violates the Lipschitz bound near s=" + std::to_string(s));
      prev = cur;
    }
  }
}

Matrix eval(const HamiltonianFamily& family, const RealVector& point) {
  if (!family.evaluate)
    fail(ErrorCode::ConfigInvalid, "family '" + family.name + "' has no evaluator");
  if (family.arity > 0 && point.size() != family.arity)
    fail(ErrorCode::ArityMismatch,
         "family '" + family.name + "' expects " + std::to_string(family.arity) +
             " coordinates, got " + std::to_string(point.size()));
  const Matrix h = family.evaluate(point);
  if (h.rows() != family.dim || h.cols() != family.dim)
    fail(ErrorCode::DimensionMismatch,
         "family '" + family.name + "' returned a wrongly sized matrix");
  if (!h.allFinite())
    fail(ErrorCode::NonHermitianEvaluation,
         "family '" + family.name + "' produced non-finite entries");
  const double scale = std::max(1.0, max_abs(h));
  if (max_abs(h - h.adjoint()) > 1e-12 * scale)
    fail(ErrorCode::NonHermitianEvaluation,
         "family '" + family.name + "' evaluated to a non-Hermitian matrix");
  return hermitize(h);
}

Frame select_frame(const HamiltonianFamily& family, const RealVector& point,
                   const ClusterSelector& selector, const Frame* reference,
                   const FrameOptions& options) {
  if (selector.multiplicity < 1)
    fail(ErrorCode::ConfigInvalid, "cluster multiplicity must be positive");
  const Matrix h = eval(family, point);
  const EigenDecomposition ed = eigh(h);
  const double scale = std::max(1.0, max_abs(h));
  const double cluster_tol = options.cluster_gap_rel * scale;

  // Group consecutive eigenvalues into clusters.
  struct Cluster {
    int begin, end;  // [begin, end)
    double mean;
  };
  std::vector<Cluster> clusters;
  int begin = 0;
  for (int k = 1; k <= ed.eigenvalues.size(); ++k) {
    if (k == ed.eigenvalues.size() ||
        ed.eigenvalues[k] - ed.eigenvalues[k - 1] > cluster_tol) {
      const double mean =
          ed.eigenvalues.segment(begin, k - begin).mean();
      clusters.push_back({begin, k, mean});
      begin = k;
    }
  }

  int chosen = 0;
  for (int c = 1; c < static_cast<int>(clusters.size()); ++c)
    if (std::abs(clusters[c].mean - selector.target) <
        std::abs(clusters[chosen].mean - selector.target))
      chosen = c;
  const Cluster& cluster = clusters[chosen];
  const int n = cluster.end - cluster.begin;
  if (n != selector.multiplicity)
    fail(ErrorCode::DegeneracyMismatch,
         "cluster near " + std::to_string(cluster.mean) + " has multiplicity " +
             std::to_string(n) + ", expected " +
             std::to_string(selector.multiplicity));

  double gap = std::numeric_limits<double>::infinity();
  if (cluster.begin > 0)
    gap = std::min(gap, ed.eigenvalues[cluster.begin] -
                            ed.eigenvalues[cluster.begin - 1]);
  if (cluster.end < ed.eigenvalues.size())
    gap = std::min(gap,
                   ed.eigenvalues[cluster.end] - ed.eigenvalues[cluster.end - 1]);
  if (gap < options.min_gap_rel * scale)
    fail(ErrorCode::GapCollapse,
         "cluster gap " + std::to_string(gap) + " below tolerance at '" +
             family.name + "'");

  Matrix vectors = ed.eigenvectors.middleCols(cluster.begin, n);
  if (reference) {
    if (reference->vectors.rows() != vectors.rows() ||
        reference->vectors.cols() != vectors.cols())
      fail(ErrorCode::DimensionMismatch, "reference frame shape mismatch");
    double smin = 0.0;
    const Matrix w = polar_unitary(vectors.adjoint() * reference->vectors, &smin);
    if (smin < options.min_overlap)
      fail(ErrorCode::GaugeDiscontinuity,
           "frame overlap singular value " + std::to_string(smin) +
               " below tolerance; path passed too near a frame singularity");
    vectors = vectors * w;
  }

  return Frame{point, std::move(vectors), cluster.mean, selector};
}

FrameField analytic_frame_field(const HamiltonianFamily& family,
                                const ClusterSelector& selector) {
  if (!family.has_analytic_frames())
    fail(ErrorCode::GaugeDiscontinuity,
         "family '" + family.name + "' provides no analytic frame gauge");
  return [frames = family.analytic_frames, selector](const RealVector& point) {
    return frames(point, selector);
  };
}

FrameField reference_aligned_field(const HamiltonianFamily& family,
                                   const ClusterSelector& selector,
                                   Frame reference, const FrameOptions& options) {
  return [family, selector, reference = std::move(reference),
          options](const RealVector& point) {
    return select_frame(family, point, selector, &reference, options).vectors;
  };
}

Matrix connection_at(const FrameField& field, const RealVector& point,
                     int coordinate, double step) {
  if (coordinate < 0 || coordinate >= point.size())
    fail(ErrorCode::OutOfRange, "coordinate index out of range");
  if (step <= 0.0) fail(ErrorCode::OutOfRange, "differentiation step must be positive");
  RealVector lo = point, hi = point;
  lo[coordinate] -= step;
  hi[coordinate] += step;
  const Matrix center = field(point);
  const Matrix diff = (field(hi) - field(lo)) / (2.0 * step);
  return hermitize(Complex(0.0, 1.0) * (center.adjoint() * diff));
}

ConnectionSample connection_sample(const FrameField& field,
                                   const RealVector& point, double step) {
  ConnectionSample sample;
  sample.point = point;
  sample.components.reserve(point.size());
  for (int k = 0; k < point.size(); ++k)
    sample.components.push_back(connection_at(field, point, k, step));
  return sample;
}

}  // namespace holo
