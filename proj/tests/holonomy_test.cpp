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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "holo/gates.hpp"
#include "holo/holonomy.hpp"
#include "testutil.hpp"

using namespace holo;
constexpr double kPi = std::numbers::pi;

namespace {

ParameterPath reversed(const ParameterPath& path) {
  ParameterPath rev = path;
  rev.position = [pos = path.position](double s) { return pos(1.0 - s); };
  rev.label = path.label + " (reversed)";
  return rev;
}

}  // namespace

TEST_CASE("cone solid angle") {
  CHECK(cone_solid_angle(0.0).value == doctest::Approx(0.0));
  CHECK(cone_solid_angle(kPi / 2.0).value == doctest::Approx(2.0 * kPi));
  CHECK(cone_solid_angle(kPi).value == doctest::Approx(4.0 * kPi));
  CHECK_THROWS_AS(cone_solid_angle(-0.1), Error);
  CHECK_THROWS_AS(cone_solid_angle(kPi + 0.1), Error);
}

TEST_CASE("abelian phase on bloch circles matches -pi(1-cos theta)") {
  const HamiltonianFamily family = bloch_family();
  const ClusterSelector upper{0.5, 1};

  LoopOptions options;
  options.steps = 2000;
  const double g_half =
      abelian_phase(family, phi_circle_path(kPi / 2.0), upper, options);
  CHECK(std::abs(g_half + kPi) <= 1e-6);

  options.steps = 4000;
  const double g_third =
      abelian_phase(family, phi_circle_path(kPi / 3.0), upper, options);
  CHECK(std::abs(g_third + kPi / 2.0) <= 1e-6);
}

TEST_CASE("abelian phase of a point loop vanishes") {
  const HamiltonianFamily family = bloch_family();
  LoopOptions options;
  options.steps = 500;
  const double g =
      abelian_phase(family, phi_circle_path(0.0), ClusterSelector{0.5, 1},
                    options);
  CHECK(std::abs(g) < 1e-12);
}

TEST_CASE("abelian phase accumulates raw multi-loop windings") {
  const HamiltonianFamily family = bloch_family();
  LoopOptions options;
  options.steps = 4000;
  const double g2 = abelian_phase(family, phi_circle_path(kPi / 3.0, 2.0),
                                  ClusterSelector{0.5, 1}, options);
  CHECK(std::abs(g2 + kPi) <= 2e-6);  // two windings, not reduced mod 2 pi
}

TEST_CASE("abelian phase refuses open paths and degenerate clusters") {
  const HamiltonianFamily bloch = bloch_family();
  ParameterPath half = phi_circle_path(0.8, 0.5);
  CHECK_THROWS_AS(
      abelian_phase(bloch, half, ClusterSelector{0.5, 1}, LoopOptions{}),
      Error);

  const HamiltonianFamily tripod = tripod_family();
  try {
    abelian_phase(tripod, phi_circle_path(0.8), ClusterSelector{0.0, 2},
                  LoopOptions{});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegeneracyMismatch);
  }
}

TEST_CASE("wilson loop of a constant path is the identity") {
  const HamiltonianFamily family = tripod_family();
  RealVector p(2);
  p << 1.0, 0.3;
  LoopOptions options;
  options.steps = 200;
  const Holonomy h =
      wilson_loop(family, constant_path(p), ClusterSelector{0.0, 2}, options);
  CHECK(max_abs(h.matrix - Matrix::Identity(2, 2)) < 1e-12);
  CHECK(h.unitarity_defect < 1e-12);
}

TEST_CASE("tripod wilson loop gives the dark-space rotation") {
  const double theta = std::acos(1.0 / 8.0);
  const HamiltonianFamily family = tripod_family();
  LoopOptions options;
  options.steps = 4000;
  options.initial_frame = tripod_dark_frame(theta, 0.0);
  const Holonomy h = wilson_loop(family, phi_circle_path(theta),
                                 ClusterSelector{0.0, 2}, options);
  CHECK(unitary_distance(h.matrix, rotation_matrix(kPi / 4.0),
                         DistanceMode::exact) <= 1e-6);
  CHECK(h.unitarity_defect <= 1e-10);
  CHECK(h.min_transport_overlap > 0.999);
}

TEST_CASE("abelian wilson loop equals the exponential of the abelian phase") {
  const HamiltonianFamily family = bloch_family();
  const ClusterSelector upper{0.5, 1};
  for (double theta : {kPi / 6.0, kPi / 3.0, kPi / 2.0, 2.0}) {
    LoopOptions options;
    options.steps = 1500;
    const ParameterPath path = phi_circle_path(theta);
    const double gamma = abelian_phase(family, path, upper, options);
    options.initial_frame =
        family.analytic_frames(path.position(0.0), upper);
    const Holonomy h = wilson_loop(family, path, upper, options);
    const Complex expected = std::exp(Complex(0.0, gamma));
    CHECK(std::abs(h.matrix(0, 0) - expected) <= 1e-9);
  }
  // The pi/2 circle in particular lands on -1.
  LoopOptions options;
  options.steps = 2000;
  options.initial_frame =
      family.analytic_frames(phi_circle_path(kPi / 2.0).position(0.0), upper);
  const Holonomy h =
      wilson_loop(family, phi_circle_path(kPi / 2.0), upper, options);
  CHECK(std::abs(h.matrix(0, 0) - Complex(-1.0, 0.0)) <= 1e-6);
}

TEST_CASE("wilson loop converges at second order on the tripod") {
  const double theta = std::acos(1.0 / 8.0);
  const HamiltonianFamily family = tripod_family();
  const Matrix exact = rotation_matrix(2.0 * kPi * std::cos(theta));
  auto error_at = [&](int steps) {
    LoopOptions options;
    options.steps = steps;
    options.initial_frame = tripod_dark_frame(theta, 0.0);
    const Holonomy h = wilson_loop(family, phi_circle_path(theta),
                                   ClusterSelector{0.0, 2}, options);
    return unitary_distance(h.matrix, exact, DistanceMode::exact);
  };
  for (int m : {250, 500, 1000}) {
    const double ratio = error_at(2 * m) / error_at(m);
    CHECK(ratio >= 0.15);
    CHECK(ratio <= 0.35);
  }
}

TEST_CASE("reversing the loop inverts the holonomy") {
  const double theta = 1.1;
  const HamiltonianFamily family = tripod_family();
  LoopOptions options;
  options.steps = 800;
  options.initial_frame = tripod_dark_frame(theta, 0.0);
  const ParameterPath path = phi_circle_path(theta);
  const Holonomy fwd =
      wilson_loop(family, path, ClusterSelector{0.0, 2}, options);
  const Holonomy bwd =
      wilson_loop(family, reversed(path), ClusterSelector{0.0, 2}, options);
  CHECK(max_abs(bwd.matrix * fwd.matrix - Matrix::Identity(2, 2)) <= 1e-8);
}

TEST_CASE("a constant re-gauge conjugates the holonomy and fixes its spectrum") {
  const double theta = std::acos(1.0 / 8.0);
  const HamiltonianFamily family = tripod_family();
  const ParameterPath path = phi_circle_path(theta);
  const ClusterSelector dark{0.0, 2};
  const Matrix f0 = tripod_dark_frame(theta, 0.0);

  LoopOptions base;
  base.steps = 1000;
  base.initial_frame = f0;
  const Holonomy h = wilson_loop(family, path, dark, base);
  const double angle = rotation_angle(h.matrix);

  auto gen = test::rng(55);
  for (int rep = 0; rep < 5; ++rep) {
    const Matrix w = test::random_unitary(2, gen);
    LoopOptions regauged = base;
    regauged.initial_frame = Matrix(f0 * w);
    const Holonomy hw = wilson_loop(family, path, dark, regauged);
    // Row-layout holonomies conjugate with the conjugate of the re-gauge.
    const Matrix wc = w.conjugate();
    CHECK(max_abs(hw.matrix - Matrix(wc.adjoint() * h.matrix * wc)) <= 1e-9);
    CHECK(std::abs(rotation_angle(hw.matrix) - angle) <= 1e-8);
  }
}

TEST_CASE("loop solid angle of a plain cone") {
  for (double theta : {0.3, 1.0, 2.2}) {
    const double omega = loop_solid_angle([theta](double) { return theta; });
    CHECK(omega == doctest::Approx(cone_solid_angle(theta).value).epsilon(1e-12));
  }
}

TEST_CASE("solid-angle-matched wobble reproduces the circle phase") {
  const double theta0 = kPi / 3.0;
  const HamiltonianFamily family = bloch_family();
  const ClusterSelector upper{0.5, 1};
  LoopOptions options;
  options.steps = 4000;
  const double g_circle =
      abelian_phase(family, phi_circle_path(theta0), upper, options);

  const PerturbedCone cone = perturbed_cone_path(theta0, 17);
  CHECK(std::abs(cone.solid_angle - cone_solid_angle(theta0).value) < 1e-9);
  const double g_wobble = abelian_phase(family, cone.path, upper, options);
  CHECK(std::abs(g_wobble - g_circle) <= 1e-4);

  // Without renormalization the phase follows the raw solid angle instead.
  const PerturbedCone raw = perturbed_cone_path(theta0, 17, 0.1, 3, false);
  const double g_raw = abelian_phase(family, raw.path, upper, options);
  CHECK(std::abs(g_raw + 0.5 * raw.raw_solid_angle) <= 1e-4);
}

TEST_CASE("wilson loop without an analytic seed still fixes the spectrum") {
  // Raw eigensolver seed: the matrix itself is gauge dependent, the
  // rotation angle is not.
  const double theta = std::acos(1.0 / 8.0);
  const HamiltonianFamily family = tripod_family();
  LoopOptions options;
  options.steps = 2000;
  HamiltonianFamily no_gauge = family;
  no_gauge.analytic_frames = nullptr;
  const Holonomy h = wilson_loop(no_gauge, phi_circle_path(theta),
                                 ClusterSelector{0.0, 2}, options);
  CHECK(std::abs(rotation_angle(h.matrix) - kPi / 4.0) <= 1e-5);
  CHECK(h.unitarity_defect <= 1e-10);
}

TEST_CASE("parallel and serial loop evaluation agree bitwise") {
  const double theta = 1.3;
  const HamiltonianFamily family = tripod_family();
  LoopOptions serial;
  serial.steps = 600;
  serial.workers = 1;
  serial.initial_frame = tripod_dark_frame(theta, 0.0);
  LoopOptions parallel = serial;
  parallel.workers = 0;  // library default
  const Holonomy a =
      wilson_loop(family, phi_circle_path(theta), ClusterSelector{0.0, 2}, serial);
  const Holonomy b = wilson_loop(family, phi_circle_path(theta),
                                 ClusterSelector{0.0, 2}, parallel);
  CHECK(max_abs(a.matrix - b.matrix) == 0.0);
}
