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
#include "holo/oracle.hpp"
#include "testutil.hpp"

using namespace holo;
constexpr double kPi = std::numbers::pi;

namespace {

RealVector point2(double a, double b) {
  RealVector p(2);
  p << a, b;
  return p;
}

}  // namespace

TEST_CASE("static Hamiltonian evolves pure phases") {
  HamiltonianFamily family;
  family.name = "static";
  family.dim = 2;
  family.arity = 0;
  family.evaluate = [](const RealVector&) {
    Matrix h = Matrix::Zero(2, 2);
    h(0, 0) = 0.25;
    h(1, 1) = -1.5;
    return h;
  };
  const double t = 7.0;
  const Schedule schedule = make_schedule(constant_path(RealVector()), t);
  Vector psi0(2);
  psi0 << std::sqrt(0.4), std::sqrt(0.6);
  const Vector psi = propagate(family, schedule, psi0);
  CHECK(std::abs(psi[0] - psi0[0] * std::exp(Complex(0, -0.25 * t))) <= 1e-8);
  CHECK(std::abs(psi[1] - psi0[1] * std::exp(Complex(0, 1.5 * t))) <= 1e-8);
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-10);
}

TEST_CASE("resting bloch eigenstate only turns its dynamical phase") {
  const HamiltonianFamily family = bloch_family();
  const RealVector p = point2(0.9, 0.4);
  const Schedule schedule = make_schedule(constant_path(p), 50.0);
  const Vector frame =
      family.analytic_frames(p, ClusterSelector{0.5, 1}).col(0);
  const Vector psi = propagate(family, schedule, frame);
  const Vector expected = std::exp(Complex(0, -0.5 * 50.0)) * frame;
  CHECK((psi - expected).norm() <= 1e-8);
}

TEST_CASE("slow bloch circle returns the state with the geometric phase") {
  const HamiltonianFamily family = bloch_family();
  const Vector n0 =
      family.analytic_frames(point2(kPi / 2.0, 0.0), ClusterSelector{0.5, 1})
          .col(0);
  auto residual = [&](double t) {
    const Schedule schedule = make_schedule(phi_circle_path(kPi / 2.0), t);
    const Vector psi = propagate(family, schedule, n0);
    const Vector predicted =
        std::exp(Complex(0, -0.5 * t)) * std::exp(Complex(0, -kPi)) * n0;
    return (psi - predicted).norm();
  };
  // At T = 500 the residual is dominated by the dressed-phase shift
  // T (2 pi / T)^2 / 4 ~ 0.02 plus a leaked amplitude that oscillates up
  // to 2 pi / T; it shrinks with slower traversal.
  const double at_500 = residual(500.0);
  const double at_5000 = residual(5000.0);
  CHECK(at_500 <= 2.5e-2);
  CHECK(at_5000 <= 1e-2);
  CHECK(at_5000 < at_500);
}

TEST_CASE("norm is conserved along driven evolutions") {
  const HamiltonianFamily family = tripod_family();
  const Schedule schedule = make_schedule(phi_circle_path(1.2), 200.0);
  auto gen = test::rng(71);
  Vector psi0 = Vector::Zero(4);
  for (int k = 0; k < 4; ++k) psi0[k] = test::gaussian(gen);
  psi0.normalize();
  const Vector psi = propagate(family, schedule, psi0);
  CHECK(std::abs(psi.norm() - 1.0) <= 1e-8);
}

TEST_CASE("zero-length loop extracts the identity") {
  const HamiltonianFamily family = bloch_family();
  const RealVector p = point2(0.7, 0.0);
  const double t = 30.0;
  const Schedule schedule = make_schedule(constant_path(p), t);
  const OracleResult res =
      extract_holonomy(family, schedule, ClusterSelector{0.5, 1});
  CHECK(std::abs(res.holonomy(0, 0) - Complex(1.0, 0.0)) <= 1e-10);
  CHECK(res.leakage <= 1e-12);
  CHECK(res.dynamical_phase == doctest::Approx(0.5 * t).epsilon(1e-12));
}

TEST_CASE("bloch cone holonomy approaches the line-integral phase") {
  const HamiltonianFamily family = bloch_family();
  const ClusterSelector upper{0.5, 1};
  const ParameterPath path = phi_circle_path(kPi / 3.0);
  LoopOptions loop;
  loop.steps = 4000;
  const double gamma = abelian_phase(family, path, upper, loop);

  double previous = 1e9;
  for (double t : {1e2, 1e3, 1e4}) {
    const OracleResult res =
        extract_holonomy(family, make_schedule(path, t), upper);
    const double mismatch =
        std::abs(std::arg(res.holonomy(0, 0)) -
                 std::remainder(gamma, 2.0 * kPi));
    CHECK(mismatch <= 1.2 * previous);  // non-increasing within 20 percent
    previous = mismatch;
  }
  CHECK(previous <= 1e-3);  // T = 1e4 lands well under the budget
}

TEST_CASE("tripod dark holonomy approaches the wilson rotation") {
  const double theta = std::acos(1.0 / 8.0);
  const HamiltonianFamily family = tripod_family();
  const ClusterSelector dark{0.0, 2};
  const ParameterPath path = phi_circle_path(theta);
  const Matrix seed = tripod_dark_frame(theta, 0.0);

  OracleOptions oracle;
  oracle.initial_frame = seed;
  const OracleResult res =
      extract_holonomy(family, make_schedule(path, 1e3), dark, oracle);
  CHECK(unitary_distance(res.holonomy, rotation_matrix(kPi / 4.0),
                         DistanceMode::up_to_global_phase) <= 5e-2);
  CHECK(res.dynamical_phase == doctest::Approx(0.0).epsilon(1e-9));

  // Each row keeps exactly the population it retained: norms match leakage.
  for (int l = 0; l < 2; ++l) {
    const double row_norm2 = res.holonomy.row(l).squaredNorm();
    CHECK(std::abs(row_norm2 - (1.0 - res.row_leakage[l])) <= 1e-10);
  }
}

TEST_CASE("leakage shrinks as the traversal slows") {
  const HamiltonianFamily bloch = bloch_family();
  const ParameterPath cone = phi_circle_path(kPi / 3.0);
  const double leak_fast =
      extract_holonomy(bloch, make_schedule(cone, 1e2), ClusterSelector{0.5, 1})
          .leakage;
  const double leak_slow =
      extract_holonomy(bloch, make_schedule(cone, 1e3), ClusterSelector{0.5, 1})
          .leakage;
  CHECK(leak_slow < leak_fast);

  const HamiltonianFamily tripod = tripod_family();
  const double theta = std::acos(1.0 / 8.0);
  OracleOptions oracle;
  oracle.initial_frame = tripod_dark_frame(theta, 0.0);
  const double dark_fast = extract_holonomy(tripod,
                                            make_schedule(phi_circle_path(theta), 1e2),
                                            ClusterSelector{0.0, 2}, oracle)
                               .leakage;
  const double dark_slow = extract_holonomy(tripod,
                                            make_schedule(phi_circle_path(theta), 1e3),
                                            ClusterSelector{0.0, 2}, oracle)
                               .leakage;
  CHECK(dark_slow < dark_fast);
}

TEST_CASE("total phase splits into dynamical and geometric parts") {
  const HamiltonianFamily family = bloch_family();
  const double theta = kPi / 3.0;
  const double t = 1e3;
  const ParameterPath path = phi_circle_path(theta);
  const Vector n0 =
      family.analytic_frames(path.position(0.0), ClusterSelector{0.5, 1}).col(0);
  const Vector psi = propagate(family, make_schedule(path, t), n0);
  LoopOptions loop;
  loop.steps = 4000;
  const double gamma =
      abelian_phase(family, path, ClusterSelector{0.5, 1}, loop);
  const Complex residual_phase =
      n0.dot(psi) * std::exp(Complex(0, 0.5 * t)) * std::exp(Complex(0, -gamma));
  CHECK(std::abs(std::arg(residual_phase)) <= 1e-2);
}

TEST_CASE("tight leakage budgets raise ExcessLeakage") {
  const HamiltonianFamily family = bloch_family();
  OracleOptions oracle;
  oracle.leakage_budget = 1e-12;
  try {
    extract_holonomy(family, make_schedule(phi_circle_path(kPi / 3.0), 1e2),
                     ClusterSelector{0.5, 1}, oracle);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ExcessLeakage);
  }
}

TEST_CASE("non-normalized initial states are rejected") {
  const HamiltonianFamily family = bloch_family();
  const Schedule schedule = make_schedule(constant_path(point2(0.3, 0.0)), 10.0);
  Vector psi0(2);
  psi0 << 1.0, 1.0;
  CHECK_THROWS_AS(propagate(family, schedule, psi0), Error);
}

TEST_CASE("schedule defaults and bounds") {
  const Schedule s1 = make_schedule(phi_circle_path(1.0), 10.0);
  CHECK(s1.time_steps == 1000);  // floor
  const Schedule s2 = make_schedule(phi_circle_path(1.0), 1e3);
  CHECK(s2.time_steps == 31831);  // about 32 steps per unit time
  CHECK_THROWS_AS(make_schedule(phi_circle_path(1.0), -1.0), Error);
}
