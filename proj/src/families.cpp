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

#include "holo/families.hpp"

#include <cmath>
#include <numbers>

namespace holo {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Eigenvectors of n(theta, phi) . sigma for eigenvalue +1 / -1.
Vector cone_aligned(double theta, double phi) {
  Vector v(2);
  v << std::cos(0.5 * theta), std::exp(kI * phi) * std::sin(0.5 * theta);
  return v;
}

Vector cone_anti(double theta, double phi) {
  Vector v(2);
  v << std::sin(0.5 * theta), -std::exp(kI * phi) * std::cos(0.5 * theta);
  return v;
}

Vector basis_vector(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v[index] = 1.0;
  return v;
}

}  // namespace

double TwoSpinSystem::pi_j() const { return std::numbers::pi * j; }

void TwoSpinSystem::validate() const {
  if (!(omega_a > omega_b))
    fail(ErrorCode::OutOfRange, "two-spin system requires omega_a > omega_b");
  if (!std::isfinite(omega_a) || !std::isfinite(omega_b) || !std::isfinite(j))
    fail(ErrorCode::OutOfRange, "two-spin parameters must be finite");
}

void DriveTone::validate() const {
  if (!(omega1 >= 0.0))
    fail(ErrorCode::OutOfRange, "drive amplitude must be nonnegative");
  if (!std::isfinite(omega) || !std::isfinite(omega1))
    fail(ErrorCode::OutOfRange, "drive parameters must be finite");
}

HamiltonianFamily bloch_family(const BlochParams& params) {
  if (!(params.field > 0.0))
    fail(ErrorCode::OutOfRange, "field magnitude must be positive");
  const double b = params.field;
  HamiltonianFamily family;
  family.name = "bloch";
  family.dim = 2;
  family.arity = 2;
  family.evaluate = [b](const RealVector& p) {
    const double theta = p[0], phi = p[1];
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    return Matrix(0.5 * b * (nx * pauli_x() + ny * pauli_y() + nz * pauli_z()));
  };
  family.analytic_frames = [b](const RealVector& p, const ClusterSelector& sel) {
    if (sel.multiplicity != 1)
      fail(ErrorCode::DegeneracyMismatch, "bloch levels are non-degenerate");
    Matrix f(2, 1);
    f.col(0) = (sel.target >= 0.0) ? cone_aligned(p[0], p[1])
                                   : cone_anti(p[0], p[1]);
    return f;
  };
  return family;
}

HamiltonianFamily two_spin_family(const TwoSpinSystem& system) {
  system.validate();
  HamiltonianFamily family;
  family.name = "two_spin";
  family.dim = 4;
  family.arity = 0;  // constant; coordinates ignored
  const Matrix id2 = Matrix::Identity(2, 2);
  const Matrix h = 0.5 * system.omega_a * kron(pauli_z(), id2) +
                   0.5 * system.omega_b * kron(id2, pauli_z()) +
                   0.5 * system.pi_j() * kron(pauli_z(), pauli_z());
  family.evaluate = [h](const RealVector&) { return h; };
  // The static Hamiltonian is diagonal; frames are computational basis
  // vectors matched by energy, ordered (uu, ud, du, dd).
  const std::array<double, 4> energies = {
      0.5 * (system.omega_a + system.omega_b + system.pi_j()),
      0.5 * (system.omega_a - system.omega_b - system.pi_j()),
      0.5 * (-system.omega_a + system.omega_b - system.pi_j()),
      0.5 * (-system.omega_a - system.omega_b + system.pi_j())};
  family.analytic_frames = [energies](const RealVector&,
                                      const ClusterSelector& sel) {
    if (sel.multiplicity != 1)
      fail(ErrorCode::DegeneracyMismatch, "two-spin levels are non-degenerate");
    int best = 0;
    for (int k = 1; k < 4; ++k)
      if (std::abs(energies[k] - sel.target) < std::abs(energies[best] - sel.target))
        best = k;
    Matrix f = Matrix::Zero(4, 1);
    f(best, 0) = 1.0;
    return f;
  };
  return family;
}

HamiltonianFamily driven_two_spin_family(const TwoSpinSystem& system,
                                         const DriveTone& drive) {
  system.validate();
  drive.validate();
  HamiltonianFamily family;
  family.name = "two_spin";
  family.dim = 4;
  family.arity = 1;  // drive phase phi
  const Matrix id2 = Matrix::Identity(2, 2);
  const double detuning = system.omega_a - drive.omega;
  const double pij = system.pi_j();
  const double omega_b = system.omega_b;
  const double omega1 = drive.omega1;
  family.evaluate = [=](const RealVector& p) {
    const double phi = p[0];
    Matrix drive_term =
        std::cos(phi) * pauli_x() + std::sin(phi) * pauli_y();
    return Matrix(0.5 * detuning * kron(pauli_z(), id2) +
                  0.5 * omega_b * kron(id2, pauli_z()) +
                  0.5 * pij * kron(pauli_z(), pauli_z()) +
                  0.5 * omega1 * kron(drive_term, id2));
  };
  const auto levels = driven_two_spin_levels(system, drive);
  family.analytic_frames = [=](const RealVector& p, const ClusterSelector& sel) {
    if (sel.multiplicity != 1)
      fail(ErrorCode::DegeneracyMismatch,
           "driven two-spin levels are non-degenerate");
    const double phi = p[0];
    int best = 0;
    for (int k = 1; k < 4; ++k)
      if (std::abs(levels[k].energy - sel.target) <
          std::abs(levels[best].energy - sel.target))
        best = k;
    const DrivenTwoSpinLevel& level = levels[best];
    const double theta = std::acos(std::clamp(level.cos_cone, -1.0, 1.0));
    const Vector a_state =
        level.a_aligned ? cone_aligned(theta, phi) : cone_anti(theta, phi);
    Matrix b_state(2, 1);
    b_state.col(0) = basis_vector(2, level.b_up ? 0 : 1);
    Matrix a_mat(2, 1);
    a_mat.col(0) = a_state;
    return Matrix(kron(a_mat, b_state));
  };
  return family;
}

std::array<DrivenTwoSpinLevel, 4> driven_two_spin_levels(
    const TwoSpinSystem& system, const DriveTone& drive) {
  system.validate();
  drive.validate();
  std::array<DrivenTwoSpinLevel, 4> levels;
  int idx = 0;
  for (bool b_up : {true, false}) {
    const double transition =
        system.omega_a + (b_up ? system.pi_j() : -system.pi_j());
    const double det = transition - drive.omega;
    const double rabi = std::hypot(det, drive.omega1);
    if (rabi == 0.0)
      fail(ErrorCode::UndefinedCone,
           "drive resonant with zero amplitude leaves the cone undefined");
    const double cosc = det / rabi;
    const double base = 0.5 * (b_up ? system.omega_b : -system.omega_b);
    levels[idx++] = {true, b_up, base + 0.5 * rabi, cosc};
    levels[idx++] = {false, b_up, base - 0.5 * rabi, cosc};
  }
  return levels;
}

HamiltonianFamily tripod_family(double coupling) {
  if (!(coupling > 0.0))
    fail(ErrorCode::OutOfRange, "tripod coupling must be positive");
  HamiltonianFamily family;
  family.name = "tripod";
  family.dim = 4;
  family.arity = 2;
  family.evaluate = [coupling](const RealVector& p) {
    const double theta = p[0], phi = p[1];
    const double w0 = coupling * std::sin(theta) * std::cos(phi);
    const double w1 = coupling * std::sin(theta) * std::sin(phi);
    const double wa = coupling * std::cos(theta);
    Matrix h = Matrix::Zero(4, 4);
    h(3, 0) = w0;
    h(3, 1) = w1;
    h(3, 2) = wa;
    h(0, 3) = w0;
    h(1, 3) = w1;
    h(2, 3) = wa;
    return h;
  };
  family.analytic_frames = [coupling](const RealVector& p,
                                      const ClusterSelector& sel) {
    const double theta = p[0], phi = p[1];
    if (std::abs(sel.target) < 0.5 * coupling) {
      if (sel.multiplicity != 2)
        fail(ErrorCode::DegeneracyMismatch, "dark cluster has multiplicity 2");
      return tripod_dark_frame(theta, phi);
    }
    if (sel.multiplicity != 1)
      fail(ErrorCode::DegeneracyMismatch, "bright levels are non-degenerate");
    Vector excited(4);
    excited << std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
        std::cos(theta), 0.0;
    const double sign = (sel.target > 0.0) ? 1.0 : -1.0;
    Matrix f(4, 1);
    f.col(0) = (basis_vector(4, 3) + sign * excited) / std::numbers::sqrt2;
    return f;
  };
  return family;
}

Matrix tripod_dark_frame(double theta, double phi) {
  Matrix f = Matrix::Zero(4, 2);
  f(0, 0) = std::sin(phi);
  f(1, 0) = -std::cos(phi);
  f(0, 1) = std::cos(theta) * std::cos(phi);
  f(1, 1) = std::cos(theta) * std::sin(phi);
  f(2, 1) = -std::sin(theta);
  return f;
}

const std::vector<FamilyInfo>& family_registry() {
  static const std::vector<FamilyInfo> registry = {
      {"bloch", "field (B > 0, default 1)", "(theta, phi)"},
      {"two_spin",
       "omega_a, omega_b (omega_a > omega_b), j; optional drive {omega, omega1}",
       "() static, (phi) driven"},
      {"tripod", "coupling (B > 0, default 1)", "(theta, phi)"},
  };
  return registry;
}

}  // namespace holo
