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
#include "holo/numerics.hpp"
#include "testutil.hpp"

using namespace holo;
constexpr double kPi = std::numbers::pi;

TEST_CASE("eigh identity") {
  const EigenDecomposition ed = eigh(Matrix::Identity(2, 2));
  CHECK(ed.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ed.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(unitarity_defect(ed.eigenvectors) < 1e-12);
}

TEST_CASE("eigh diagonal ordering") {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 3.0;
  h(1, 1) = -1.0;
  const EigenDecomposition ed = eigh(h);
  CHECK(ed.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(ed.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(std::abs(ed.eigenvectors(1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(ed.eigenvectors(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigh tripod couplings") {
  // Equal couplings: spectrum (-sqrt3, 0, 0, sqrt3).
  Matrix h = Matrix::Zero(4, 4);
  h(3, 0) = h(0, 3) = 1.0;
  h(3, 1) = h(1, 3) = 1.0;
  h(3, 2) = h(2, 3) = 1.0;
  const EigenDecomposition ed = eigh(h);
  const double s3 = std::sqrt(3.0);
  CHECK(ed.eigenvalues[0] == doctest::Approx(-s3).epsilon(1e-13));
  CHECK(std::abs(ed.eigenvalues[1]) < 1e-13);
  CHECK(std::abs(ed.eigenvalues[2]) < 1e-13);
  CHECK(ed.eigenvalues[3] == doctest::Approx(s3).epsilon(1e-13));
}

TEST_CASE("eigh rejects non-Hermitian input") {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 1) = 1.0;  // strictly upper
  CHECK_THROWS_AS(eigh(h), Error);
  try {
    eigh(h);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHermitianInput);
  }
  CHECK_THROWS_AS(eigh(Matrix::Zero(2, 3)), Error);
}

TEST_CASE("eigh residuals and trace identity on random matrices") {
  auto gen = test::rng(7);
  for (int dim : {2, 3, 4, 8}) {
    for (int rep = 0; rep < 10; ++rep) {
      const Matrix h = test::random_hermitian(dim, gen);
      const EigenDecomposition ed = eigh(h);
      const double scale = std::max(1.0, max_abs(h));
      CHECK(max_abs(h * ed.eigenvectors -
                    ed.eigenvectors * ed.eigenvalues.cast<Complex>().asDiagonal())
            <= 1e-11 * scale);
      CHECK(unitarity_defect(ed.eigenvectors) <= 1e-12);
      for (int k = 1; k < dim; ++k)
        CHECK(ed.eigenvalues[k] >= ed.eigenvalues[k - 1]);
      CHECK(std::abs(ed.eigenvalues.sum() - h.trace().real()) <=
            1e-10 * dim * scale);
    }
  }
}

TEST_CASE("unitary_exp basics") {
  CHECK(max_abs(unitary_exp(Matrix::Zero(3, 3)) - Matrix::Identity(3, 3)) <
        1e-14);

  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = Complex(0.0, kPi);
  a(1, 1) = Complex(0.0, -kPi);
  const Matrix u = unitary_exp(a);
  CHECK(std::abs(u(0, 0) - Complex(-1.0, 0.0)) < 1e-12);
  CHECK(std::abs(u(1, 1) - Complex(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("unitary_exp of a real antisymmetric generator is a rotation") {
  const double gamma = 0.7;
  Matrix k = Matrix::Zero(2, 2);
  k(0, 1) = -gamma;
  k(1, 0) = gamma;
  CHECK(max_abs(unitary_exp(k) - rotation_matrix(gamma)) < 1e-13);
}

TEST_CASE("unitary_exp rejects non-anti-Hermitian input") {
  CHECK_THROWS_AS(unitary_exp(Matrix::Identity(2, 2)), Error);
}

TEST_CASE("unitary_exp determinant and unitarity properties") {
  auto gen = test::rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const int dim = 2 + static_cast<int>(gen() % 3);
    const Matrix h = test::random_hermitian(dim, gen);
    const Matrix a = Complex(0.0, -1.0) * h;  // anti-Hermitian
    const Matrix u = unitary_exp(a);
    CHECK(unitarity_defect(u) <= 1e-12);
    const Complex det = u.determinant();
    const Complex expected = std::exp(a.trace());
    CHECK(std::abs(det - expected) <= 1e-10);
  }
}

TEST_CASE("unitary_distance examples") {
  auto gen = test::rng(3);
  const Matrix u = test::random_unitary(3, gen);
  CHECK(unitary_distance(u, u, DistanceMode::exact) == 0.0);

  const Complex phase = std::exp(Complex(0.0, kPi / 3.0));
  CHECK(unitary_distance(u, Matrix(phase * u),
                         DistanceMode::up_to_global_phase) < 1e-12);

  Matrix z = Matrix::Identity(2, 2);
  z(1, 1) = -1.0;
  CHECK(unitary_distance(Matrix::Identity(2, 2), z, DistanceMode::exact) ==
        doctest::Approx(2.0));
  CHECK_THROWS_AS(
      unitary_distance(Matrix::Identity(2, 2), Matrix::Identity(3, 3),
                       DistanceMode::exact),
      Error);
}

TEST_CASE("unitary_distance is a pseudo-metric on random triples") {
  auto gen = test::rng(5);
  for (int rep = 0; rep < 25; ++rep) {
    const int dim = 2 + static_cast<int>(gen() % 3);
    const Matrix a = test::random_unitary(dim, gen);
    const Matrix b = test::random_unitary(dim, gen);
    const Matrix c = test::random_unitary(dim, gen);
    for (DistanceMode mode :
         {DistanceMode::exact, DistanceMode::up_to_global_phase}) {
      const double ab = unitary_distance(a, b, mode);
      const double ba = unitary_distance(b, a, mode);
      const double bc = unitary_distance(b, c, mode);
      const double ac = unitary_distance(a, c, mode);
      CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
      CHECK(ac <= ab + bc + 1e-12);
    }
  }
}

TEST_CASE("polar_unitary recovers the unitary factor") {
  auto gen = test::rng(13);
  const Matrix w = test::random_unitary(3, gen);
  Matrix p = test::random_hermitian(3, gen);
  p = p * p.adjoint() + 0.1 * Matrix::Identity(3, 3);  // positive definite
  double smin = 0.0;
  const Matrix recovered = polar_unitary(Matrix(w * p), &smin);
  CHECK(max_abs(recovered - w) < 1e-10);
  CHECK(smin > 0.0);
}
