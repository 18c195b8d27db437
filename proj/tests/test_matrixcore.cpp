#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "eub/families.hpp"
#include "eub/matrixcore.hpp"

using namespace eub;

TEST_CASE("operator norm basics") {
  CHECK(operator_norm(Matrix::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix row(1, 2);
  row << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(operator_norm(row) == doctest::Approx(1.0).epsilon(1e-12));

  // The (rows {2,3}, column 2) submatrix of O3 already has unit norm.
  Matrix col(2, 1);
  col << std::sqrt(2.0) / std::sqrt(6.0), -2.0 / std::sqrt(6.0);
  CHECK(operator_norm(col) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(operator_norm(Matrix(0, 0)), InvalidInputError);
}

TEST_CASE("operator norm is adjoint invariant and 1 on unitaries") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const UnitaryMatrix u = haar_random_unitary(4, seed);
    CHECK(operator_norm(u.matrix()) == doctest::Approx(1.0).epsilon(1e-10));
    const Matrix m = u.matrix().topLeftCorner(3, 2);
    CHECK(operator_norm(m) ==
          doctest::Approx(operator_norm(m.adjoint())).epsilon(1e-12));
  }
}

TEST_CASE("minimum Hermitian eigenvalue") {
  CHECK(min_eigenvalue_hermitian(HermitianMatrix(Matrix::Identity(2, 2))) ==
        doctest::Approx(1.0).epsilon(1e-12));

  Matrix d2 = Matrix::Zero(2, 2);
  d2(0, 0) = 1.0;
  d2(1, 1) = -2.0;
  CHECK(min_eigenvalue_hermitian(HermitianMatrix(d2)) ==
        doctest::Approx(-2.0).epsilon(1e-12));

  Matrix skew(2, 2);
  skew << 0.0, 1.0, 2.0, 0.0;
  CHECK_THROWS_AS((HermitianMatrix{skew}), InvalidInputError);
}

TEST_CASE("unitary fractional power") {
  const UnitaryMatrix f4 = fourier_matrix(4);

  const UnitaryMatrix zero = unitary_fractional_power(f4, 0.0);
  CHECK((zero.matrix() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);

  const UnitaryMatrix one = unitary_fractional_power(f4, 1.0);
  CHECK((one.matrix() - f4.matrix()).cwiseAbs().maxCoeff() < 1e-10);

  const UnitaryMatrix f3 = fourier_matrix(3);
  const UnitaryMatrix half = unitary_fractional_power(f3, 0.5);
  CHECK((half.matrix() * half.matrix() - f3.matrix()).cwiseAbs().maxCoeff() <
        1e-9);
}

TEST_CASE("fractional power group property on [0,1]") {
  const UnitaryMatrix u = haar_random_unitary(3, 7);
  const double a = 0.3;
  const double b = 0.45;
  const Matrix lhs = unitary_fractional_power(u, a).matrix() *
                     unitary_fractional_power(u, b).matrix();
  const Matrix rhs = unitary_fractional_power(u, a + b).matrix();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("hermitian phase exponential") {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = std::acos(-1.0);
  const UnitaryMatrix at0 = hermitian_phase_exp(HermitianMatrix(h), 0.0);
  CHECK((at0.matrix() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  const UnitaryMatrix at1 = hermitian_phase_exp(HermitianMatrix(h), 1.0);
  CHECK(std::abs(at1.matrix()(0, 0) - Complex(-1.0, 0.0)) < 1e-12);
  CHECK(std::abs(at1.matrix()(1, 1) - Complex(1.0, 0.0)) < 1e-12);

  Matrix model(3, 3);
  model << 0, 1, 2, 1, 0, 2, 2, 2, 0;
  const UnitaryMatrix expo = hermitian_phase_exp(HermitianMatrix(model), 1.0);
  CHECK((expo.matrix().adjoint() * expo.matrix() - Matrix::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("haar sampling") {
  const UnitaryMatrix u1 = haar_random_unitary(1, 5);
  CHECK(std::abs(std::abs(u1.matrix()(0, 0)) - 1.0) < 1e-12);

  CHECK_THROWS_AS(haar_random_unitary(0, 1), InvalidInputError);

  // Construction already enforces the unitarity invariant; spot-check a
  // few dimensions anyway.
  for (int d = 2; d <= 6; ++d) {
    haar_random_unitary(d, 100 + d);
  }

  double mean = 0.0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    mean += std::norm(haar_random_unitary(2, 1000 + i).matrix()(0, 0));
  }
  mean /= samples;
  CHECK(mean == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("non-unitary input is rejected") {
  Matrix m = Matrix::Identity(3, 3) * 1.5;
  CHECK_THROWS_AS((UnitaryMatrix{m}), UnitarityError);
}
