#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "eub/errors.hpp"

namespace eub {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// A validated d x d unitary basis change, U_ij = <a_i|b_j>.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m, double unitarity_tolerance = 1e-8);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  double unitarity_tolerance() const { return unitarity_tolerance_; }

 private:
  Matrix matrix_;
  double unitarity_tolerance_;
};

/// Hermitian matrix; the stored copy is symmetrized as (m + m^dag)/2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& m, double tolerance = 1e-10);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

/// Largest singular value of m.
double operator_norm(const Matrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue_hermitian(const HermitianMatrix& m);

/// u^beta with eigenphases taken on the principal branch (-pi, pi].
UnitaryMatrix unitary_fractional_power(const UnitaryMatrix& u, double beta);

/// exp(i t h) for Hermitian h.
UnitaryMatrix hermitian_phase_exp(const HermitianMatrix& h, double t);

/// Haar-distributed random unitary (Ginibre + QR with phase fix),
/// deterministic for a fixed seed.
UnitaryMatrix haar_random_unitary(int d, std::uint64_t seed);

UnitaryMatrix identity_unitary(int d);

}  // namespace eub
