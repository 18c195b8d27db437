#include "eub/matrixcore.hpp"

#include <cmath>
#include <random>

namespace eub {

namespace {

void check_finite(const Matrix& m) {
  if (!m.allFinite()) {
    throw InvalidInputError("matrix contains non-finite entries");
  }
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(Matrix m, double unitarity_tolerance)
    : matrix_(std::move(m)), unitarity_tolerance_(unitarity_tolerance) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw InvalidInputError("unitary matrix must be square and nonempty");
  }
  check_finite(matrix_);
  const int d = dim();
  const double dev =
      (matrix_.adjoint() * matrix_ - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > unitarity_tolerance_) {
    throw UnitarityError("matrix is not unitary: max |U^dag U - I| = " +
                         std::to_string(dev));
  }
}

HermitianMatrix::HermitianMatrix(const Matrix& m, double tolerance) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvalidInputError("Hermitian matrix must be square and nonempty");
  }
  check_finite(m);
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tolerance) {
    throw InvalidInputError("matrix is not Hermitian: max |M - M^dag| = " +
                            std::to_string(dev));
  }
  matrix_ = (m + m.adjoint()) / 2.0;
}

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw InvalidInputError("operator norm of an empty matrix");
  }
  check_finite(m);
  if (m.rows() == 1 || m.cols() == 1) {
    return m.norm();
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double min_eigenvalue_hermitian(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("Hermitian eigensolver failed");
  }
  return solver.eigenvalues()(0);
}

UnitaryMatrix unitary_fractional_power(const UnitaryMatrix& u, double beta) {
  // A unitary is normal, so its Schur form is diagonal; the Schur basis
  // gives an orthonormal eigenbasis even with degenerate eigenvalues.
  Eigen::ComplexSchur<Matrix> schur(u.matrix());
  if (schur.info() != Eigen::Success) {
    throw NumericError("Schur decomposition failed");
  }
  const Matrix& q = schur.matrixU();
  const Matrix& t = schur.matrixT();
  const int d = u.dim();
  CVector phases(d);
  for (int j = 0; j < d; ++j) {
    const double theta = std::arg(t(j, j));  // principal branch (-pi, pi]
    phases(j) = std::polar(1.0, beta * theta);
  }
  return UnitaryMatrix(q * phases.asDiagonal() * q.adjoint(),
                       u.unitarity_tolerance());
}

UnitaryMatrix hermitian_phase_exp(const HermitianMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericError("Hermitian eigensolver failed");
  }
  const int d = h.dim();
  CVector phases(d);
  for (int j = 0; j < d; ++j) {
    phases(j) = std::polar(1.0, t * solver.eigenvalues()(j));
  }
  const Matrix& v = solver.eigenvectors();
  return UnitaryMatrix(v * phases.asDiagonal() * v.adjoint());
}

UnitaryMatrix haar_random_unitary(int d, std::uint64_t seed) {
  if (d < 1) {
    throw InvalidInputError("dimension must be at least 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge so the distribution is Haar (Mezzadri's recipe).
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mod = std::abs(rjj);
    if (mod > 0) {
      q.col(j) *= rjj / mod;
    }
  }
  return UnitaryMatrix(std::move(q));
}

UnitaryMatrix identity_unitary(int d) {
  return UnitaryMatrix(Matrix::Identity(d, d));
}

}  // namespace eub
