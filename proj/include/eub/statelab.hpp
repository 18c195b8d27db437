#pragma once

#include <cstdint>
#include <vector>

#include "eub/entropy.hpp"
#include "eub/matrixcore.hpp"

namespace eub {

class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

class PureState {
 public:
  explicit PureState(CVector amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const CVector& amplitudes() const { return amplitudes_; }
  DensityMatrix density() const;

 private:
  CVector amplitudes_;
};

/// L >= 1 measurement bases sharing one dimension; the first one is
/// conventionally the identity in the pairwise setting.
struct MeasurementSet {
  int dim = 0;
  std::vector<UnitaryMatrix> unitaries;

  static MeasurementSet of(std::vector<UnitaryMatrix> us);
  int count() const { return static_cast<int>(unitaries.size()); }
};

/// q_j = <b_j| rho |b_j> with |b_j> the j-th column of u.
WeightVector measurement_probabilities(const DensityMatrix& rho,
                                       const UnitaryMatrix& u);

/// S(rho) = -Tr rho ln rho, in nats.
double von_neumann_entropy(const DensityMatrix& rho);

/// Sum over the set of H_alpha of the outcome distributions.
double entropy_sum(const DensityMatrix& rho, const MeasurementSet& ms,
                   EntropyOrder order = EntropyOrder(1.0));

/// Multi-start simplex minimization of entropy_sum over pure states.
/// Batches of `restarts` starts are doubled until two consecutive
/// batches agree within 1e-8, capped at 512 total starts.
double optimal_bound_numeric(const MeasurementSet& ms, int restarts,
                             std::uint64_t seed);

/// Minimum over sampled pure and mixed states of
/// entropy_sum - bound - [S(rho) if the bound carries the state term].
/// A value >= -1e-9 certifies that no violation was found.
double validity_margin(const MeasurementSet& ms, double bound_nats,
                       int samples, std::uint64_t seed,
                       bool bound_includes_state_entropy = false,
                       EntropyOrder order = EntropyOrder(1.0));

PureState random_pure_state(int d, std::uint64_t seed);

/// Hilbert-Schmidt distributed mixed state (partial trace of a Haar
/// pure state on a d x d bipartite space).
DensityMatrix random_density_matrix(int d, std::uint64_t seed);

}  // namespace eub
