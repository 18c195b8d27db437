#include "eub/statelab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace eub {

DensityMatrix::DensityMatrix(const Matrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InvalidInputError("density matrix must be square and nonempty");
  }
  if (!m.allFinite()) {
    throw InvalidInputError("density matrix has non-finite entries");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidInputError("density matrix is not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > 1e-10 ||
      std::abs(m.trace().imag()) > 1e-10) {
    throw InvalidInputError("density matrix trace must be 1");
  }
  matrix_ = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw InvalidInputError("density matrix has a negative eigenvalue");
  }
}

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0 || !amplitudes_.allFinite()) {
    throw InvalidInputError("pure state must be nonempty and finite");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw InvalidInputError("pure state must have unit norm");
  }
}

DensityMatrix PureState::density() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint());
}

MeasurementSet MeasurementSet::of(std::vector<UnitaryMatrix> us) {
  if (us.empty()) {
    throw InvalidInputError("measurement set needs at least one basis");
  }
  const int d = us[0].dim();
  for (const UnitaryMatrix& u : us) {
    if (u.dim() != d) {
      throw InvalidInputError("measurement set dimension mismatch");
    }
  }
  return MeasurementSet{d, std::move(us)};
}

WeightVector measurement_probabilities(const DensityMatrix& rho,
                                       const UnitaryMatrix& u) {
  if (rho.dim() != u.dim()) {
    throw InvalidInputError("state/measurement dimension mismatch");
  }
  const int d = u.dim();
  std::vector<double> p(d);
  for (int j = 0; j < d; ++j) {
    const auto col = u.matrix().col(j);
    p[j] = (col.adjoint() * rho.matrix() * col)(0, 0).real();
  }
  return WeightVector(std::move(p));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix(),
                                               Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > kZeroCutoff) {
      s -= lambda * std::log(lambda);
    }
  }
  return std::max(0.0, s);
}

double entropy_sum(const DensityMatrix& rho, const MeasurementSet& ms,
                   EntropyOrder order) {
  double total = 0.0;
  for (const UnitaryMatrix& u : ms.unitaries) {
    total += renyi_entropy(measurement_probabilities(rho, u), order);
  }
  return total;
}

namespace {

/// entropy_sum evaluated on the normalized complex vector packed as 2d
/// reals. Fast path that skips the DensityMatrix detour.
double entropy_sum_packed(const std::vector<double>& x,
                          const MeasurementSet& ms, EntropyOrder order) {
  const int d = ms.dim;
  CVector psi(d);
  for (int i = 0; i < d; ++i) {
    psi(i) = Complex(x[2 * i], x[2 * i + 1]);
  }
  const double norm = psi.norm();
  if (norm < 1e-8) {
    return std::numeric_limits<double>::max();
  }
  psi /= norm;
  double total = 0.0;
  std::vector<double> p(d);
  for (const UnitaryMatrix& u : ms.unitaries) {
    const CVector amp = u.matrix().adjoint() * psi;
    for (int j = 0; j < d; ++j) {
      p[j] = std::norm(amp(j));
    }
    total += renyi_entropy(WeightVector(p), order);
  }
  return total;
}

/// Nelder-Mead on n real parameters.
double nelder_mead(std::vector<double> start,
                   const std::function<double(const std::vector<double>&)>& f) {
  const std::size_t n = start.size();
  const double alpha = 1.0, gamma = 2.0, rho_c = 0.5, sigma = 0.5;
  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += 0.25;
  }
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = f(simplex[i]);
  }
  std::vector<std::size_t> order(n + 1);
  const std::size_t max_iter = 400 * n;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    for (std::size_t i = 0; i <= n; ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&fv](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    if (fv[order[n]] - fv[order[0]] < 1e-12) {
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        centroid[j] += simplex[order[i]][j] / static_cast<double>(n);
      }
    }
    const std::size_t worst = order[n];
    std::vector<double> refl(n);
    for (std::size_t j = 0; j < n; ++j) {
      refl[j] = centroid[j] + alpha * (centroid[j] - simplex[worst][j]);
    }
    const double f_refl = f(refl);
    if (f_refl < fv[order[0]]) {
      std::vector<double> exp_pt(n);
      for (std::size_t j = 0; j < n; ++j) {
        exp_pt[j] = centroid[j] + gamma * (refl[j] - centroid[j]);
      }
      const double f_exp = f(exp_pt);
      if (f_exp < f_refl) {
        simplex[worst] = std::move(exp_pt);
        fv[worst] = f_exp;
      } else {
        simplex[worst] = std::move(refl);
        fv[worst] = f_refl;
      }
    } else if (f_refl < fv[order[n - 1]]) {
      simplex[worst] = std::move(refl);
      fv[worst] = f_refl;
    } else {
      std::vector<double> contr(n);
      for (std::size_t j = 0; j < n; ++j) {
        contr[j] = centroid[j] + rho_c * (simplex[worst][j] - centroid[j]);
      }
      const double f_contr = f(contr);
      if (f_contr < fv[worst]) {
        simplex[worst] = std::move(contr);
        fv[worst] = f_contr;
      } else {
        const std::size_t best = order[0];
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            simplex[i][j] =
                simplex[best][j] + sigma * (simplex[i][j] - simplex[best][j]);
          }
          fv[i] = f(simplex[i]);
        }
      }
    }
  }
  return *std::min_element(fv.begin(), fv.end());
}

CVector gaussian_vector(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(d);
  for (int i = 0; i < d; ++i) {
    v(i) = Complex(normal(rng), normal(rng));
  }
  return v;
}

}  // namespace

double optimal_bound_numeric(const MeasurementSet& ms, int restarts,
                             std::uint64_t seed) {
  if (restarts < 1) {
    throw InvalidInputError("restarts must be at least 1");
  }
  const EntropyOrder shannon(1.0);
  const auto objective = [&ms, &shannon](const std::vector<double>& x) {
    return entropy_sum_packed(x, ms, shannon);
  };

  const int cap = 512;
  int done = 0;
  double best = std::numeric_limits<double>::max();
  double prev_batch_best = std::numeric_limits<double>::max();
  while (done < cap) {
    double batch_best = std::numeric_limits<double>::max();
    for (int r = 0; r < restarts && done < cap; ++r, ++done) {
      // Per-task seed keeps results independent of batching.
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(done));
      const CVector psi = gaussian_vector(ms.dim, rng).normalized();
      std::vector<double> start(2 * ms.dim);
      for (int i = 0; i < ms.dim; ++i) {
        start[2 * i] = psi(i).real();
        start[2 * i + 1] = psi(i).imag();
      }
      batch_best = std::min(batch_best, nelder_mead(std::move(start), objective));
    }
    best = std::min(best, batch_best);
    if (std::abs(batch_best - prev_batch_best) < 1e-8) {
      break;
    }
    prev_batch_best = batch_best;
  }
  return best;
}

double validity_margin(const MeasurementSet& ms, double bound_nats,
                       int samples, std::uint64_t seed,
                       bool bound_includes_state_entropy, EntropyOrder order) {
  if (samples < 1) {
    throw InvalidInputError("samples must be at least 1");
  }
  double margin = std::numeric_limits<double>::max();
  for (int i = 0; i < samples; ++i) {
    const std::uint64_t task_seed = seed + static_cast<std::uint64_t>(i);
    double h;
    double state_term = 0.0;
    if (i % 2 == 0) {
      const PureState psi = random_pure_state(ms.dim, task_seed);
      h = entropy_sum(psi.density(), ms, order);
    } else {
      const DensityMatrix rho = random_density_matrix(ms.dim, task_seed);
      h = entropy_sum(rho, ms, order);
      if (bound_includes_state_entropy) {
        state_term = von_neumann_entropy(rho);
      }
    }
    margin = std::min(margin, h - bound_nats - state_term);
  }
  return margin;
}

PureState random_pure_state(int d, std::uint64_t seed) {
  if (d < 1) {
    throw InvalidInputError("dimension must be at least 1");
  }
  std::mt19937_64 rng(seed);
  return PureState(gaussian_vector(d, rng).normalized());
}

DensityMatrix random_density_matrix(int d, std::uint64_t seed) {
  if (d < 1) {
    throw InvalidInputError("dimension must be at least 1");
  }
  std::mt19937_64 rng(seed);
  Matrix x(d, d);
  for (int i = 0; i < d; ++i) {
    x.row(i) = gaussian_vector(d, rng).transpose();
  }
  Matrix rho = x * x.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

}  // namespace eub
