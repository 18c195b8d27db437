#include "eub/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace eub {

namespace {

/// Q sorted descending, zero-padded to length n.
std::vector<double> padded_descending(const MajorizingVector& q,
                                      std::size_t n) {
  std::vector<double> out = q.weights.sorted_descending();
  out.resize(n, 0.0);
  return out;
}

}  // namespace

double bound_deutsch(const OverlapVector& c) {
  return -2.0 * std::log(c.big_c());
}

double bound_maassen_uffink(const OverlapVector& c) { return -std::log(c.c1()); }

double bound_cp1(const OverlapVector& c) {
  const double c2 = c.c2();
  if (c2 < kZeroCutoff) {
    // c2 = 0 forces c1 = 1: a single nonzero overlap per row and column.
    return 0.0;
  }
  return -std::log(c.c1()) + (1.0 - c.big_c()) * std::log(c.c1() / c2);
}

HermitianMatrix cp2_delta_matrix(const UnitaryMatrix& u, double kappa) {
  const Matrix& m = u.matrix();
  const int d = u.dim();
  Eigen::VectorXd log_row_max(d);
  Eigen::VectorXd log_col_max(d);
  for (int i = 0; i < d; ++i) {
    log_row_max(i) = std::log(m.row(i).cwiseAbs().maxCoeff());
    log_col_max(i) = std::log(m.col(i).cwiseAbs().maxCoeff());
  }
  Matrix delta = kappa * log_row_max.asDiagonal().toDenseMatrix().cast<Complex>() +
                 (1.0 - kappa) *
                     (m * log_col_max.cast<Complex>().asDiagonal() * m.adjoint());
  return HermitianMatrix((delta + delta.adjoint()) / 2.0);
}

double bound_cp2(const UnitaryMatrix& u, double* kappa_star) {
  const auto objective = [&u](double kappa) {
    const HermitianMatrix delta = cp2_delta_matrix(u, kappa);
    return min_eigenvalue_hermitian(HermitianMatrix(-2.0 * delta.matrix()));
  };

  // lambda_min of a Hermitian pencil affine in kappa is concave, so
  // golden-section search converges; the grid is a safety net.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0;
  double b = 1.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = objective(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = objective(x1);
    }
  }
  double best_kappa = (a + b) / 2.0;
  double best = objective(best_kappa);

  for (int i = 0; i <= 100; ++i) {
    const double kappa = i / 100.0;
    const double v = objective(kappa);
    if (v > best) {
      best = v;
      best_kappa = kappa;
    }
  }
  if (kappa_star != nullptr) {
    *kappa_star = best_kappa;
  }
  return best;
}

double bound_rpz1(const OverlapVector& c, const MajorizingVector& q,
                  double state_entropy) {
  const std::vector<double> qd = padded_descending(q, c.c.size());
  double dot = 0.0;
  for (std::size_t i = 0; i < qd.size(); ++i) {
    dot += qd[i] * c.c[i];
  }
  return -std::log(dot) + state_entropy;
}

double bound_rpz2(const OverlapVector& c, double state_entropy) {
  const double c_sq = c.big_c() * c.big_c();
  return -std::log(c.c1() * c_sq + c.c2() * (1.0 - c_sq)) + state_entropy;
}

double bound_rpz3(const UnitaryMatrix& u, const MajorizingVector& q,
                  double state_entropy) {
  const int d = u.dim();
  const std::size_t dsq = static_cast<std::size_t>(d) * d;
  const std::vector<double> qd = padded_descending(q, dsq);

  Eigen::MatrixXd sq = u.matrix().cwiseAbs2().real();
  std::vector<double> g;
  g.reserve(dsq);
  std::vector<double> h(dsq);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      // h_kl: values |U_kj|^2 |U_il|^2 over pairs (i,j), sorted descending.
      std::size_t idx = 0;
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          h[idx++] = sq(k, j) * sq(i, l);
        }
      }
      std::sort(h.begin(), h.end(), std::greater<double>());
      double dot = 0.0;
      for (std::size_t i = 0; i < dsq; ++i) {
        dot += qd[i] * h[i];
      }
      g.push_back(-std::log(dot));
    }
  }
  // Pair Q descending with g ascending: the minimum of the linear form
  // over permutations of Q, hence over everything Q majorizes.
  std::sort(g.begin(), g.end());
  double acc = 0.0;
  for (std::size_t i = 0; i < dsq; ++i) {
    acc += qd[i] * g[i];
  }
  return 0.5 * acc + state_entropy;
}

double bound_maj1(const MajorizingVector& q, EntropyOrder order) {
  return renyi_entropy(q.weights, order);
}

double bound_maj2(const MajorizingVector& w, EntropyOrder order) {
  const double a = order.alpha();
  if (a <= 1.0) {
    return renyi_entropy(w.weights, order);
  }
  double sum = 0.0;
  for (double x : w.weights.entries()) {
    if (x > kZeroCutoff) {
      sum += std::pow(x, a);
    }
  }
  return 2.0 / (1.0 - a) * std::log((1.0 + sum) / 2.0);
}

double bound_tsallis_pair(const MajorizingVector& w, EntropyOrder order) {
  return tsallis_entropy(w.weights, order);
}

double bound_multi_shannon(const MajorizingVector& mv) {
  double h = 0.0;
  const auto& e = mv.weights.entries();
  // The leading unit entry contributes -1 ln 1 = 0.
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] > kZeroCutoff) {
      h -= e[i] * std::log(e[i]);
    }
  }
  return h;
}

double bound_multi_tsallis(const MajorizingVector& mv, EntropyOrder order,
                           int count_l) {
  const double a = order.alpha();
  if (std::abs(a - 1.0) < 1e-9) {
    return bound_multi_shannon(mv);
  }
  double sum = 0.0;
  for (double x : mv.weights.entries()) {
    if (x > kZeroCutoff) {
      sum += std::pow(x, a);
    }
  }
  if (a == 0.0) {
    return sum - count_l;
  }
  return (sum - count_l) / (1.0 - a);
}

BoundReport pairwise_report(const UnitaryMatrix& u, double state_entropy) {
  const OverlapVector c = overlap_vector(u);
  const SingularProfile profile = sk_profile(u);
  const MajorizingVector w = direct_sum_vector(profile);
  const std::vector<MajorizingVector> majorants =
      closed_form_majorants(c, profile);
  const MajorizingVector& qd = find_majorant(majorants, MajorantLabel::Qd);

  BoundReport report;
  report.state_entropy = state_entropy;
  report.rpz_q_label = to_string(MajorantLabel::Qd);
  const EntropyOrder shannon(1.0);

  report.values["D"] = bound_deutsch(c);
  report.values["MU"] = bound_maassen_uffink(c);
  report.values["CP1"] = bound_cp1(c);
  double kappa_star = 0.0;
  report.values["CP2"] = bound_cp2(u, &kappa_star);
  report.parameters["kappa_star"] = kappa_star;
  report.values["RPZ1"] = bound_rpz1(c, qd, state_entropy);
  report.values["RPZ2"] = bound_rpz2(c, state_entropy);
  report.values["RPZ3"] = bound_rpz3(u, qd, state_entropy);
  report.values["Maj1"] = bound_maj1(qd, shannon);
  report.values["Maj2"] = bound_maj2(w, shannon);
  return report;
}

BoundReport multi_report(const std::vector<UnitaryMatrix>& us) {
  const SingularProfile profile = multi_profile(us);
  const MajorizingVector mv = multi_majorizing_vector(profile);
  BoundReport report;
  report.values["Multi"] = bound_multi_shannon(mv);
  report.values["MultiTsallis"] =
      bound_multi_tsallis(mv, EntropyOrder(2.0), static_cast<int>(us.size()));
  report.parameters["alpha_tsallis"] = 2.0;
  return report;
}

}  // namespace eub
