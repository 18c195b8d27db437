#pragma once

#include <map>
#include <string>

#include "eub/majorants.hpp"

namespace eub {

/// Map from bound identifier to value in nats plus run metadata.
struct BoundReport {
  std::map<std::string, double> values;
  double state_entropy = 0.0;  // S(rho), 0 for pure states
  std::map<std::string, double> parameters;  // e.g. kappa* for CP2
  std::string rpz_q_label;                   // Q used for RPZ1/RPZ3
  std::string unit_hint = "nats";            // presentation only
};

/// B_D = -2 ln C, C = (1 + sqrt(c1))/2.
double bound_deutsch(const OverlapVector& c);

/// B_MU = -ln c1.
double bound_maassen_uffink(const OverlapVector& c);

/// B_CP1 = -ln c1 + (1 - C) ln(c1/c2).
double bound_cp1(const OverlapVector& c);

/// The Delta matrix of the Coles-Piani implicit bound at mixing kappa.
HermitianMatrix cp2_delta_matrix(const UnitaryMatrix& u, double kappa);

/// B_CP2 = max over kappa in [0,1] of lambda_min(-2 Delta(kappa)).
/// Golden-section search (lambda_min is concave in kappa) cross-checked
/// against a 101-point grid; kappa_star receives the maximizer if non-null.
double bound_cp2(const UnitaryMatrix& u, double* kappa_star = nullptr);

/// B_RPZ1 = -ln(Q . c) + S(rho), Q sorted descending and zero-padded.
double bound_rpz1(const OverlapVector& c, const MajorizingVector& q,
                  double state_entropy = 0.0);

/// B_RPZ2 = -ln(c1 C^2 + c2 (1 - C^2)) + S(rho).
double bound_rpz2(const OverlapVector& c, double state_entropy = 0.0);

/// B_RPZ3: two-sorting bound. Lower-bounds the average of -ln(Q . h_kl)
/// by pairing descending-sorted Q with ascending-sorted values, the
/// minimizing rearrangement over {r : r majorized by Q}.
double bound_rpz3(const UnitaryMatrix& u, const MajorizingVector& q,
                  double state_entropy = 0.0);

/// B_Maj1 = H_alpha(Q^(d-1)).
double bound_maj1(const MajorizingVector& q, EntropyOrder order);

/// B_Maj2 = H_alpha(W) for alpha <= 1; for alpha > 1 the weaker
/// 2/(1-alpha) ln((1 + sum W_i^alpha)/2).
double bound_maj2(const MajorizingVector& w, EntropyOrder order);

/// T_alpha(W), valid for any alpha >= 0.
double bound_tsallis_pair(const MajorizingVector& w, EntropyOrder order);

/// Shannon bound for L measurements from the multi majorizing vector.
double bound_multi_shannon(const MajorizingVector& mv);

/// Tsallis analogue: (1-a)^-1 (sum mv_i^a - L).
double bound_multi_tsallis(const MajorizingVector& mv, EntropyOrder order,
                           int count_l);

/// All pairwise bounds for one unitary, sharing one s_k search.
BoundReport pairwise_report(const UnitaryMatrix& u, double state_entropy = 0.0);

/// Multi-measurement report (Multi and MultiTsallis at alpha = 2).
BoundReport multi_report(const std::vector<UnitaryMatrix>& us);

}  // namespace eub
