#pragma once

#include <string>
#include <vector>

#include "eub/entropy.hpp"
#include "eub/matrixcore.hpp"

namespace eub {

/// Squared moduli |U_ij|^2 sorted in decreasing order (length d^2).
struct OverlapVector {
  int dim = 0;
  WeightVector c;

  double c1() const { return c[0]; }
  double c2() const { return c.size() > 1 ? c[1] : 0.0; }
  /// C = (1 + sqrt(c1)) / 2.
  double big_c() const;
};

enum class ProfileKind { pairwise, multi };

/// Sequence of maximal submatrix singular values: s_1..s_d for a single
/// unitary, or the squared-norm sequence S_0..S_{dL-1} for L unitaries.
struct SingularProfile {
  ProfileKind kind = ProfileKind::pairwise;
  int dim = 0;
  int count_l = 1;
  std::vector<double> values;
};

enum class MajorantLabel { W, W1, W2, Q0, Q1, Qd, multi };

std::string to_string(MajorantLabel label);

struct MajorizingVector {
  MajorantLabel label;
  WeightVector weights;
};

OverlapVector overlap_vector(const UnitaryMatrix& u);

/// s_k = max operator norm over all submatrices with #rows + #cols = k+1,
/// by exhaustive enumeration. Errors out above the dimension cap; the
/// bounds need exact maxima, so there is no heuristic fallback.
SingularProfile sk_profile(const UnitaryMatrix& u, int dim_cap = 8);

/// W = (s_1, s_2 - s_1, ..., s_d - s_{d-1}).
MajorizingVector direct_sum_vector(const SingularProfile& profile);

/// Q^(0), Q^(1), Q^(d-1), W^(1), W^(2) for one unitary.
std::vector<MajorizingVector> closed_form_majorants(
    const OverlapVector& c, const SingularProfile& profile);

const MajorizingVector& find_majorant(const std::vector<MajorizingVector>& ms,
                                      MajorantLabel label);

/// S_k = max sigma_1^2 over all (k+1)-subsets of the dL concatenated
/// columns, k = 0..dL-1.
SingularProfile multi_profile(const std::vector<UnitaryMatrix>& us,
                              int col_cap = 16);

/// (1, S_1 - 1, S_2 - S_1, ...), total L.
MajorizingVector multi_majorizing_vector(const SingularProfile& profile);

}  // namespace eub
