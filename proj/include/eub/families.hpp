#pragma once

#include <string>
#include <vector>

#include "eub/bounds.hpp"
#include "eub/statelab.hpp"

namespace eub {

enum class FamilyId { f1_theta, f2_beta, f4_power, qubit3_theta, qutrit4_theta };

FamilyId family_from_string(const std::string& id);
std::string to_string(FamilyId id);

struct FamilySpec {
  FamilyId id;
  double parameter = 0.0;

  int dim() const;
  int count_l() const;  // 2 for pairwise families (identity partner included)
  /// Documented parameter range [lo, hi].
  std::pair<double, double> range() const;
};

/// The measurement set at one parameter value. Pairwise families come
/// back as {identity, U}; multi families as the full basis list.
MeasurementSet build_family(const FamilySpec& spec);

/// (F_d)_{jk} = exp(2 pi i jk / d) / sqrt(d), zero-based indices.
UnitaryMatrix fourier_matrix(int d);

/// The O_3 matrix used in the comparison table.
UnitaryMatrix o3_matrix();

struct SweepPoint {
  double parameter = 0.0;
  BoundReport report;
};

struct SweepOptions {
  bool with_optimal = true;    // OPT column for multi families
  int optimal_restarts = 64;
  std::uint64_t seed = 1;
};

/// Evenly spaced sweep, endpoints included. Pairwise families carry the
/// nine pairwise bounds; multi families additionally carry Multi (and
/// the pairwise columns assembled from all L(L-1)/2 pairs, each pair
/// bound summed and divided by L-1) and optionally OPT.
std::vector<SweepPoint> sweep(FamilyId id, double start, double end, int steps,
                              const SweepOptions& options = {});

}  // namespace eub
