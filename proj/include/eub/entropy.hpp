#pragma once

#include <vector>

#include "eub/errors.hpp"

namespace eub {

// Entries below this are treated as exact zeros (0 ln 0 = 0, 0^a = 0).
inline constexpr double kZeroCutoff = 1e-15;

/// Nonnegative weight vector; carrier for probability vectors, the
/// majorizing vectors Q and W, and their direct sums/tensor products.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> entries);

  const std::vector<double>& entries() const { return entries_; }
  double total() const { return total_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

  std::vector<double> sorted_descending() const;

  /// p (+) q, concatenation.
  static WeightVector direct_sum(const WeightVector& a, const WeightVector& b);
  /// p (x) q, all pairwise products.
  static WeightVector tensor(const WeightVector& a, const WeightVector& b);

 private:
  std::vector<double> entries_;
  double total_ = 0.0;
};

class EntropyOrder {
 public:
  explicit EntropyOrder(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// -sum w_i ln w_i in nats.
double shannon_entropy(const WeightVector& w);

/// (1-a)^-1 ln sum w_i^a; a = 0 gives ln(support size), a -> 1 Shannon.
double renyi_entropy(const WeightVector& w, EntropyOrder order);

/// (1-a)^-1 (sum w_i^a - 1); a -> 1 Shannon.
double tsallis_entropy(const WeightVector& w, EntropyOrder order);

/// True iff a majorizes b (equal totals required; zero-padded).
bool majorizes(const WeightVector& a, const WeightVector& b);

}  // namespace eub
