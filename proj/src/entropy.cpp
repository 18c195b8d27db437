#include "eub/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eub {

WeightVector::WeightVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  for (double& e : entries_) {
    if (!std::isfinite(e) || e < -1e-12) {
      throw InvalidInputError("weight vector entries must be nonnegative");
    }
    if (e < 0.0) {
      e = 0.0;
    }
  }
  total_ = std::accumulate(entries_.begin(), entries_.end(), 0.0);
}

std::vector<double> WeightVector::sorted_descending() const {
  std::vector<double> out = entries_;
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

WeightVector WeightVector::direct_sum(const WeightVector& a,
                                      const WeightVector& b) {
  std::vector<double> out = a.entries_;
  out.insert(out.end(), b.entries_.begin(), b.entries_.end());
  return WeightVector(std::move(out));
}

WeightVector WeightVector::tensor(const WeightVector& a,
                                  const WeightVector& b) {
  std::vector<double> out;
  out.reserve(a.size() * b.size());
  for (double x : a.entries_) {
    for (double y : b.entries_) {
      out.push_back(x * y);
    }
  }
  return WeightVector(std::move(out));
}

EntropyOrder::EntropyOrder(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw InvalidInputError("entropy order must be finite and nonnegative");
  }
}

double shannon_entropy(const WeightVector& w) {
  double h = 0.0;
  for (double x : w.entries()) {
    if (x > kZeroCutoff) {
      h -= x * std::log(x);
    }
  }
  return h;
}

double renyi_entropy(const WeightVector& w, EntropyOrder order) {
  const double a = order.alpha();
  if (std::abs(a - 1.0) < 1e-9) {
    return shannon_entropy(w);
  }
  if (a == 0.0) {
    std::size_t support = 0;
    for (double x : w.entries()) {
      if (x > kZeroCutoff) {
        ++support;
      }
    }
    return std::log(static_cast<double>(support));
  }
  double sum = 0.0;
  for (double x : w.entries()) {
    if (x > kZeroCutoff) {
      sum += std::pow(x, a);
    }
  }
  return std::log(sum) / (1.0 - a);
}

double tsallis_entropy(const WeightVector& w, EntropyOrder order) {
  const double a = order.alpha();
  if (std::abs(a - 1.0) < 1e-9) {
    return shannon_entropy(w);
  }
  double sum = 0.0;
  for (double x : w.entries()) {
    if (x > kZeroCutoff) {
      sum += std::pow(x, a);
    }
  }
  if (a == 0.0) {
    // 0^0 = 0 convention: zeros do not count toward the support.
    return sum - 1.0;
  }
  return (sum - 1.0) / (1.0 - a);
}

bool majorizes(const WeightVector& a, const WeightVector& b) {
  if (std::abs(a.total() - b.total()) > 1e-9) {
    throw InvalidInputError("majorization requires equal totals");
  }
  std::vector<double> x = a.sorted_descending();
  std::vector<double> y = b.sorted_descending();
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, 0.0);
  y.resize(n, 0.0);
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    if (sx < sy - 1e-10) {
      return false;
    }
  }
  return true;
}

}  // namespace eub
