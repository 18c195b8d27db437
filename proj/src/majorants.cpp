#include "eub/majorants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace eub {

namespace {

std::vector<double> clamped_differences(const std::vector<double>& cumulative) {
  std::vector<double> out(cumulative.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < cumulative.size(); ++i) {
    out[i] = std::max(0.0, cumulative[i] - prev);
    prev = cumulative[i];
  }
  return out;
}

Matrix select_submatrix(const Matrix& m, unsigned row_mask, unsigned col_mask) {
  const int nr = std::popcount(row_mask);
  const int nc = std::popcount(col_mask);
  Matrix sub(nr, nc);
  int r = 0;
  for (int i = 0; i < m.rows(); ++i) {
    if (!(row_mask & (1u << i))) {
      continue;
    }
    int c = 0;
    for (int j = 0; j < m.cols(); ++j) {
      if (col_mask & (1u << j)) {
        sub(r, c++) = m(i, j);
      }
    }
    ++r;
  }
  return sub;
}

}  // namespace

double OverlapVector::big_c() const { return (1.0 + std::sqrt(c1())) / 2.0; }

std::string to_string(MajorantLabel label) {
  switch (label) {
    case MajorantLabel::W:
      return "W";
    case MajorantLabel::W1:
      return "W1";
    case MajorantLabel::W2:
      return "W2";
    case MajorantLabel::Q0:
      return "Q0";
    case MajorantLabel::Q1:
      return "Q1";
    case MajorantLabel::Qd:
      return "Qd";
    case MajorantLabel::multi:
      return "multi";
  }
  return "?";
}

OverlapVector overlap_vector(const UnitaryMatrix& u) {
  const Matrix& m = u.matrix();
  std::vector<double> sq;
  sq.reserve(static_cast<std::size_t>(u.dim()) * u.dim());
  for (int i = 0; i < u.dim(); ++i) {
    for (int j = 0; j < u.dim(); ++j) {
      sq.push_back(std::norm(m(i, j)));
    }
  }
  std::sort(sq.begin(), sq.end(), std::greater<double>());
  return OverlapVector{u.dim(), WeightVector(std::move(sq))};
}

SingularProfile sk_profile(const UnitaryMatrix& u, int dim_cap) {
  const int d = u.dim();
  if (d > dim_cap) {
    throw SizeLimitError("sk_profile: dimension " + std::to_string(d) +
                         " exceeds the exhaustive-search cap " +
                         std::to_string(dim_cap));
  }
  std::vector<double> s(d, 0.0);
  const unsigned full = (1u << d) - 1u;
  // sigma_1(M) = sigma_1(M^dag), so only row count >= column count.
  for (unsigned rows = 1; rows <= full; ++rows) {
    const int nr = std::popcount(rows);
    for (unsigned cols = 1; cols <= full; ++cols) {
      const int nc = std::popcount(cols);
      if (nc > nr) {
        continue;
      }
      const int k = nr + nc - 1;
      if (k > d) {
        continue;
      }
      s[k - 1] = std::max(s[k - 1],
                          operator_norm(select_submatrix(u.matrix(), rows, cols)));
    }
  }
  // s_k is nondecreasing by construction of the classes, enforce exactly.
  for (int k = 1; k < d; ++k) {
    s[k] = std::max(s[k], s[k - 1]);
  }
  return SingularProfile{ProfileKind::pairwise, d, 1, std::move(s)};
}

MajorizingVector direct_sum_vector(const SingularProfile& profile) {
  if (profile.kind != ProfileKind::pairwise) {
    throw InvalidInputError("direct_sum_vector expects a pairwise profile");
  }
  return MajorizingVector{MajorantLabel::W,
                          WeightVector(clamped_differences(profile.values))};
}

std::vector<MajorizingVector> closed_form_majorants(
    const OverlapVector& c, const SingularProfile& profile) {
  if (profile.kind != ProfileKind::pairwise || profile.dim != c.dim) {
    throw InvalidInputError("closed_form_majorants: mismatched inputs");
  }
  const int d = c.dim;
  const double c1 = c.c1();
  const double c2 = c.c2();
  const double big_c = c.big_c();

  std::vector<MajorizingVector> out;

  std::vector<double> q0(d, 0.0);
  q0[0] = 1.0;
  out.push_back({MajorantLabel::Q0, WeightVector(q0)});

  std::vector<double> q1(d, 0.0);
  q1[0] = big_c * big_c;
  if (d > 1) {
    q1[1] = 1.0 - big_c * big_c;
  }
  out.push_back({MajorantLabel::Q1, WeightVector(q1)});

  std::vector<double> r(d);
  for (int i = 0; i < d; ++i) {
    const double v = (1.0 + profile.values[i]) / 2.0;
    r[i] = v * v;
  }
  out.push_back({MajorantLabel::Qd, WeightVector(clamped_differences(r))});

  const double sqrt_c1 = std::sqrt(c1);
  std::vector<double> w1(d, 0.0);
  w1[0] = sqrt_c1;
  if (d > 1) {
    w1[1] = 1.0 - sqrt_c1;
  }
  out.push_back({MajorantLabel::W1, WeightVector(w1)});

  // t clamped at 1: s_k <= 1 always, and the raw formula goes negative
  // whenever c1 + c2 > 1.
  const double t = std::min(1.0, std::sqrt(c1 + c2));
  std::vector<double> w2(d, 0.0);
  w2[0] = sqrt_c1;
  if (d > 1) {
    w2[1] = t - sqrt_c1;
  }
  if (d > 2) {
    w2[2] = 1.0 - t;
  }
  out.push_back({MajorantLabel::W2, WeightVector(w2)});

  return out;
}

const MajorizingVector& find_majorant(const std::vector<MajorizingVector>& ms,
                                      MajorantLabel label) {
  for (const MajorizingVector& m : ms) {
    if (m.label == label) {
      return m;
    }
  }
  throw InvalidInputError("majorant " + to_string(label) + " not present");
}

SingularProfile multi_profile(const std::vector<UnitaryMatrix>& us,
                              int col_cap) {
  if (us.empty()) {
    throw InvalidInputError("multi_profile: empty measurement list");
  }
  const int d = us[0].dim();
  for (const UnitaryMatrix& u : us) {
    if (u.dim() != d) {
      throw InvalidInputError("multi_profile: dimension mismatch");
    }
  }
  const int l = static_cast<int>(us.size());
  const int total_cols = d * l;
  if (total_cols > col_cap) {
    throw SizeLimitError("multi_profile: " + std::to_string(total_cols) +
                         " columns exceed the exhaustive-search cap " +
                         std::to_string(col_cap));
  }

  Matrix all(d, total_cols);
  for (int j = 0; j < l; ++j) {
    all.block(0, j * d, d, d) = us[j].matrix();
  }

  std::vector<double> cal_s(total_cols, 0.0);
  const unsigned full = (1u << total_cols) - 1u;
  for (unsigned mask = 1; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    Matrix sub(d, size);
    int c = 0;
    for (int j = 0; j < total_cols; ++j) {
      if (mask & (1u << j)) {
        sub.col(c++) = all.col(j);
      }
    }
    const double sigma = operator_norm(sub);
    cal_s[size - 1] = std::max(cal_s[size - 1], sigma * sigma);
  }
  for (int k = 1; k < total_cols; ++k) {
    cal_s[k] = std::max(cal_s[k], cal_s[k - 1]);
  }
  return SingularProfile{ProfileKind::multi, d, l, std::move(cal_s)};
}

MajorizingVector multi_majorizing_vector(const SingularProfile& profile) {
  if (profile.kind != ProfileKind::multi) {
    throw InvalidInputError("multi_majorizing_vector expects a multi profile");
  }
  std::vector<double> out(profile.values.size());
  out[0] = 1.0;
  for (std::size_t i = 1; i < profile.values.size(); ++i) {
    out[i] = std::max(0.0, profile.values[i] - profile.values[i - 1]);
  }
  return MajorizingVector{MajorantLabel::multi, WeightVector(std::move(out))};
}

}  // namespace eub
