#include "eub/families.hpp"

#include <cmath>
#include <numbers>

namespace eub {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix o3_raw() {
  Matrix m(3, 3);
  const double r6 = std::sqrt(6.0);
  m << std::sqrt(2.0) / r6, std::sqrt(2.0) / r6, std::sqrt(2.0) / r6,
      std::sqrt(3.0) / r6, 0.0, -std::sqrt(3.0) / r6,
      1.0 / r6, -2.0 / r6, 1.0 / r6;
  return m;
}

Matrix rotation_m(double theta) {
  Matrix m = Matrix::Identity(3, 3);
  m(1, 1) = std::cos(theta);
  m(1, 2) = std::sin(theta);
  m(2, 1) = -std::sin(theta);
  m(2, 2) = std::cos(theta);
  return m;
}

HermitianMatrix model_hamiltonian() {
  Matrix h(3, 3);
  h << 0, 1, 2,
      1, 0, 2,
      2, 2, 0;
  return HermitianMatrix(h);
}

}  // namespace

FamilyId family_from_string(const std::string& id) {
  if (id == "f1_theta") return FamilyId::f1_theta;
  if (id == "f2_beta") return FamilyId::f2_beta;
  if (id == "f4_power") return FamilyId::f4_power;
  if (id == "qubit3_theta") return FamilyId::qubit3_theta;
  if (id == "qutrit4_theta") return FamilyId::qutrit4_theta;
  throw InvalidInputError("unknown family id: " + id);
}

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::f1_theta: return "f1_theta";
    case FamilyId::f2_beta: return "f2_beta";
    case FamilyId::f4_power: return "f4_power";
    case FamilyId::qubit3_theta: return "qubit3_theta";
    case FamilyId::qutrit4_theta: return "qutrit4_theta";
  }
  return "?";
}

int FamilySpec::dim() const {
  switch (id) {
    case FamilyId::f1_theta:
    case FamilyId::f2_beta:
      return 3;
    case FamilyId::f4_power:
      return 4;
    case FamilyId::qubit3_theta:
      return 2;
    case FamilyId::qutrit4_theta:
      return 3;
  }
  return 0;
}

int FamilySpec::count_l() const {
  switch (id) {
    case FamilyId::qubit3_theta:
      return 3;
    case FamilyId::qutrit4_theta:
      return 4;
    default:
      return 2;
  }
}

std::pair<double, double> FamilySpec::range() const {
  switch (id) {
    case FamilyId::f1_theta:
      return {0.0, kPi / 2.0};
    case FamilyId::f2_beta:
    case FamilyId::f4_power:
      return {0.0, 1.0};
    case FamilyId::qubit3_theta:
    case FamilyId::qutrit4_theta:
      return {0.0, kPi / 4.0};
  }
  return {0.0, 0.0};
}

UnitaryMatrix fourier_matrix(int d) {
  if (d < 1) {
    throw InvalidInputError("dimension must be at least 1");
  }
  Matrix m(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      m(j, k) = std::polar(norm, 2.0 * kPi * j * k / d);
    }
  }
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix o3_matrix() { return UnitaryMatrix(o3_raw()); }

MeasurementSet build_family(const FamilySpec& spec) {
  const auto [lo, hi] = spec.range();
  if (!(spec.parameter >= lo - 1e-12 && spec.parameter <= hi + 1e-12)) {
    throw InvalidInputError("family parameter out of range [" +
                            std::to_string(lo) + ", " + std::to_string(hi) +
                            "]");
  }
  const double t = spec.parameter;
  switch (spec.id) {
    case FamilyId::f1_theta: {
      const Matrix m = rotation_m(t);
      UnitaryMatrix u(m * o3_raw() * m.adjoint());
      return MeasurementSet::of({identity_unitary(3), std::move(u)});
    }
    case FamilyId::f2_beta: {
      const UnitaryMatrix f3b = unitary_fractional_power(fourier_matrix(3), t);
      const UnitaryMatrix expo = hermitian_phase_exp(model_hamiltonian(), 1.0 - t);
      UnitaryMatrix u(f3b.matrix() * expo.matrix());
      return MeasurementSet::of({identity_unitary(3), std::move(u)});
    }
    case FamilyId::f4_power: {
      UnitaryMatrix u = unitary_fractional_power(fourier_matrix(4), t);
      return MeasurementSet::of({identity_unitary(4), std::move(u)});
    }
    case FamilyId::qubit3_theta: {
      const double c = std::cos(t);
      const double s = std::sin(t);
      Matrix u2(2, 2);
      u2 << c, s,
          s, -c;
      Matrix u3(2, 2);
      u3 << Complex(c, 0), Complex(s, 0),
          Complex(0, s), Complex(0, -c);
      return MeasurementSet::of({identity_unitary(2), UnitaryMatrix(u2),
                                 UnitaryMatrix(u3)});
    }
    case FamilyId::qutrit4_theta: {
      const UnitaryMatrix f3b =
          unitary_fractional_power(fourier_matrix(3), 4.0 * t / kPi);
      const Complex omega = std::polar(1.0, 2.0 * kPi / 3.0);
      CVector e_diag(3);
      e_diag << Complex(1, 0), omega, omega;  // as printed, not diag(1,w,w^2)
      const Matrix e = e_diag.asDiagonal();
      return MeasurementSet::of(
          {identity_unitary(3), f3b, UnitaryMatrix(e * f3b.matrix()),
           UnitaryMatrix(e * e * f3b.matrix())});
    }
  }
  throw InvalidInputError("unknown family id");
}

std::vector<SweepPoint> sweep(FamilyId id, double start, double end, int steps,
                              const SweepOptions& options) {
  if (steps < 2) {
    throw InvalidInputError("sweep needs at least 2 steps");
  }
  std::vector<SweepPoint> out;
  out.reserve(steps);
  const FamilySpec probe{id, start};
  const bool is_multi = probe.count_l() > 2;
  for (int i = 0; i < steps; ++i) {
    const double param = start + (end - start) * i / (steps - 1);
    const MeasurementSet ms = build_family(FamilySpec{id, param});
    SweepPoint point;
    point.parameter = param;
    if (!is_multi) {
      point.report = pairwise_report(ms.unitaries[1]);
    } else {
      // Pairwise columns from all L(L-1)/2 pairs V_ij = U_i^dag U_j:
      // each pairwise bound certifies H_i + H_j, and summing over pairs
      // counts every H_i exactly L-1 times.
      const int l = ms.count();
      BoundReport combined;
      for (int a = 0; a < l; ++a) {
        for (int b = a + 1; b < l; ++b) {
          const UnitaryMatrix v(ms.unitaries[a].matrix().adjoint() *
                                ms.unitaries[b].matrix());
          const BoundReport pair = pairwise_report(v);
          for (const auto& [key, value] : pair.values) {
            combined.values[key] += value / (l - 1);
          }
        }
      }
      const BoundReport multi = multi_report(ms.unitaries);
      for (const auto& [key, value] : multi.values) {
        combined.values[key] = value;
      }
      if (options.with_optimal) {
        combined.values["OPT"] = optimal_bound_numeric(
            ms, options.optimal_restarts,
            options.seed + static_cast<std::uint64_t>(i));
      }
      point.report = std::move(combined);
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace eub
