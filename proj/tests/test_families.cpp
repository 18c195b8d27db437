#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "eub/families.hpp"
#include "test_util.hpp"

using namespace eub;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> sorted_overlaps(const UnitaryMatrix& a,
                                    const UnitaryMatrix& b) {
  const UnitaryMatrix rel(Matrix(a.matrix().adjoint() * b.matrix()));
  return overlap_vector(rel).c.entries();
}
}  // namespace

TEST_CASE("family ids round trip") {
  for (FamilyId id : {FamilyId::f1_theta, FamilyId::f2_beta, FamilyId::f4_power,
                      FamilyId::qubit3_theta, FamilyId::qutrit4_theta}) {
    CHECK(family_from_string(to_string(id)) == id);
  }
  CHECK_THROWS_AS(family_from_string("no_such_family"), InvalidInputError);
}

TEST_CASE("fourier matrix") {
  for (int d : {2, 3, 4, 5}) {
    const UnitaryMatrix f = fourier_matrix(d);
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const Complex expected =
            std::polar(1.0 / std::sqrt(double(d)), 2.0 * kPi * j * k / d);
        CHECK(std::abs(f.matrix()(j, k) - expected) < 1e-12);
      }
    }
  }
  // F_4^4 = I.
  const Matrix f4 = fourier_matrix(4).matrix();
  CHECK(((f4 * f4 * f4 * f4) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-10);
}

TEST_CASE("rotated real-basis family endpoints") {
  const MeasurementSet at0 = build_family({FamilyId::f1_theta, 0.0});
  REQUIRE(at0.count() == 2);
  const auto base = sorted_overlaps(at0.unitaries[0], at0.unitaries[1]);
  const auto o3 = overlap_vector(o3_matrix()).c.entries();
  REQUIRE(base.size() == o3.size());
  for (std::size_t i = 0; i < o3.size(); ++i) {
    CHECK(base[i] == doctest::Approx(o3[i]).epsilon(1e-10));
  }

  for (int i = 0; i <= 100; ++i) {
    build_family({FamilyId::f1_theta, kPi / 2.0 * i / 100.0});
  }
  CHECK_THROWS_AS(build_family({FamilyId::f1_theta, -0.1}), InvalidInputError);
}

TEST_CASE("interpolated fourier family endpoints") {
  const MeasurementSet at1 = build_family({FamilyId::f2_beta, 1.0});
  CHECK((at1.unitaries[1].matrix() - fourier_matrix(3).matrix())
            .cwiseAbs()
            .maxCoeff() < 1e-9);

  const MeasurementSet at0 = build_family({FamilyId::f2_beta, 0.0});
  // At beta = 0 the basis is a plain phase exponential, still unitary.
  for (int i = 0; i <= 100; ++i) {
    build_family({FamilyId::f2_beta, i / 100.0});
  }
  CHECK(at0.dim == 3);
}

TEST_CASE("fourier power family endpoints") {
  const MeasurementSet at0 = build_family({FamilyId::f4_power, 0.0});
  CHECK((at0.unitaries[1].matrix() - Matrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-10);

  const MeasurementSet at1 = build_family({FamilyId::f4_power, 1.0});
  CHECK((at1.unitaries[1].matrix() - fourier_matrix(4).matrix())
            .cwiseAbs()
            .maxCoeff() < 1e-9);

  for (int i = 0; i <= 100; ++i) {
    build_family({FamilyId::f4_power, i / 100.0});
  }
}

TEST_CASE("qubit triple family") {
  const MeasurementSet at0 = build_family({FamilyId::qubit3_theta, 0.0});
  REQUIRE(at0.count() == 3);
  CHECK(at0.dim == 2);

  // theta = pi/4 yields three mutually unbiased bases: every pairwise
  // overlap is 1/2.
  const MeasurementSet mub = build_family({FamilyId::qubit3_theta, kPi / 4.0});
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (double c : sorted_overlaps(mub.unitaries[i], mub.unitaries[j])) {
        CHECK(c == doctest::Approx(0.5).epsilon(1e-10));
      }
    }
  }
  CHECK_THROWS_AS(build_family({FamilyId::qubit3_theta, kPi}),
                  InvalidInputError);
}

TEST_CASE("qutrit quadruple family") {
  const MeasurementSet at0 = build_family({FamilyId::qutrit4_theta, 0.0});
  REQUIRE(at0.count() == 4);
  CHECK(at0.dim == 3);

  // theta = pi/4: four mutually unbiased bases, overlaps all 1/3.
  const MeasurementSet mub =
      build_family({FamilyId::qutrit4_theta, kPi / 4.0});
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (double c : sorted_overlaps(mub.unitaries[i], mub.unitaries[j])) {
        CHECK(c == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("sweep over a pairwise family") {
  const std::vector<SweepPoint> points = sweep(FamilyId::f1_theta, 0.0,
                                               kPi / 2.0, 41);
  REQUIRE(points.size() == 41);
  CHECK(points.front().parameter == doctest::Approx(0.0));
  CHECK(points.back().parameter == doctest::Approx(kPi / 2.0));
  for (const SweepPoint& p : points) {
    CHECK(p.report.values.at("Maj2") >= p.report.values.at("Maj1") - 1e-9);
    CHECK(p.report.values.count("Multi") == 0);
  }
  // First point matches the direct report for the comparison matrix.
  const BoundReport direct = pairwise_report(o3_matrix());
  for (const auto& [id, value] : direct.values) {
    CHECK(points.front().report.values.at(id) ==
          doctest::Approx(value).epsilon(1e-9));
  }
}

TEST_CASE("fourier power sweep endpoint values") {
  SweepOptions opts;
  opts.with_optimal = false;
  const std::vector<SweepPoint> points =
      sweep(FamilyId::f4_power, 0.0, 1.0, 11, opts);
  CHECK(points.front().report.values.at("MU") ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(points.back().report.values.at("MU") ==
        doctest::Approx(std::log(4.0)).epsilon(1e-9));
}

TEST_CASE("sweep over a multi family") {
  SweepOptions opts;
  opts.optimal_restarts = 16;
  const std::vector<SweepPoint> points =
      sweep(FamilyId::qubit3_theta, 0.0, kPi / 4.0, 5, opts);
  REQUIRE(points.size() == 5);

  // Identical bases at theta = 0: every bound collapses to zero.
  CHECK(points.front().report.values.at("Multi") ==
        doctest::Approx(0.0).epsilon(1e-8));
  for (const SweepPoint& p : points) {
    CHECK(p.report.values.count("Multi") == 1);
    CHECK(p.report.values.count("OPT") == 1);
    CHECK(p.report.values.at("Multi") <= p.report.values.at("OPT") + 1e-6);
  }
  CHECK(points.back().report.values.at("OPT") >= 2.0 * std::log(2.0) - 1e-6);
}
