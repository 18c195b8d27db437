#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "eub/families.hpp"
#include "eub/majorants.hpp"
#include "eub/statelab.hpp"
#include "test_util.hpp"

using namespace eub;

namespace {

/// Independent brute force over submatrices: iterates sizes (n, m) in
/// the reverse order and without the adjoint shortcut.
std::vector<double> brute_force_sk(const UnitaryMatrix& u) {
  const int d = u.dim();
  std::vector<double> s(d, 0.0);
  const unsigned full = (1u << d) - 1u;
  for (unsigned cols = full; cols >= 1; --cols) {
    for (unsigned rows = full; rows >= 1; --rows) {
      int nr = 0, nc = 0;
      Matrix sub(d, d);
      std::vector<int> ri, ci;
      for (int i = 0; i < d; ++i) {
        if (rows & (1u << i)) ri.push_back(i);
        if (cols & (1u << i)) ci.push_back(i);
      }
      nr = static_cast<int>(ri.size());
      nc = static_cast<int>(ci.size());
      const int k = nr + nc - 1;
      if (k > d) continue;
      Matrix m(nr, nc);
      for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nc; ++b) m(a, b) = u.matrix()(ri[a], ci[b]);
      Eigen::JacobiSVD<Matrix> svd(m);
      s[k - 1] = std::max(s[k - 1], svd.singularValues()(0));
    }
  }
  for (int k = 1; k < d; ++k) s[k] = std::max(s[k], s[k - 1]);
  return s;
}

}  // namespace

TEST_CASE("overlap vector") {
  const OverlapVector id3 = overlap_vector(identity_unitary(3));
  CHECK(id3.c.entries() ==
        std::vector<double>{1, 1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(id3.c1() == doctest::Approx(1.0));

  const OverlapVector f4 = overlap_vector(fourier_matrix(4));
  for (double x : f4.c.entries()) {
    CHECK(x == doctest::Approx(0.25).epsilon(1e-12));
  }

  const OverlapVector o3 = overlap_vector(o3_matrix());
  const std::vector<double> expected = {2.0 / 3, 0.5, 0.5, 1.0 / 3, 1.0 / 3,
                                        1.0 / 3, 1.0 / 6, 1.0 / 6, 0.0};
  REQUIRE(o3.c.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(o3.c[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
  CHECK(o3.c.total() == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("pairwise singular profile") {
  const SingularProfile id3 = sk_profile(identity_unitary(3));
  for (double s : id3.values) {
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }

  const SingularProfile f2 = sk_profile(fourier_matrix(2));
  CHECK(f2.values[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(f2.values[1] == doctest::Approx(1.0).epsilon(1e-12));

  const SingularProfile o3 = sk_profile(o3_matrix());
  CHECK(o3.values[0] == doctest::Approx(0.8164966).epsilon(1e-6));
  CHECK(o3.values[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(o3.values[2] == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(sk_profile(haar_random_unitary(9, 1)), SizeLimitError);
}

TEST_CASE("profile agrees with an independent brute force") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const UnitaryMatrix u = haar_random_unitary(3, seed);
    const SingularProfile p = sk_profile(u);
    const std::vector<double> reference = brute_force_sk(u);
    for (int k = 0; k < 3; ++k) {
      CHECK(p.values[k] == doctest::Approx(reference[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("direct-sum vector W") {
  const MajorizingVector id3 = direct_sum_vector(sk_profile(identity_unitary(3)));
  CHECK(id3.weights.entries() == std::vector<double>{1, 0, 0});

  const MajorizingVector f2 = direct_sum_vector(sk_profile(fourier_matrix(2)));
  CHECK(f2.weights[0] == doctest::Approx(0.70711).epsilon(1e-4));
  CHECK(f2.weights[1] == doctest::Approx(0.29289).epsilon(1e-4));

  const MajorizingVector o3 = direct_sum_vector(sk_profile(o3_matrix()));
  CHECK(o3.weights[0] == doctest::Approx(0.81650).epsilon(1e-4));
  CHECK(o3.weights[1] == doctest::Approx(0.18350).epsilon(1e-3));
  CHECK(o3.weights[2] == doctest::Approx(0.0));
  CHECK(o3.weights.total() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("closed-form majorants") {
  const UnitaryMatrix o3 = o3_matrix();
  const auto ms = closed_form_majorants(overlap_vector(o3), sk_profile(o3));

  const MajorizingVector& q1 = find_majorant(ms, MajorantLabel::Q1);
  CHECK(q1.weights[0] == doctest::Approx(0.82495).epsilon(1e-4));
  CHECK(q1.weights[1] == doctest::Approx(0.17505).epsilon(1e-3));

  const MajorizingVector& qd = find_majorant(ms, MajorantLabel::Qd);
  CHECK(qd.weights[0] == doctest::Approx(0.82495).epsilon(1e-4));
  CHECK(shannon_entropy(qd.weights) / test::kLn2 ==
        doctest::Approx(0.669).epsilon(1e-3));

  const auto id_ms = closed_form_majorants(overlap_vector(identity_unitary(3)),
                                           sk_profile(identity_unitary(3)));
  for (const MajorizingVector& m : id_ms) {
    CHECK(m.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.weights.total() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("multi profile") {
  // L = 2 reduces to 1 + s_k.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const UnitaryMatrix u = haar_random_unitary(3, seed);
    const SingularProfile pair = sk_profile(u);
    const SingularProfile multi =
        multi_profile({identity_unitary(3), u});
    REQUIRE(multi.values.size() == 6);
    for (int k = 1; k <= 3; ++k) {
      CHECK(multi.values[k] ==
            doctest::Approx(1.0 + pair.values[k - 1]).epsilon(1e-10));
    }
  }

  // Three copies of the same qubit basis: squared norms count multiplicity.
  const FamilySpec triple{FamilyId::qubit3_theta, 0.0};
  const auto bases = build_family(triple).unitaries;
  const SingularProfile s = multi_profile(bases);
  const std::vector<double> expected = {1, 2, 3, 3, 3, 3};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(s.values[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  }

  const SingularProfile single = multi_profile({haar_random_unitary(4, 3)});
  for (double v : single.values) {
    CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
  }

  CHECK_THROWS_AS(multi_profile(std::vector<UnitaryMatrix>(
                      5, haar_random_unitary(4, 1))),
                  SizeLimitError);
}

TEST_CASE("multi majorizing vector") {
  const UnitaryMatrix u = haar_random_unitary(3, 17);
  const MajorizingVector mv =
      multi_majorizing_vector(multi_profile({identity_unitary(3), u}));
  const MajorizingVector w = direct_sum_vector(sk_profile(u));
  // {1} (+) W, zero-padded to the dL entries of the multi vector.
  WeightVector one_plus_w =
      WeightVector::direct_sum(WeightVector({1.0}), w.weights);
  REQUIRE(mv.weights.size() == 6);
  for (std::size_t i = 0; i < mv.weights.size(); ++i) {
    const double expected = i < one_plus_w.size() ? one_plus_w[i] : 0.0;
    CHECK(mv.weights[i] == doctest::Approx(expected).epsilon(1e-9));
  }
  CHECK(mv.weights.total() == doctest::Approx(2.0).epsilon(1e-9));

  const auto bases = build_family({FamilyId::qubit3_theta, 0.0}).unitaries;
  const MajorizingVector triple = multi_majorizing_vector(multi_profile(bases));
  const std::vector<double> expected = {1, 1, 1, 0, 0, 0};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(triple.weights[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  }
}

TEST_CASE("majorant hierarchy and profile inequalities") {
  for (int d : {2, 3, 4}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const UnitaryMatrix u = haar_random_unitary(d, seed);
      const OverlapVector c = overlap_vector(u);
      const SingularProfile profile = sk_profile(u);
      const auto ms = closed_form_majorants(c, profile);
      const MajorizingVector& q0 = find_majorant(ms, MajorantLabel::Q0);
      const MajorizingVector& q1 = find_majorant(ms, MajorantLabel::Q1);
      const MajorizingVector& qd = find_majorant(ms, MajorantLabel::Qd);
      const MajorizingVector& w1 = find_majorant(ms, MajorantLabel::W1);
      const MajorizingVector& w2 = find_majorant(ms, MajorantLabel::W2);
      const MajorizingVector w = direct_sum_vector(profile);

      CHECK(majorizes(q0.weights, q1.weights));
      CHECK(majorizes(q1.weights, qd.weights));
      CHECK(majorizes(qd.weights, w.weights));
      CHECK(majorizes(w1.weights, w2.weights));
      CHECK(majorizes(w2.weights, w.weights));

      CHECK(profile.values[1] <= std::sqrt(c.c1() + c.c2()) + 1e-10);
      for (int k = 1; k < d; ++k) {
        CHECK(profile.values[k] - profile.values[k - 1] <=
              profile.values[0] + 1e-10);
      }

      // Appendix A lemma: p (+) q is majorized by {1} (+) W.
      const PureState psi = random_pure_state(d, seed + 500);
      const DensityMatrix rho = psi.density();
      const WeightVector p =
          measurement_probabilities(rho, identity_unitary(d));
      const WeightVector q = measurement_probabilities(rho, u);
      CHECK(majorizes(WeightVector::direct_sum(WeightVector({1.0}), w.weights),
                      WeightVector::direct_sum(p, q)));
    }
  }
}
