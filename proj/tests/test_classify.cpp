#include <doctest.h>

#include <random>

#include "qpb/classify.hpp"
#include "qpb/errors.hpp"
#include "qpb/orbit.hpp"
#include "support.hpp"

using namespace qpb;
using namespace qpb::testing;

TEST_CASE("classify canonical instances") {
  auto da = classify(from_case(CaseId::da, Poly(), {{"lambda1", 1}, {"lambda2", 2}}));
  CHECK(da.label == CaseId::da);
  CHECK(da.eigenvalues == std::vector<Rational>{1, 2, -3});
  REQUIRE(da.f);
  CHECK(da.f->is_zero());

  auto a = classify(from_case(CaseId::a, X() * Y() * Z()));
  CHECK(a.label == CaseId::a);
  CHECK(a.rank == 0);
  REQUIRE(a.f);
  CHECK(*a.f == X() * Y() * Z());

  auto b = classify(from_case(CaseId::b, Poly()));
  CHECK(b.label == CaseId::b);
  CHECK(b.rank == 1);
  CHECK(b.charpoly == "t^3");

  auto x3 = classify(QuadraticBracket::from_polys(Poly(), Scalar(3) * X() * X(), Poly()));
  REQUIRE(x3.f);
  CHECK(*x3.f == X().pow(3));

  auto dac = classify(from_case(CaseId::da, Scalar(2) * X() * Y() * Z(), {{"lambda1", 1}, {"lambda2", 2}}));
  REQUIRE(dac.f);
  CHECK(*dac.f == Scalar(2) * X() * Y() * Z());
  CHECK(dac.constants.at("c") == 1);
}

TEST_CASE("non-Poisson input is rejected") {
  CHECK_THROWS_AS(classify(QuadraticBracket::from_polys(X() * X(), Y() * Y(), Z() * Z())), NotPoisson);
}

TEST_CASE("recover_cubic") {
  const CaseParams p{{"lambda1", 1}, {"lambda2", 2}};
  auto canon = from_case(CaseId::da, Poly(), p);
  CHECK(recover_cubic(canon, CaseId::da, p).is_zero());
  auto perturbed = QuadraticBracket::from_polys(canon.y(0, 1), canon.y(1, 2) + Scalar(3) * X() * X(), canon.y(2, 0));
  CHECK_THROWS_AS(recover_cubic(perturbed, CaseId::da, p), OutsideFamily);
  CHECK_THROWS_AS(recover_cubic(canon, CaseId::b), NotCanonical);

  for (const auto& f : seven_families()) CHECK(recover_cubic(build(f), f.id, f.params) == f.f);
}

TEST_CASE("seven families classify under conjugation") {
  std::mt19937 rng(31);
  for (const auto& f : seven_families()) {
    auto b = build(f);
    auto r = classify(b);
    CHECK(r.label == f.id);
    for (int t = 0; t < 5; ++t) {
      auto A = random_invertible(rng);
      auto rt = classify(transform(b, A));
      CHECK(rt.label == f.id);
      if (rt.A && rt.canonical) CHECK(transform(transform(b, A), *rt.A) == *rt.canonical);
    }
  }
}

TEST_CASE("case is invariant on random Poisson brackets") {
  std::mt19937 rng(37);
  for (int t = 0; t < 20; ++t) {
    auto fam = seven_families()[static_cast<size_t>(t % 7)];
    auto b = transform(from_case(fam.id, random_form(rng, 3, 3, 0.3), fam.params), random_invertible(rng));
    if (!jacobi_residual(b).poisson()) continue;
    auto lab = classify(b).label;
    CHECK(classify(transform(b, random_invertible(rng))).label == lab);
  }
}

TEST_CASE("irrational spectrum is classified structurally") {
  // y_ij = x_i w_j - x_j w_i with w = M x, M the companion of t^3 - t - 1.
  RationalMatrix M{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
  std::array<Poly, 3> w;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i] += Poly::var(j) * Scalar(M(static_cast<size_t>(i), static_cast<size_t>(j)));
  auto y = [&](int i, int j) { return Poly::var(i) * w[j] - Poly::var(j) * w[i]; };
  auto b = QuadraticBracket::from_polys(y(0, 1), y(1, 2), y(2, 0));
  REQUIRE(jacobi_residual(b).poisson());
  auto r = classify(b);
  CHECK_FALSE(r.rational_spectrum);
  CHECK(r.eigenvalues.empty());
  CHECK_FALSE(r.A);
  CHECK(r.rank == 3);
  CHECK(r.label == CaseId::da);
}

TEST_CASE("conjugator") {
  RationalMatrix T = canonical_p(CaseId::cb);
  std::mt19937 rng(41);
  auto A = random_invertible(rng);
  RationalMatrix P = A.inverse_matrix() * T * A;
  auto C = conjugator(P, T);
  REQUIRE(C);
  CHECK(*C * P * C->inverse_matrix() == T);
  CHECK_FALSE(conjugator(canonical_p(CaseId::b), canonical_p(CaseId::cb)));
}

TEST_CASE("orbit fingerprint") {
  CHECK(orbit_fingerprint(Poly()).candidates == std::vector<int>{1});
  auto r3 = orbit_fingerprint(X() * X() * Y());
  CHECK(r3.essential_variables == 2);
  CHECK(r3.candidates == std::vector<int>{3});
  auto r7 = orbit_fingerprint(Scalar(2) * Z() * X() * Y());
  CHECK(r7.essential_variables == 3);
  CHECK(r7.candidates == std::vector<int>{7});
  CHECK_THROWS_AS(orbit_fingerprint(X() * X()), InvalidArgument);
  for (int id = 1; id <= 9; ++id) {
    auto c = orbit_fingerprint(orbit_representative(id)).candidates;
    CHECK(std::find(c.begin(), c.end(), id) != c.end());
  }
  auto c10 = orbit_fingerprint(orbit_representative(10, Rational(-1))).candidates;
  CHECK(std::find(c10.begin(), c10.end(), 10) != c10.end());
}

TEST_CASE("orbit verify") {
  RationalMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(orbit_verify(Y().pow(3), swap, 2));
  CHECK(orbit_verify(Scalar(2) * Z() * X() * Y() + X().pow(3), RationalMatrix::identity(3), 8));
  CHECK_FALSE(orbit_verify(X().pow(3), RationalMatrix::identity(3), 7));
  CHECK_THROWS_AS(orbit_verify(X().pow(3), RationalMatrix::identity(3), 11), InvalidArgument);
  CHECK_THROWS_AS(orbit_verify(X().pow(3), RationalMatrix::identity(3), 10), InvalidArgument);
  CHECK_THROWS_AS(orbit_verify(X().pow(3), RationalMatrix::identity(3), 10, Rational(1)), InvalidArgument);
  CHECK_THROWS_AS(orbit_verify(X().pow(3), RationalMatrix(3, 3), 2), SingularMatrix);

  std::mt19937 rng(43);
  for (int id = 2; id <= 9; ++id) {
    auto A = random_invertible(rng);
    Poly f = orbit_representative(id).compose(A.inverse_matrix());
    CHECK(orbit_verify(f, A, id));
    auto c = orbit_fingerprint(f).candidates;
    CHECK(std::find(c.begin(), c.end(), id) != c.end());
  }
}
