#include <doctest.h>

#include <random>

#include "qpb/bracket.hpp"
#include "qpb/errors.hpp"
#include "support.hpp"

using namespace qpb;
using namespace qpb::testing;

TEST_CASE("structure constants") {
  QuadraticBracket zero;
  CHECK(zero.is_zero());

  QuadraticBracket b7 = QuadraticBracket::from_polys(Scalar(2) * X() * Y(), Scalar(2) * Y() * Z(), Scalar(2) * X() * Z());
  CHECK(b7.c(0, 1, 0, 1) == 1);
  CHECK(b7.c(0, 1, 1, 0) == 1);
  CHECK(b7.c(1, 0, 0, 1) == -1);
  CHECK(b7.y(0, 1) == Scalar(2) * X() * Y());
  CHECK(b7.y(2, 0) == Scalar(2) * X() * Z());
  CHECK(b7.y(0, 2) == Scalar(-2) * X() * Z());
  CHECK(b7.y(1, 1).is_zero());

  Constants c{};
  c[0][1][0][0] = 1;
  c[1][0][0][0] = 1;
  CHECK_THROWS_AS(QuadraticBracket::from_structure_constants(c), AntisymmetryViolation);
  c[1][0][0][0] = -1;
  CHECK(QuadraticBracket::from_structure_constants(c).y(0, 1) == X() * X());
}

TEST_CASE("from_case") {
  auto a = from_case(CaseId::a, X() * Y() * Z());
  CHECK(a.y(0, 1) == X() * Y());
  CHECK(a.y(1, 2) == Y() * Z());
  CHECK(a.y(2, 0) == X() * Z());

  auto da = from_case(CaseId::da, Poly(), {{"lambda1", 1}, {"lambda2", 2}});
  CHECK(da.y(0, 1).is_zero());
  CHECK(da.y(1, 2) == Scalar(2) * Y() * Z());
  CHECK(da.y(2, 0) == -(X() * Z()));

  auto b = from_case(CaseId::b, Poly());
  CHECK(b.y(0, 1).is_zero());
  CHECK(b.y(1, 2) == -(X() * Y()));
  CHECK(b.y(2, 0).is_zero());

  CHECK_THROWS_AS(case_from_string("zz"), InvalidArgument);
  for (auto id : {CaseId::a, CaseId::b, CaseId::ca, CaseId::cb, CaseId::da, CaseId::db, CaseId::dc})
    CHECK(case_from_string(to_string(id)) == id);
}

TEST_CASE("v vector and P") {
  auto da = from_case(CaseId::da, Poly(), {{"lambda1", 1}, {"lambda2", 2}});
  auto pd = p_data(da);
  CHECK(pd.v[0] == X());
  CHECK(pd.v[1] == Scalar(2) * Y());
  CHECK(pd.v[2] == Scalar(-3) * Z());
  CHECK(pd.P == RationalMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, -3}});

  auto a = from_case(CaseId::a, X() * Y() * Z() + Y().pow(3));
  CHECK(p_matrix(a).is_zero_matrix());

  auto b = from_case(CaseId::b, Poly());
  auto pb = p_data(b);
  CHECK(pb.v[2] == X());
  CHECK(pb.P == RationalMatrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
  CHECK(pb.P.rank() == 1);
}

TEST_CASE("jacobi residuals") {
  auto a = from_case(CaseId::a, X() * Y() * Z());
  CHECK(jacobi_residual(a).poisson());
  CHECK(jacobi_residual(QuadraticBracket()).poisson());

  auto bad = QuadraticBracket::from_polys(X() * X(), Y() * Y(), Z() * Z());
  auto r = jacobi_residual(bad);
  CHECK(r.linear_form == Scalar(-2) * (X() * X() * Y() + Y() * Y() * Z() + Z() * Z() * X()));
  CHECK_FALSE(r.triple.is_zero());
  CHECK_FALSE(r.poisson());

  for (const auto& f : seven_families()) CHECK(jacobi_residual(build(f)).poisson());
}

TEST_CASE("jacobi equivalence on random brackets") {
  std::mt19937 rng(17);
  int poisson = 0;
  for (int t = 0; t < 60; ++t) {
    auto b = t % 2 ? random_bracket(rng) : random_poisson(rng);
    auto r = jacobi_residual(b);
    CHECK(r.linear_form.is_zero() == r.triple.is_zero());
    poisson += r.poisson();
  }
  CHECK(poisson >= 30);
}

TEST_CASE("extend is a biderivation") {
  auto a = from_case(CaseId::a, X() * Y() * Z());
  CHECK(extend(a, X(), Y()) == a.y(0, 1));
  CHECK(extend(a, Y(), X()) == -a.y(0, 1));
  Poly f = X() * Y(), g = Z();
  CHECK(extend(a, f, g) == X() * extend(a, Y(), g) + Y() * extend(a, X(), g));
}

TEST_CASE("transform") {
  auto da = from_case(CaseId::da, Poly(), {{"lambda1", 1}, {"lambda2", 2}});
  CHECK(transform(da, RationalMatrix::identity(3)) == da);
  RationalMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(p_matrix(transform(da, swap)) == RationalMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, -3}});
  CHECK_THROWS_AS(transform(da, RationalMatrix(3, 3)), SingularMatrix);

  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    auto b = random_bracket(rng);
    auto A = random_invertible(rng);
    auto tb = transform(b, A);
    CHECK(transform(tb, A.inverse_matrix()) == b);
    CHECK(p_matrix(tb) == A * p_matrix(b) * A.inverse_matrix());
    CHECK(p_matrix(tb).trace() == 0);
  }
}

TEST_CASE("dualize") {
  CHECK(dualize(QuadraticBracket()).is_zero());

  Constants c{};
  const Rational lam[3][3] = {{0, 2, -1}, {-2, 0, 5}, {1, -5, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      c[i][j][i][j] += lam[i][j] / 2;
      c[i][j][j][i] += lam[i][j] / 2;
    }
  auto q = QuadraticBracket::from_structure_constants(c);
  auto d = dualize(q);
  CHECK(d.parity() == Parity::odd);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) CHECK(d.c(i, j, k, l) == q.c(k, l, i, j));
  CHECK_THROWS(d.y(0, 1));

  std::mt19937 rng(29);
  for (int t = 0; t < 50; ++t) {
    auto b = random_bracket(rng);
    CHECK(dualize(dualize(b)) == b);
  }
}
