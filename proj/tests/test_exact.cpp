#include <doctest.h>

#include <random>

#include "qpb/errors.hpp"
#include "qpb/jordan.hpp"
#include "qpb/matrix.hpp"
#include "qpb/poly.hpp"
#include "qpb/scalar.hpp"
#include "support.hpp"

using namespace qpb;
using namespace qpb::testing;

namespace {
const Scalar h = Scalar::h();
}

TEST_CASE("scalar normalization") {
  Scalar a = (Scalar(1) - h) / (Scalar(1) + h);
  Scalar b = (Scalar(2) - h * 2) / (Scalar(2) + h * 2);
  CHECK(a == b);
  CHECK(a.den().leading() == 1);
  CHECK((a * a.inverse()).is_one());
  CHECK((h * h - 1) / (h - 1) == h + 1);
  CHECK(((h * h - 1) / (h - 1)).is_polynomial());
  CHECK(Scalar::frac(6, 4) == Scalar::frac(3, 2));
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("scalar at zero") {
  Scalar k = (Scalar(1) - h) / (Scalar(1) + h);
  CHECK(k.regular_at_zero());
  CHECK(k.at_zero() == 1);
  Scalar pole = Scalar(1) / h;
  CHECK_FALSE(pole.regular_at_zero());
  CHECK_THROWS_AS(pole.at_zero(), PoleAtZero);
  CHECK(h.pow(3).valuation() == 3);
  CHECK(pole.valuation() == -1);
}

TEST_CASE("scalar field axioms on random values") {
  std::mt19937 rng(7);
  auto rnd = [&] {
    Scalar s = Scalar(random_rational(rng)) + Scalar(random_rational(rng)) * h;
    Scalar d = Scalar(1) + Scalar(random_rational(rng)) * h * h;
    return s / d;
  };
  for (int i = 0; i < 50; ++i) {
    Scalar x = rnd(), y = rnd(), z = rnd();
    CHECK(x + y == y + x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x / x == Scalar(1));
  }
}

TEST_CASE("upoly gcd and division") {
  UPoly a = UPoly::h() * UPoly::h() - UPoly(1);
  UPoly b = UPoly::h() - UPoly(1);
  CHECK(UPoly::gcd(a, b) == b.monic());
  UPoly q, r;
  UPoly::divmod(a, b, q, r);
  CHECK(r.is_zero());
  CHECK(q == UPoly::h() + UPoly(1));
  CHECK(a.eval(3) == 8);
}

TEST_CASE("polynomial calculus") {
  Poly x1 = X(), x2 = Y(), x3 = Z();
  CHECK((x1 * x1 * x3).partial(0) == Scalar(2) * x1 * x3);
  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK((x1 * x2 * x3).partial(2) == x1 * x2);
  CHECK((x1 - x1).is_zero());
  CHECK((x1 * x2 + x3 * x3).is_homogeneous(2));
  CHECK((x1 * x2 + x3).degree() == 2);
  CHECK_THROWS_AS(x1 + Poly::var(0, 2), ArityMismatch);
}

TEST_CASE("polynomial ring axioms") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    Poly a = random_form(rng, 1), b = random_form(rng, 2), c = random_form(rng, 1);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c * c) == a * b + a * c * c);
    Poly ab = a * b;
    for (const auto& [e, s] : ab.terms()) CHECK_FALSE(s.is_zero());
  }
}

TEST_CASE("compose with a matrix") {
  RationalMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK((Y() * Y() * Y()).compose(swap) == X() * X() * X());
  CHECK(X().compose(RationalMatrix::identity(3)) == X());
}

TEST_CASE("coefficient vectors") {
  Poly f = Scalar(2) * X() * Y() * Z() + X().pow(3);
  auto v = f.coefficient_vector(3);
  CHECK(v.size() == 10);
  CHECK(Poly::from_coefficient_vector(v, 3) == f);
  CHECK_THROWS_AS(X().coefficient_vector(2), InvalidArgument);
}

TEST_CASE("rank profile") {
  ExactMatrix m1{{Scalar(1), h}, {h, h * h}};
  CHECK(rank_profile(m1).generic == 1);
  CHECK(rank_profile(m1).zero == 1);
  ExactMatrix m2{{h, Scalar(0)}, {Scalar(0), Scalar(1)}};
  CHECK(rank_profile(m2).generic == 2);
  CHECK(rank_profile(m2).zero == 1);
  ExactMatrix id = ExactMatrix::identity(2);
  CHECK(rank_profile(id).generic == 2);
  CHECK(rank_profile(id).zero == 2);
}

TEST_CASE("semicontinuity of rank") {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix m(3, 4);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 4; ++j) {
        std::uniform_int_distribution<int> pick(0, 2);
        int k = pick(rng);
        m(i, j) = k == 0 ? Scalar(0) : (k == 1 ? Scalar(random_rational(rng)) * h : Scalar(random_rational(rng)));
      }
    auto r = rank_profile(m);
    CHECK(r.generic >= r.zero);
  }
}

TEST_CASE("kernel") {
  ExactMatrix row{{Scalar(1), Scalar(1)}};
  auto k = kernel(row, Point::generic);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(kernel(ExactMatrix::identity(2), Point::generic).empty());
  ExactMatrix hh{{h, -h}};
  CHECK(kernel(hh, Point::zero).size() == 2);
  CHECK(kernel(hh, Point::generic).size() == 1);
}

TEST_CASE("jordan form") {
  RationalMatrix d{{1, 0, 0}, {0, 2, 0}, {0, 0, -3}};
  auto jd = jordan_3x3(d);
  CHECK(jd.J == d);
  CHECK(jd.A == RationalMatrix::identity(3));

  RationalMatrix n{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  auto jn = jordan_3x3(n);
  std::vector<int> sizes;
  for (const auto& b : jn.blocks) {
    CHECK(b.eigenvalue == 0);
    sizes.push_back(b.size);
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2});
  CHECK(jn.A * n * jn.A.inverse_matrix() == jn.J);

  RationalMatrix comp{{0, 0, 2}, {1, 0, 0}, {0, 1, 0}};
  CHECK(str_descending(charpoly(comp)) == "t^3 - 2");
  try {
    jordan_3x3(comp);
    FAIL("expected IrrationalSpectrum");
  } catch (const IrrationalSpectrum& e) {
    CHECK(e.charpoly() == "t^3 - 2");
  }
}

TEST_CASE("jordan conjugation on random matrices") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    RationalMatrix A = random_invertible(rng);
    RationalMatrix J{{random_rational(rng), 1, 0}, {0, 0, 0}, {0, 0, random_rational(rng)}};
    J(1, 1) = J(0, 0);
    RationalMatrix M = A.inverse_matrix() * J * A;
    auto r = jordan_3x3(M);
    CHECK(r.A * M * r.A.inverse_matrix() == r.J);
    CHECK(charpoly(r.J) == charpoly(M));
  }
}

TEST_CASE("rational roots") {
  UPoly p = (UPoly::h() - UPoly(1)) * (UPoly::h() - UPoly(1)) * (UPoly::h() + UPoly(Rational(1, 2)));
  auto r = rational_roots(p);
  CHECK(r == std::vector<Rational>{Rational(-1, 2), 1, 1});
}

TEST_CASE("modular gcd") {
  std::mt19937 rng(13);
  auto rnd = [&](int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng, 40));
    if (sgn(c.back()) == 0) c.back() = 1;
    return UPoly(c);
  };
  for (int t = 0; t < 30; ++t) {
    UPoly g = rnd(t % 4), a = rnd(5) * g, b = rnd(4) * g;
    UPoly d = UPoly::gcd(a, b);
    UPoly qa, ra, qb, rb;
    UPoly::divmod(a, d, qa, ra);
    UPoly::divmod(b, d, qb, rb);
    CHECK(ra.is_zero());
    CHECK(rb.is_zero());
    CHECK(d.leading() == 1);
    CHECK(UPoly::gcd(qa, qb) == UPoly(1));
    CHECK(d.degree() >= g.degree());
  }
  CHECK(UPoly::gcd(UPoly(), UPoly::h()) == UPoly::h());
  CHECK(UPoly::gcd(UPoly(Rational(3)), UPoly::h()) == UPoly(1));
}

TEST_CASE("fraction-free solve agrees with rref") {
  std::mt19937 rng(19);
  for (int t = 0; t < 10; ++t) {
    const size_t n = 4, m = 2;
    ExactMatrix A(n, n), B(n, m);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j)
        A(i, j) = (Scalar(random_rational(rng)) * h + Scalar(i == j ? 1 : 0)) / (Scalar(1) + Scalar(random_rational(rng)) * h);
      for (size_t j = 0; j < m; ++j) B(i, j) = Scalar(random_rational(rng)) + h * h;
    }
    ExactMatrix X = solve(A, B);
    CHECK(A * X == B);
    CHECK(X == A.inverse_matrix() * B);
  }
  CHECK_THROWS_AS(solve(ExactMatrix(2, 2), ExactMatrix(2, 1)), SingularMatrix);
}
