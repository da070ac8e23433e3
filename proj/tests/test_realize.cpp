#include <doctest.h>

#include <random>

#include "qpb/errors.hpp"
#include "qpb/realize.hpp"
#include "qpb/series10.hpp"
#include "support.hpp"

using namespace qpb;
using namespace qpb::testing;

namespace {

const Scalar h = Scalar::h();

bool all_zero(const Triple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

OpElement random_weyl(std::mt19937& rng, const OpContext& ctx) {
  std::uniform_int_distribution<int> e(0, 2), pe(-1, 2), coin(0, 3);
  OpElement r(ctx);
  for (int t = 0; t < 3; ++t) {
    OpElement m = OpElement::constant(ctx, Scalar(random_rational(rng)) + Scalar(random_rational(rng)) * h);
    m = m * OpElement::q(ctx).pow(e(rng)) * OpElement::p(ctx, 0, Scalar(pe(rng)));
    if (coin(rng) == 0) m = m * OpElement::ln_p(ctx);
    r += m;
  }
  return r;
}

OpElement random_shift(std::mt19937& rng, const OpContext& ctx, const Scalar& k) {
  std::uniform_int_distribution<int> e(-1, 1), d(0, 1);
  OpElement r(ctx);
  for (int t = 0; t < 3; ++t) {
    OpElement m = OpElement::constant(ctx, Scalar(random_rational(rng)));
    m = m * OpElement::exponential(ctx, k, e(rng), e(rng));
    if (d(rng)) m = m * OpElement::coordinate(ctx, d(rng));
    m = m * OpElement::central(ctx, "w", e(rng)) * OpElement::shift(ctx, e(rng), e(rng));
    r += m;
  }
  return r;
}

OpElement random_tensor(std::mt19937& rng, const OpContext& ctx) {
  std::uniform_int_distribution<int> e(0, 2), s(-1, 1);
  OpElement r(ctx);
  for (int t = 0; t < 3; ++t) {
    OpElement m = OpElement::constant(ctx, Scalar(random_rational(rng)));
    m = m * OpElement::q(ctx).pow(e(rng)) * OpElement::p(ctx, 0, Scalar(s(rng)));
    m = m * OpElement::exponential(ctx, Scalar(3), s(rng)) * OpElement::coordinate(ctx, 0).pow(e(rng) % 2);
    r += m * OpElement::shift(ctx, s(rng));
  }
  return r;
}

}  // namespace

TEST_CASE("weyl products") {
  OpContext ctx{1, 0, {}};
  auto p = OpElement::p(ctx), q = OpElement::q(ctx);
  auto one = OpElement::constant(ctx, 1);
  CHECK(p * q == q * p + one);
  CHECK(commutator(p, q) == one);
  CHECK(commutator(OpElement::p(ctx, 0, -1), q) == -OpElement::p(ctx, 0, -2));
  CHECK(commutator(p, OpElement::ln_p(ctx)).is_zero());
  CHECK(OpElement::p(ctx, 0, -1) * p == one);
  const Scalar d = Scalar::frac(3, 7);
  CHECK(commutator(OpElement::p(ctx, 0, d), q) == d * OpElement::p(ctx, 0, d - 1));
  CHECK(commutator(OpElement::ln_p(ctx), q) == OpElement::p(ctx, 0, -1));
  CHECK_THROWS_AS(p * OpElement::p(OpContext{2, 0, {}}), BackendMismatch);
}

TEST_CASE("shift products") {
  OpContext ctx{0, 2, {"w"}};
  const Scalar k = (Scalar(1) - h) / (Scalar(1) + h);
  auto sx = OpElement::shift(ctx, 1), sy = OpElement::shift(ctx, 0, 1);
  auto kx = OpElement::exponential(ctx, k, 1);
  CHECK(sx * kx == k * kx * sx);
  CHECK(sx * sy == sy * sx);
  auto w = OpElement::central(ctx, "w");
  auto a = w * OpElement::exponential(ctx, k, -1) * sx;
  CHECK(sx * a == k.inverse() * (a * sx));
  auto x = OpElement::coordinate(ctx, 0);
  CHECK(sx * x == (x + OpElement::constant(ctx, 1)) * sx);
  CHECK(OpElement::exponential(ctx, k, 1) == OpElement::exponential(ctx, k.inverse(), -1));
}

TEST_CASE("associativity") {
  std::mt19937 rng(71);
  OpContext weyl{1, 0, {}};
  OpContext shift{0, 2, {"w"}};
  OpContext tensor{1, 1, {}};
  for (int t = 0; t < 100; ++t) {
    auto a = random_weyl(rng, weyl), b = random_weyl(rng, weyl), c = random_weyl(rng, weyl);
    CHECK((a * b) * c == a * (b * c));
  }
  for (int t = 0; t < 100; ++t) {
    auto a = random_shift(rng, shift, Scalar(2)), b = random_shift(rng, shift, Scalar(2)),
         c = random_shift(rng, shift, Scalar(2));
    CHECK((a * b) * c == a * (b * c));
  }
  for (int t = 0; t < 100; ++t) {
    auto a = random_tensor(rng, tensor), b = random_tensor(rng, tensor), c = random_tensor(rng, tensor);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("catalog entries verify") {
  std::vector<std::pair<std::string, CaseParams>> cases = {
      {"orbit2", {}},
      {"orbit3", {}},
      {"orbit4", {}},
      {"rank1", {{"f30", 1}, {"f21", 2}, {"f12", -1}, {"f03", 3}}},
      {"orbit5", {}},
      {"orbit6", {}},
      {"orbit7", {}},
      {"orbit8", {}},
      {"orbit9", {}},
      {"rank2a", {{"lambda", 1}, {"c1", 1}, {"c2", 1}}},
      {"rank2b", {{"c1", 0}, {"c2", 1}}},
      {"rank2b", {{"c1", 1}, {"c2", 1}}},
      {"rank2b", {{"c1", Rational(1, 6)}, {"c2", 1}}},
      {"rank3a", {{"lambda1", 1}, {"lambda2", 2}, {"c", 1}}},
      {"rank3b", {{"lambda", 1}, {"g", 0}}},
      {"rank3b", {{"lambda", 1}, {"g", 2}}},
      {"rank3c", {{"lambda", 1}, {"c", 0}}},
      {"rank3c", {{"lambda", 1}, {"c", 1}}},
  };
  for (const auto& [id, params] : cases) {
    CAPTURE(id);
    auto r = catalog(id, params);
    CHECK(all_zero(verify(r.x, r.relations)));
    CHECK(all_zero(verify(r.x, triangularize(r.relations))));
  }
  for (const auto& id : catalog_ids()) {
    CAPTURE(id);
    CHECK_NOTHROW(catalog(id, id == "rank1" ? CaseParams{{"f30", 1}} : CaseParams{}));
  }
}

TEST_CASE("catalog shapes and errors") {
  auto q = catalog("rank3a", {{"lambda1", 1}, {"lambda2", 2}});
  CHECK(q.backend == "shift");
  CHECK(q.x[0] == OpElement::shift(q.x[0].context(), 1));

  auto o5 = catalog("orbit5");
  const auto& ctx = o5.x[0].context();
  CHECK(o5.x[0] == OpElement::p(ctx, 0, -1));
  CHECK(o5.x[1] == -(h * OpElement::q(ctx) + OpElement::central(ctx, "w")));
  Triple bad = o5.x;
  bad[2] += OpElement::q(ctx);
  CHECK_FALSE(all_zero(verify(bad, o5.relations)));

  CHECK_THROWS_AS(catalog("orbit7", {{"k", 1}}), DegenerateParams);
  CHECK_THROWS_AS(catalog("orbit11"), InvalidArgument);
  CHECK_THROWS_AS(catalog("orbit7", {{"nope", 1}}), InvalidArgument);
  CHECK_THROWS_AS(verify(o5.x, std::vector<Tensor2>(2)), ArityMismatch);
}

TEST_CASE("independence") {
  auto o2 = independence(catalog("orbit2").x, 3);
  CHECK(o2.independent);
  CHECK(o2.rank == 20);
  CHECK(o2.monomials == 20);
  CHECK(independence(catalog("rank3a", {{"lambda1", 1}, {"lambda2", 2}}).x, 3).independent);
  Triple deg = catalog("orbit2").x;
  deg[2] = deg[0];
  auto d = independence(deg, 2);
  CHECK_FALSE(d.independent);
  CHECK(d.rank < d.monomials);
  CHECK_THROWS_AS(independence(deg, 5), DegreeGuard);
}

TEST_CASE("series grading") {
  std::mt19937 rng(73);
  std::uniform_int_distribution<int> e(0, 2), pe(-1, 2);
  auto rnd = [&](int order) {
    SeriesElement s(order);
    for (int t = 0; t < 4; ++t) {
      int i = e(rng), j = e(rng);
      s.set(i, j, s.coeff(i, j) + PVPoly::monomial(random_rational(rng), pe(rng), e(rng)));
    }
    return s;
  };
  for (int t = 0; t < 30; ++t) {
    auto a = rnd(6), b = rnd(6), c = rnd(6);
    CHECK((a * b) * c == a * (b * c));
    for (int da = 0; da <= 3; ++da)
      for (int db = 0; db <= 3; ++db) {
        auto ga = a.graded(da), gb = b.graded(db);
        auto prod = ga * gb;
        if (prod.is_zero()) continue;
        CHECK(prod.graded(da + db) == prod);
        if (!ga.is_zero() && !gb.is_zero()) CHECK(prod.min_h_degree() >= ga.min_h_degree() + gb.min_h_degree());
      }
  }
  // [p, q] = h with q on the left.
  SeriesElement p = SeriesElement::constant(4, PVPoly::monomial(1, 1, 0));
  SeriesElement q = SeriesElement::monomial(4, 0, 1, PVPoly::monomial(1, 0, 0));
  CHECK(p * q - q * p == SeriesElement::monomial(4, 1, 0, PVPoly::monomial(1, 0, 0)));
}

TEST_CASE("orbit 10 series") {
  const PVPoly v3 = PVPoly::monomial(1, 0, 3);
  auto r = solve_case10(1, 0, 3);
  CHECK(r.ok());
  CHECK(r.u == v3);
  for (auto [c1, c2, n] : std::vector<std::tuple<int, int, int>>{{1, 0, 4}, {1, 1, 4}, {0, 0, 2}, {2, -1, 4}}) {
    auto s = solve_case10(c1, c2, n);
    CHECK(s.ok());
    CHECK(s.u == v3);
    CHECK(s.x[0].coeff(0, 1) == PVPoly::monomial(3, 0, 2));
    CHECK(s.x[0].coeff(0, 0).is_zero());
    CHECK(s.x[1].coeff(0, 0) == PVPoly::monomial(1, 0, 1));
    CHECK(s.x[2] == SeriesElement::constant(n, PVPoly::monomial(1, 1, 0)));
    for (const auto& res : s.residual) CHECK(res.is_zero());
    for (const auto& d : s.delta) CHECK(d.is_zero());
  }
  CHECK_THROWS_AS(solve_case10(1, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(solve_case10(1, 0, 9), DegreeGuard);
}
