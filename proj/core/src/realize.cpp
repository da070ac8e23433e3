#include "qpb/realize.hpp"

#include <algorithm>
#include <set>

#include "qpb/echelon.hpp"
#include "qpb/errors.hpp"
#include "qpb/orbit.hpp"

namespace qpb {

namespace {

Scalar get(const CaseParams& p, const std::string& name, const Rational& fallback) {
  auto it = p.find(name);
  return Scalar(it == p.end() ? fallback : it->second);
}

bool has(const CaseParams& p, const std::string& name) { return p.count(name) > 0; }

void allow_only(const CaseParams& p, std::set<std::string> names) {
  for (const auto& [k, v] : p)
    if (!names.count(k)) throw InvalidArgument("unexpected parameter " + k);
}

RewritingSystem rules_of(const QuadraticBracket& b) { return triangularize(relations(b)); }

// Rule m may only touch the listed standard words.
void expect_support(const RewritingSystem& rs, int m, std::initializer_list<int> words) {
  const Tensor2& t = rs.rule(m);
  for (int i = 0; i < 9; ++i)
    if (!t[static_cast<size_t>(i)].is_zero() && std::find(words.begin(), words.end(), i) == words.end())
      throw Inconsistent("rewriting rule " + std::to_string(m) + " has an unexpected term on " +
                         word_str(word_from_index(static_cast<uint32_t>(i), 2)));
}

Scalar entry(const RewritingSystem& rs, int m, int word) { return rs.rule(m)[static_cast<size_t>(word)]; }

void nonzero(const Scalar& s, const std::string& condition) {
  if (s.is_zero()) throw DegenerateParams(condition);
}

// Words: 0 x1x1, 1 x1x2, 2 x1x3, 4 x2x2, 5 x2x3.
Tensor2 rule(int left, std::initializer_list<std::pair<int, Scalar>> rhs) {
  Tensor2 t{};
  t[static_cast<size_t>(left)] = Scalar(1);
  for (const auto& [w, c] : rhs) t[static_cast<size_t>(w)] -= c;
  return t;
}

OpElement image(const Poly& f, const std::array<OpElement, 3>& x, const OpContext& ctx) {
  OpElement r(ctx);
  for (const auto& [e, c] : f.terms()) {
    OpElement t = OpElement::constant(ctx, c);
    for (size_t i = 0; i < 3; ++i) t = t * x[i].pow(e[i]);
    r += t;
  }
  return r;
}

Poly cubic_in_x1_x2(const CaseParams& p) {
  Poly X = Poly::var(0), Y = Poly::var(1);
  return get(p, "f30", 0) * X.pow(3) + get(p, "f21", 0) * X * X * Y + get(p, "f12", 0) * X * Y * Y +
         get(p, "f03", 0) * Y.pow(3);
}

// Second Weyl algebra: x1 = p1, x2 = p2, x3 = h (q2 y23 - q1 y31) + z.
Realization second_weyl(const std::string& id, const QuadraticBracket& b) {
  if (!b.y(0, 1).is_zero()) throw Inconsistent("second Weyl realization needs y12 = 0");
  OpContext ctx{2, 0, {"z"}};
  Realization r{id, "weyl", {}, tensors(relations(b)), {}};
  const auto p1 = OpElement::p(ctx, 0), p2 = OpElement::p(ctx, 1);
  const std::array<OpElement, 3> ps{p1, p2, OpElement(ctx)};
  for (const auto& y : {b.y(1, 2), b.y(2, 0)})
    for (const auto& [e, c] : y.terms())
      if (e[2] != 0) throw Inconsistent("second Weyl realization needs y23, y31 free of x3");
  r.x = {p1, p2,
         Scalar::h() * (OpElement::q(ctx, 1) * image(b.y(1, 2), ps, ctx) -
                        OpElement::q(ctx, 0) * image(b.y(2, 0), ps, ctx)) +
             OpElement::central(ctx, "z")};
  return r;
}

Realization orbit_5_6(int orbit) {
  OpContext ctx{1, 0, {"w", "z"}};
  QuadraticBracket b = from_case(CaseId::a, orbit_representative(orbit));
  Realization r{"orbit" + std::to_string(orbit), "weyl", {}, tensors(relations(b)), {}};
  const Scalar h = Scalar::h();
  const auto p = OpElement::p(ctx), pinv = OpElement::p(ctx, 0, Scalar(-1)), p2 = OpElement::p(ctx, 0, Scalar(2));
  const auto z = OpElement::central(ctx, "z");
  const OpElement hq = h * OpElement::q(ctx) + OpElement::central(ctx, "w");
  r.x[0] = pinv;
  r.x[1] = -hq;
  if (orbit == 5)
    r.x[2] = -(hq * hq * p) - h * hq + (h * h * Scalar::frac(1, 3)) * pinv + z * p2;
  else
    r.x[2] = hq.pow(3) * p2 + Scalar(3) * h * hq * hq * p + z * p2;
  return r;
}

Realization orbit_7_9(int orbit, const CaseParams& params) {
  Scalar k, c, d;
  std::vector<Tensor2> rels;
  if (has(params, "k")) {
    k = get(params, "k", 0);
    c = get(params, "c", 0);
    d = get(params, "d", 0);
    nonzero(k, "k = 0");
    rels = {rule(3, {{1, k}}), rule(6, {{2, k.inverse()}, {4, d}}), rule(7, {{5, k}, {0, c}})};
  } else {
    QuadraticBracket b = from_case(CaseId::a, orbit_representative(orbit));
    RewritingSystem rs = rules_of(b);
    expect_support(rs, 0, {1});
    expect_support(rs, 1, {2, 4});
    expect_support(rs, 2, {5, 0});
    k = entry(rs, 0, 1);
    d = entry(rs, 1, 4);
    c = entry(rs, 2, 0);
    if (entry(rs, 1, 2) != k.inverse() || entry(rs, 2, 5) != k)
      throw Inconsistent("rules do not have the shape x3x1 = k^-1 x1x3, x3x2 = k x2x3");
    rels = tensors(relations(b));
  }
  const Scalar den = Scalar(1) - k.pow(3);
  nonzero(den, "1 - k^3 = 0");
  OpContext ctx{0, 1, {"w", "z"}};
  const auto s = OpElement::shift(ctx, 1);
  const auto w = OpElement::central(ctx, "w");
  const auto winv = OpElement::central(ctx, "w", -1);
  const auto w2 = OpElement::central(ctx, "w", 2);
  const auto z = OpElement::central(ctx, "z");
  Realization r{"orbit" + std::to_string(orbit), "shift", {}, rels, {{"k", k}, {"c", c}, {"d", d}}};
  r.x[0] = s;
  r.x[1] = w * OpElement::exponential(ctx, k, -1) * s;
  r.x[2] = (k * den.inverse()) *
               (c * winv * OpElement::exponential(ctx, k, 1) - d * w2 * OpElement::exponential(ctx, k, -2, 0, 1)) *
               s +
           z * OpElement::exponential(ctx, k, 1) * OpElement::shift(ctx, -2);
  return r;
}

Realization rank2a(const CaseParams& params) {
  Scalar k, k1, c;
  std::vector<Tensor2> rels;
  if (has(params, "k")) {
    k = get(params, "k", 0);
    k1 = get(params, "k1", 1);
    c = get(params, "c", 0);
    nonzero(k, "k = 0");
    nonzero(k1, "k1 = 0");
    rels = {rule(3, {{1, k}}), rule(6, {{2, k.inverse()}}), rule(7, {{5, k1}, {0, c}})};
  } else {
    Poly X = Poly::var(0), Y = Poly::var(1), Z = Poly::var(2);
    Poly f = Scalar(2) * get(params, "c1", 0) * X * Y * Z + get(params, "c2", 0) * X.pow(3);
    QuadraticBracket b = from_case(CaseId::ca, f, {{"lambda", get(params, "lambda", 1).constant()}});
    RewritingSystem rs = rules_of(b);
    expect_support(rs, 0, {1});
    expect_support(rs, 1, {2});
    expect_support(rs, 2, {5, 0});
    k = entry(rs, 0, 1);
    k1 = entry(rs, 2, 5);
    c = entry(rs, 2, 0);
    if (entry(rs, 1, 2) != k.inverse()) throw Inconsistent("rule x3x1 is not k^-1 x1x3");
    rels = tensors(relations(b));
  }
  const Scalar den = Scalar(1) - k1 * k * k;
  nonzero(den, "1 - k1*k^2 = 0");
  OpContext ctx{0, 2, {"w", "z"}};
  const auto sx = OpElement::shift(ctx, 1, 0);
  Realization r{"rank2a", "shift", {}, rels, {{"k", k}, {"k1", k1}, {"c", c}}};
  r.x[0] = sx;
  r.x[1] = OpElement::central(ctx, "w") * OpElement::exponential(ctx, k, -1, 1) * OpElement::exponential(ctx, k1, 0, 1) * sx;
  r.x[2] = (c * den.inverse()) * OpElement::central(ctx, "w", -1) * OpElement::exponential(ctx, k, 1, -1, 1) *
               OpElement::exponential(ctx, k1, 0, -1) * sx +
           OpElement::central(ctx, "z") * OpElement::exponential(ctx, k, 1) * OpElement::shift(ctx, 0, 1);
  return r;
}

Realization rank2b(const CaseParams& params) {
  const Scalar c1 = get(params, "c1", 0), c2 = get(params, "c2", 0);
  Poly X = Poly::var(0), Y = Poly::var(1), Z = Poly::var(2);
  Poly f = Scalar(-2) * c1 * Z * X * X + c1 * X * Y * Y + c2 * X.pow(3);
  QuadraticBracket b = from_case(CaseId::cb, f);
  const Scalar h = Scalar::h();
  Realization r{"rank2b", "weyl", {}, tensors(relations(b)), {}};
  if (c1.is_zero()) {
    OpContext ctx{1, 0, {"x1", "w", "z"}};
    const auto x1 = OpElement::central(ctx, "x1");
    const OpElement ht = h * OpElement::q(ctx) * OpElement::p(ctx) + OpElement::central(ctx, "w");
    r.x[0] = x1;
    r.x[1] = -(x1 * ht);
    r.x[2] = x1 * (Scalar::frac(1, 2) * ht * ht - OpElement::constant(ctx, Scalar(3) * c2) +
                   OpElement::central(ctx, "z") * OpElement::p(ctx));
    r.derived["regime"] = Scalar(0);
    return r;
  }
  OpContext ctx{1, 0, {"w", "z"}};
  const auto p = OpElement::p(ctx), pinv = OpElement::p(ctx, 0, Scalar(-1));
  const OpElement hq = h * OpElement::q(ctx) + OpElement::central(ctx, "w");
  const Scalar numer = c1 * c1 * h * h * (Scalar(4) * c1 - Scalar(1)) - Scalar(3) * c2;
  r.x[0] = pinv;
  r.x[1] = Scalar(2) * c1 * hq;
  const OpElement head = Scalar(2) * c1 * c1 * (hq * hq * p + h * hq);
  const Scalar e = Scalar(1) - Scalar(6) * c1;
  if (!e.is_zero()) {
    const Scalar d = Scalar(2) - (Scalar(2) * c1).inverse();
    r.x[2] = head + (numer * e.inverse()) * pinv + OpElement::central(ctx, "z") * OpElement::p(ctx, 0, d);
    r.derived["d"] = d;
  } else {
    r.x[2] = head + (numer * (Scalar(2) * c1).inverse()) * pinv * OpElement::ln_p(ctx) +
             OpElement::central(ctx, "z") * pinv;
  }
  return r;
}

Realization quantum_space(const std::string& id, const QuadraticBracket& b) {
  RewritingSystem rs = rules_of(b);
  expect_support(rs, 0, {1});
  expect_support(rs, 1, {2});
  expect_support(rs, 2, {5});
  const Scalar k3 = entry(rs, 0, 1), k2 = entry(rs, 1, 2), k1 = entry(rs, 2, 5);
  OpContext ctx{0, 2, {"z"}};
  Realization r{id, "shift", {}, tensors(relations(b)), {{"k1", k1}, {"k2", k2}, {"k3", k3}}};
  r.x[0] = OpElement::shift(ctx, 1, 0);
  r.x[1] = OpElement::exponential(ctx, k3, -1) * OpElement::shift(ctx, 0, 1);
  r.x[2] = OpElement::central(ctx, "z") * OpElement::exponential(ctx, k2, -1) * OpElement::exponential(ctx, k1, 0, -1);
  return r;
}

// [x1,x2] = a x1^2 with x3x1 = k x1x3, x3x2 = k x2x3 + k1 x1x3.
Realization third_subcase(const std::string& id, const QuadraticBracket& b) {
  RewritingSystem rs = rules_of(b);
  expect_support(rs, 0, {1, 0});
  expect_support(rs, 1, {2});
  expect_support(rs, 2, {5, 2});
  if (!entry(rs, 0, 1).is_one()) throw Inconsistent("rule x2x1 is not x1x2 - a x1^2");
  const Scalar a = -entry(rs, 0, 0), k = entry(rs, 1, 2), k1 = entry(rs, 2, 2);
  if (entry(rs, 2, 5) != k) throw Inconsistent("rule x3x2 is not (k x2 + k1 x1) x3");
  Realization r{id, "", {}, tensors(relations(b)), {{"a", a}, {"k", k}, {"k1", k1}}};
  if (a.is_zero()) {
    OpContext ctx{0, 1, {"w"}};
    const auto w = OpElement::central(ctx, "w");
    r.backend = "shift";
    r.x[0] = w * OpElement::exponential(ctx, k, 1);
    r.x[1] = k1 * w * OpElement::coordinate(ctx, 0) * OpElement::exponential(ctx, k, 1, 0, -1);
    r.x[2] = OpElement::shift(ctx, 1);
    return r;
  }
  OpContext ctx{1, 1, {"w", "z"}};
  const Scalar d = -k1 * k.inverse() * a.inverse();
  const auto s = OpElement::shift(ctx, 1);
  r.backend = "tensor";
  r.derived["d"] = d;
  r.x[0] = OpElement::p(ctx, 0, Scalar(-1)) * s;
  r.x[1] = -((a * OpElement::q(ctx) + OpElement::central(ctx, "w")) * s);
  r.x[2] = OpElement::central(ctx, "z") * OpElement::p(ctx, 0, d) * OpElement::exponential(ctx, k, -1);
  return r;
}

}  // namespace

std::vector<std::string> catalog_ids() {
  return {"orbit2", "orbit3", "orbit4", "rank1",  "orbit5", "orbit6", "orbit7",
          "orbit8", "orbit9", "rank2a", "rank2b", "rank3a", "rank3b", "rank3c"};
}

Realization catalog(const std::string& id, const CaseParams& params) {
  if (id == "orbit2" || id == "orbit3" || id == "orbit4") {
    allow_only(params, {});
    return second_weyl(id, from_case(CaseId::a, orbit_representative(id.back() - '0')));
  }
  if (id == "rank1") {
    allow_only(params, {"f30", "f21", "f12", "f03"});
    return second_weyl(id, from_case(CaseId::b, cubic_in_x1_x2(params)));
  }
  if (id == "orbit5" || id == "orbit6") {
    allow_only(params, {});
    return orbit_5_6(id.back() - '0');
  }
  if (id == "orbit7" || id == "orbit8" || id == "orbit9") {
    allow_only(params, {"k", "c", "d"});
    return orbit_7_9(id.back() - '0', params);
  }
  if (id == "rank2a") {
    allow_only(params, {"lambda", "c1", "c2", "k", "k1", "c"});
    return rank2a(params);
  }
  if (id == "rank2b") {
    allow_only(params, {"c1", "c2"});
    return rank2b(params);
  }
  if (id == "rank3a") {
    allow_only(params, {"lambda1", "lambda2", "c"});
    Poly f = Scalar(2) * get(params, "c", 0) * Poly::var(0) * Poly::var(1) * Poly::var(2);
    return quantum_space(id, from_case(CaseId::da, f, {{"lambda1", get(params, "lambda1", 1).constant()},
                                                       {"lambda2", get(params, "lambda2", 1).constant()}}));
  }
  if (id == "rank3b") {
    allow_only(params, {"lambda", "g"});
    const Rational g = get(params, "g", 0).constant();
    const CaseParams lam{{"lambda", get(params, "lambda", 1).constant()}};
    Poly X = Poly::var(0), Y = Poly::var(1), Z = Poly::var(2);
    if (g == 0) return quantum_space(id, from_case(CaseId::db, Poly(), lam));
    if (g == 1) return quantum_space(id, from_case(CaseId::db, X * Y * Z, lam));
    if (g == 2) return third_subcase(id, from_case(CaseId::db, X * X * Z, lam));
    throw InvalidArgument("rank3b: g must be 0 (f = 0), 1 (f = x1x2x3) or 2 (f = x1^2x3)");
  }
  if (id == "rank3c") {
    allow_only(params, {"lambda", "c"});
    Poly f = get(params, "c", 0) * Poly::var(0) * Poly::var(0) * Poly::var(2);
    return third_subcase(id, from_case(CaseId::dc, f, {{"lambda", get(params, "lambda", 1).constant()}}));
  }
  throw InvalidArgument("unknown catalog id '" + id + "'");
}

std::vector<Tensor2> rule_tensors(const RewritingSystem& rs) {
  std::vector<Tensor2> out;
  for (int m = 0; m < 3; ++m) {
    Tensor2 t;
    for (size_t i = 0; i < 9; ++i) t[i] = -rs.rule(m)[i];
    t[static_cast<size_t>(RewritingSystem::kLeft[static_cast<size_t>(m)])] += Scalar(1);
    out.push_back(t);
  }
  return out;
}

Triple verify(const Triple& x, const std::vector<Tensor2>& relations) {
  if (relations.size() != 3) throw ArityMismatch("verify expects three relations");
  const OpContext& ctx = x[0].context();
  if (!(x[1].context() == ctx) || !(x[2].context() == ctx)) throw BackendMismatch("triple mixes operator algebras");
  std::array<OpElement, 9> words;
  for (size_t a = 0; a < 3; ++a)
    for (size_t b = 0; b < 3; ++b) words[3 * a + b] = x[a] * x[b];
  Triple out;
  for (size_t r = 0; r < 3; ++r) {
    OpElement res(ctx);
    for (size_t t = 0; t < 9; ++t)
      if (!relations[r][t].is_zero()) res += relations[r][t] * words[t];
    out[r] = res;
  }
  return out;
}

Triple verify(const Triple& x, const RewritingSystem& rs) { return verify(x, rule_tensors(rs)); }

IndependenceResult independence(const Triple& x, int D) {
  if (D > 4) throw DegreeGuard("independence degree bound is limited to 4");
  if (D < 0) throw InvalidArgument("negative degree bound");
  const OpContext& ctx = x[0].context();
  if (!(x[1].context() == ctx) || !(x[2].context() == ctx)) throw BackendMismatch("triple mixes operator algebras");
  std::array<std::vector<OpElement>, 3> pw;
  for (size_t i = 0; i < 3; ++i) {
    pw[i].push_back(OpElement::constant(ctx, Scalar(1)));
    for (int e = 1; e <= D; ++e) pw[i].push_back(pw[i].back() * x[i]);
  }
  std::map<OpKey, uint32_t> columns;
  std::vector<SparseRow<Scalar>> rows;
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j)
      for (int k = 0; i + j + k <= D; ++k) {
        OpElement m = pw[0][static_cast<size_t>(i)] * pw[1][static_cast<size_t>(j)] * pw[2][static_cast<size_t>(k)];
        SparseRow<Scalar> row;
        for (const auto& [key, c] : m.terms()) {
          auto [it, ins] = columns.try_emplace(key, static_cast<uint32_t>(columns.size()));
          row.emplace_back(it->second, c);
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
      }
  IndependenceResult r;
  r.monomials = rows.size();
  r.rank = sparse_rank(rows);
  r.independent = r.rank == r.monomials;
  return r;
}

}  // namespace qpb
