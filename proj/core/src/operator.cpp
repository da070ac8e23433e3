#include "qpb/operator.hpp"

#include <algorithm>

#include "qpb/errors.hpp"

namespace qpb {

namespace {

// b and 1/b share a symbol: keep the smaller of the two, flip the form.
std::pair<Scalar, int> canonical_base(const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  Scalar inv = b.inverse();
  if (b.is_polynomial() != inv.is_polynomial()) return b.is_polynomial() ? std::pair{b, 1} : std::pair{inv, -1};
  if (inv < b) return {inv, -1};
  return {b, 1};
}

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

struct PTerm {
  Scalar coef;
  Scalar pexp;
  int ln;
};

// d/dp of c p^a (ln p)^e = c a p^(a-1) (ln p)^e + c e p^(a-1) (ln p)^(e-1)
std::vector<PTerm> dp(const std::vector<PTerm>& in) {
  std::vector<PTerm> out;
  for (const auto& t : in) {
    Scalar a1 = t.pexp - Scalar(1);
    if (!t.pexp.is_zero()) out.push_back({t.coef * t.pexp, a1, t.ln});
    if (t.ln > 0) out.push_back({t.coef * Scalar(t.ln), a1, t.ln - 1});
  }
  return out;
}

std::string power(const std::string& base, const std::string& e) {
  if (e == "1") return base;
  return base + "^" + e;
}

std::string linear(const std::array<int, 2>& f) {
  static const char* names[2] = {"x", "y"};
  std::string s;
  for (int i = 0; i < 2; ++i) {
    int c = f[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (std::abs(c) != 1) s += std::to_string(std::abs(c)) + "*";
    s += names[i];
  }
  return s;
}

}  // namespace

OpKey OpElement::unit_key() const {
  OpKey k;
  k.central.assign(ctx_.central.size(), 0);
  const auto n = static_cast<size_t>(ctx_.weyl_pairs);
  k.q.assign(n, 0);
  k.p.assign(n, Scalar());
  k.ln.assign(n, 0);
  return k;
}

void OpElement::check(const OpElement& o) const {
  if (!(ctx_ == o.ctx_)) throw BackendMismatch("operator elements live in different algebras");
}

void OpElement::add_term(const OpKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpElement OpElement::constant(const OpContext& ctx, const Scalar& c) {
  OpElement e(ctx);
  e.add_term(e.unit_key(), c);
  return e;
}

OpElement OpElement::p(const OpContext& ctx, int pair, const Scalar& exponent) {
  if (pair < 0 || pair >= ctx.weyl_pairs) throw ArityMismatch("no such Weyl pair");
  OpElement e(ctx);
  OpKey k = e.unit_key();
  k.p[static_cast<size_t>(pair)] = exponent;
  e.add_term(k, Scalar(1));
  return e;
}

OpElement OpElement::q(const OpContext& ctx, int pair) {
  if (pair < 0 || pair >= ctx.weyl_pairs) throw ArityMismatch("no such Weyl pair");
  OpElement e(ctx);
  OpKey k = e.unit_key();
  k.q[static_cast<size_t>(pair)] = 1;
  e.add_term(k, Scalar(1));
  return e;
}

OpElement OpElement::ln_p(const OpContext& ctx, int pair) {
  if (pair < 0 || pair >= ctx.weyl_pairs) throw ArityMismatch("no such Weyl pair");
  OpElement e(ctx);
  OpKey k = e.unit_key();
  k.ln[static_cast<size_t>(pair)] = 1;
  e.add_term(k, Scalar(1));
  return e;
}

OpElement OpElement::central(const OpContext& ctx, const std::string& name, int exponent) {
  auto it = std::find(ctx.central.begin(), ctx.central.end(), name);
  if (it == ctx.central.end()) throw UnsupportedSymbol("unknown central symbol: " + name);
  OpElement e(ctx);
  OpKey k = e.unit_key();
  k.central[static_cast<size_t>(it - ctx.central.begin())] = exponent;
  e.add_term(k, Scalar(1));
  return e;
}

OpElement OpElement::shift(const OpContext& ctx, int sx, int sy) {
  if (ctx.lattice_dims < 1 || (sy != 0 && ctx.lattice_dims < 2)) throw ArityMismatch("no such shift operator");
  OpElement e(ctx);
  OpKey k = e.unit_key();
  k.shift = {sx, sy};
  e.add_term(k, Scalar(1));
  return e;
}

OpElement OpElement::exponential(const OpContext& ctx, const Scalar& base, int a, int b, int c) {
  if (ctx.lattice_dims < 1 || (b != 0 && ctx.lattice_dims < 2)) throw ArityMismatch("no such lattice coordinate");
  OpElement e(ctx);
  OpKey k = e.unit_key();
  auto [cb, sign] = canonical_base(base);
  if (!cb.is_one() && (a != 0 || b != 0)) k.exps.push_back({cb, {sign * a, sign * b}});
  e.add_term(k, base.pow(c));
  return e;
}

OpElement OpElement::coordinate(const OpContext& ctx, int axis) {
  if (axis < 0 || axis >= ctx.lattice_dims) throw ArityMismatch("no such lattice coordinate");
  OpElement e(ctx);
  OpKey k = e.unit_key();
  k.poly[static_cast<size_t>(axis)] = 1;
  e.add_term(k, Scalar(1));
  return e;
}

OpElement OpElement::operator-() const {
  OpElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

OpElement& OpElement::operator+=(const OpElement& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

OpElement& OpElement::operator-=(const OpElement& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

OpElement& OpElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

namespace {

// Product of two normal-ordered monomials, accumulated into `out`.
void multiply_keys(const OpKey& a, const OpKey& b, const Scalar& coef, OpElement& out) {
  // Lattice part: f s^m * g s^n = f g(. + m) s^(m+n).
  Scalar lat = coef;
  std::vector<ExpForm> exps = a.exps;
  for (const auto& e : b.exps) {
    lat *= e.base.pow(static_cast<long>(e.form[0]) * a.shift[0] + static_cast<long>(e.form[1]) * a.shift[1]);
    auto it = std::find_if(exps.begin(), exps.end(), [&](const ExpForm& x) { return x.base == e.base; });
    if (it == exps.end()) {
      exps.push_back(e);
    } else {
      it->form[0] += e.form[0];
      it->form[1] += e.form[1];
      if (it->form[0] == 0 && it->form[1] == 0) exps.erase(it);
    }
  }
  std::sort(exps.begin(), exps.end());
  // (x + m)^i (y + n)^j expanded.
  std::vector<std::pair<std::array<int, 2>, Rational>> polys;
  for (int i = 0; i <= b.poly[0]; ++i)
    for (int j = 0; j <= b.poly[1]; ++j) {
      Rational c = binomial(b.poly[0], i) * binomial(b.poly[1], j);
      Rational sx = 1, sy = 1;
      for (int t = 0; t < b.poly[0] - i; ++t) sx *= a.shift[0];
      for (int t = 0; t < b.poly[1] - j; ++t) sy *= a.shift[1];
      c *= sx * sy;
      if (sgn(c) == 0) continue;
      polys.push_back({{a.poly[0] + i, a.poly[1] + j}, c});
    }

  // Weyl part, pair by pair: sum_j 1/j! d_p^j(a) d_q^j(b).
  struct Partial {
    Scalar coef;
    std::vector<int> q;
    std::vector<Scalar> p;
    std::vector<int> ln;
  };
  std::vector<Partial> parts{{lat, {}, {}, {}}};
  for (size_t i = 0; i < a.q.size(); ++i) {
    std::vector<Partial> next;
    std::vector<PTerm> d{{Scalar(1), a.p[i], a.ln[i]}};
    Rational fall = 1;  // b.q!/(b.q - j)! / j!
    for (int j = 0; j <= b.q[i] && !d.empty(); ++j) {
      if (j > 0) {
        d = dp(d);
        fall = fall * (b.q[i] - j + 1) / j;
      }
      for (const auto& t : d) {
        // Combine with b's p^B (ln p)^E.
        Scalar pe = t.pexp + b.p[i];
        int le = t.ln + b.ln[i];
        for (const auto& pr : parts) {
          Partial n = pr;
          n.coef = pr.coef * t.coef * Scalar(fall);
          if (n.coef.is_zero()) continue;
          n.q.push_back(a.q[i] + b.q[i] - j);
          n.p.push_back(pe);
          n.ln.push_back(le);
          next.push_back(std::move(n));
        }
      }
    }
    parts = std::move(next);
  }

  std::vector<int> central = a.central;
  for (size_t i = 0; i < central.size(); ++i) central[i] += b.central[i];
  for (const auto& pr : parts)
    for (const auto& [pd, pc] : polys) {
      OpKey k;
      k.central = central;
      k.q = pr.q;
      k.p = pr.p;
      k.ln = pr.ln;
      k.exps = exps;
      k.poly = pd;
      k.shift = {a.shift[0] + b.shift[0], a.shift[1] + b.shift[1]};
      out.add_term(k, pr.coef * Scalar(pc));
    }
}

}  // namespace

OpElement operator*(const OpElement& a, const OpElement& b) {
  a.check(b);
  OpElement r(a.ctx_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) multiply_keys(ka, kb, ca * cb, r);
  return r;
}

OpElement OpElement::pow(int e) const {
  if (e < 0) throw InvalidArgument("negative operator power");
  OpElement r = constant(ctx_, Scalar(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

OpElement commutator(const OpElement& a, const OpElement& b) { return a * b - b * a; }

std::string OpElement::str() const {
  if (terms_.empty()) return "0";
  const bool one_pair = ctx_.weyl_pairs == 1;
  const bool one_axis = ctx_.lattice_dims == 1;
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::vector<std::string> f;
    for (size_t i = 0; i < k.central.size(); ++i)
      if (k.central[i] != 0) f.push_back(power(ctx_.central[i], std::to_string(k.central[i])));
    for (size_t i = 0; i < k.q.size(); ++i) {
      std::string idx = one_pair ? "" : std::to_string(i + 1);
      if (k.q[i] != 0) f.push_back(power("q" + idx, std::to_string(k.q[i])));
      if (!k.p[i].is_zero()) {
        std::string e = k.p[i].str();
        if (!k.p[i].is_atomic() || e.front() == '-') e = "(" + e + ")";
        f.push_back(power("p" + idx, e));
      }
      if (k.ln[i] != 0) f.push_back(power("ln(p" + idx + ")", std::to_string(k.ln[i])));
    }
    for (const auto& e : k.exps) {
      std::string b = e.base.str();
      if (!e.base.is_atomic() || b.front() == '-') b = "(" + b + ")";
      f.push_back(b + "^(" + linear(e.form) + ")");
    }
    if (k.poly[0] != 0) f.push_back(power("x", std::to_string(k.poly[0])));
    if (k.poly[1] != 0) f.push_back(power("y", std::to_string(k.poly[1])));
    if (k.shift[0] != 0) f.push_back(power(one_axis ? "s" : "s_x", std::to_string(k.shift[0])));
    if (k.shift[1] != 0) f.push_back(power("s_y", std::to_string(k.shift[1])));

    std::string mono;
    for (const auto& s : f) mono += (mono.empty() ? "" : "*") + s;
    std::string coef = c.str();
    bool negative = false;
    if (c.is_atomic() && coef.front() == '-') {
      negative = true;
      coef = (-c).str();
    } else if (!c.is_atomic()) {
      coef = "(" + coef + ")";
    }
    if (coef == "1" && !mono.empty()) coef.clear();
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    out += coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
  }
  return out;
}

}  // namespace qpb
