#include "qpb/series10.hpp"

#include <algorithm>

#include "qpb/bracket.hpp"
#include "qpb/errors.hpp"
#include "qpb/quantize.hpp"

namespace qpb {

PVPoly PVPoly::monomial(const Rational& c, int p, int v) {
  PVPoly r;
  r.add(p, v, c);
  return r;
}

void PVPoly::add(int p, int v, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, ins] = t_.try_emplace({p, v}, c);
  if (!ins) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

bool PVPoly::depends_on_p() const {
  return std::any_of(t_.begin(), t_.end(), [](const auto& e) { return e.first.first != 0; });
}

PVPoly& PVPoly::operator+=(const PVPoly& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}

PVPoly& PVPoly::operator-=(const PVPoly& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, -c);
  return *this;
}

PVPoly& PVPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [k, c] : t_) c *= s;
  return *this;
}

PVPoly operator*(const PVPoly& a, const PVPoly& b) {
  PVPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

PVPoly PVPoly::dp() const {
  PVPoly r;
  for (const auto& [k, c] : t_)
    if (k.first != 0) r.add(k.first - 1, k.second, c * k.first);
  return r;
}

PVPoly PVPoly::integrate_p() const {
  PVPoly r;
  for (const auto& [k, c] : t_) {
    if (k.first == -1) throw InvalidArgument("p^-1 has no Laurent antiderivative");
    r.add(k.first + 1, k.second, c / (k.first + 1));
  }
  return r;
}

std::string PVPoly::str() const {
  if (t_.empty()) return "0";
  // Descending p, then descending v.
  std::vector<std::pair<std::pair<int, int>, Rational>> terms(t_.rbegin(), t_.rend());
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    std::string mono;
    auto put = [&](const char* n, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += n;
      if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    };
    put("p", k.first);
    put("v", k.second);
    Rational mag = abs(c);
    out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

SeriesElement SeriesElement::constant(int order, const PVPoly& c) { return monomial(order, 0, 0, c); }

SeriesElement SeriesElement::monomial(int order, int i, int j, const PVPoly& c) {
  SeriesElement s(order);
  s.set(i, j, c);
  return s;
}

PVPoly SeriesElement::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? PVPoly() : it->second;
}

void SeriesElement::set(int i, int j, const PVPoly& c) {
  if (i + j > order_) return;
  if (c.is_zero()) c_.erase({i, j});
  else c_[{i, j}] = c;
}

int SeriesElement::min_degree() const {
  int d = -1;
  for (const auto& [k, c] : c_) d = d < 0 ? k.first + k.second : std::min(d, k.first + k.second);
  return d;
}

int SeriesElement::min_h_degree() const {
  int d = -1;
  for (const auto& [k, c] : c_) d = d < 0 ? k.first : std::min(d, k.first);
  return d;
}

SeriesElement SeriesElement::graded(int d) const {
  SeriesElement r(order_);
  for (const auto& [k, c] : c_)
    if (k.first + k.second == d) r.c_[k] = c;
  return r;
}

SeriesElement& SeriesElement::operator+=(const SeriesElement& o) {
  order_ = std::min(order_, o.order_);
  for (const auto& [k, c] : o.c_) set(k.first, k.second, coeff(k.first, k.second) + c);
  for (auto it = c_.begin(); it != c_.end();)
    it = it->first.first + it->first.second > order_ ? c_.erase(it) : std::next(it);
  return *this;
}

SeriesElement& SeriesElement::operator-=(const SeriesElement& o) {
  SeriesElement n = o;
  for (auto& [k, c] : n.c_) c *= Rational(-1);
  return *this += n;
}

// (h^i1 q^j1 a) * (h^i2 q^j2 b) = sum_m h^(i1+i2+m) q^(j1+j2-m) C(j2,m) a^(m) b.
SeriesElement operator*(const SeriesElement& a, const SeriesElement& b) {
  SeriesElement r(std::min(a.order_, b.order_));
  std::map<SeriesElement::Key, PVPoly> acc;
  for (const auto& [ka, ca] : a.c_) {
    for (const auto& [kb, cb] : b.c_) {
      if (ka.first + ka.second + kb.first + kb.second > r.order_) continue;
      PVPoly da = ca;
      Rational binom = 1;
      for (int m = 0; m <= kb.second && !da.is_zero(); ++m) {
        if (m > 0) {
          da = da.dp();
          binom = binom * (kb.second - m + 1) / m;
        }
        acc[{ka.first + kb.first + m, ka.second + kb.second - m}] += (da * cb) * binom;
      }
    }
  }
  for (const auto& [k, c] : acc) r.set(k.first, k.second, c);
  return r;
}

SeriesElement SeriesElement::shift_h(int k) const {
  SeriesElement r(order_);
  for (const auto& [key, c] : c_) r.set(key.first + k, key.second, c);
  return r;
}

SeriesElement SeriesElement::scaled(const Rational& s) const {
  SeriesElement r(order_);
  for (const auto& [k, c] : c_) r.set(k.first, k.second, c * s);
  return r;
}

std::string SeriesElement::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : c_) {
    std::string mono;
    if (k.first) mono += k.first == 1 ? "h" : "h^" + std::to_string(k.first);
    if (k.second) mono += std::string(mono.empty() ? "" : "*") + (k.second == 1 ? "q" : "q^" + std::to_string(k.second));
    std::string cs = c.str();
    bool negative = false;
    if (c.terms().size() > 1) {
      if (!mono.empty()) cs = "(" + cs + ")";
    } else if (cs.front() == '-') {
      negative = true;
      cs = cs.substr(1);
    }
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    out += mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
  }
  return out;
}

bool Series10Result::ok() const {
  for (const auto& r : residual)
    if (!r.is_zero()) return false;
  for (const auto& d : delta)
    if (!d.is_zero()) return false;
  return !u.depends_on_p();
}

namespace {

// Substitute into a tensor relation; h in the coefficients raises the h grade.
SeriesElement apply(const Tensor2& t, const std::array<SeriesElement, 9>& words, int order) {
  SeriesElement r(order);
  for (size_t w = 0; w < 9; ++w) {
    if (t[w].is_zero()) continue;
    if (!t[w].is_polynomial()) throw InvalidArgument("relation coefficient is not polynomial in h");
    const auto& co = t[w].num().coeffs();
    for (size_t k = 0; k < co.size(); ++k)
      if (sgn(co[k]) != 0) r += words[w].shift_h(static_cast<int>(k)).scaled(co[k]);
  }
  return r;
}

std::array<SeriesElement, 3> residuals(const std::array<SeriesElement, 3>& x, const std::array<Relation, 3>& rels,
                                       int order) {
  std::array<SeriesElement, 9> words;
  for (size_t a = 0; a < 3; ++a)
    for (size_t b = 0; b < 3; ++b) words[3 * a + b] = x[a] * x[b];
  std::array<SeriesElement, 3> out;
  for (size_t r = 0; r < 3; ++r) out[r] = apply(rels[r].t, words, order);
  return out;
}

}  // namespace

Series10Result solve_case10(const Rational& c1, const Rational& c2, int N) {
  if (N < 2) throw InvalidArgument("solve_case10 needs order N >= 2");
  if (N > 8) throw DegreeGuard("solve_case10 order is limited to 8");
  const Poly X = Poly::var(0), Y = Poly::var(1), Z = Poly::var(2);
  const Poly H = Z * Z * X + Scalar(c1) * X * Y * Y + Scalar(c2) * X * X * Y + Y.pow(3);
  const auto rels = relations(from_case(CaseId::a, H));  // (1,2), (2,3), (3,1)

  std::array<SeriesElement, 3> x{SeriesElement(N), SeriesElement(N), SeriesElement(N)};
  x[1].set(0, 0, PVPoly::monomial(1, 0, 1));
  x[2].set(0, 0, PVPoly::monomial(1, 1, 0));
  const Rational three_v2_inv = Rational(1, 3);  // times v^-2

  Series10Result out;
  for (int n = 1; n <= N; ++n) {
    if (n >= 2) {
      // q-free part of the first relation at h^n fixes x_{2,n-1,0} up to a constant.
      auto res = residuals(x, rels, N);
      PVPoly r = res[0].coeff(n, 0);
      PVPoly g = r.integrate_p() * PVPoly::monomial(three_v2_inv, 0, -2);
      x[1].set(n - 1, 0, g);
    }
    // [x2, p] = -h d/dq x2 and [p, x1] = h d/dq x1 fix the q-parts of degree n.
    auto res = residuals(x, rels, N);
    for (int j = 1; j <= n; ++j) {
      const int i = n - j;
      x[0].set(i, j, res[2].coeff(i + 1, j - 1) * Rational(-1, j));
      x[1].set(i, j, res[1].coeff(i + 1, j - 1) * Rational(1, j));
    }
  }
  out.x = x;
  out.residual = residuals(x, rels, N);
  for (int n = 1; n <= N; ++n) out.delta.push_back(out.residual[0].coeff(n, 0));
  // H(x_{1,0,0}, x_{2,0,0}, p) with commuting degree-0 parts.
  const PVPoly a = x[0].coeff(0, 0), b = x[1].coeff(0, 0), p = PVPoly::monomial(1, 1, 0);
  out.u = p * p * a + a * b * b * c1 + a * a * b * c2 + b * b * b;
  return out;
}

}  // namespace qpb
