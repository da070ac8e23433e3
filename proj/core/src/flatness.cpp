#include "qpb/flatness.hpp"

#include <algorithm>
#include <optional>

#include "qpb/errors.hpp"

namespace qpb {

namespace {

template <class F>
using Rel = std::array<F, 9>;

size_t pow3(int k) {
  size_t n = 1;
  for (int i = 0; i < k; ++i) n *= 3;
  return n;
}

void guard(int k) {
  if (k > kMaxDegree) throw DegreeGuard("degree " + std::to_string(k) + " exceeds " + std::to_string(kMaxDegree));
  if (k < 2) throw InvalidArgument("tensor components start at degree 2");
}

template <class F>
std::vector<SparseRow<F>> padded_rows(const std::vector<Rel<F>>& rels, int k, int p) {
  guard(k);
  if (p < 0 || p > k - 2) throw InvalidArgument("padding position out of range");
  const size_t left = pow3(p), right = pow3(k - 2 - p);
  std::vector<SparseRow<F>> rows;
  rows.reserve(rels.size() * left * right);
  for (const auto& rel : rels)
    for (size_t u = 0; u < left; ++u)
      for (size_t v = 0; v < right; ++v) {
        SparseRow<F> row;
        for (size_t t = 0; t < 9; ++t)
          if (!is_zero(rel[t])) row.emplace_back(static_cast<uint32_t>((u * 9 + t) * right + v), rel[t]);
        if (!row.empty()) rows.push_back(std::move(row));
      }
  return rows;
}

template <class F>
std::vector<SparseRow<F>> component_rows(const std::vector<Rel<F>>& rels, int k) {
  std::vector<SparseRow<F>> rows;
  for (int p = 0; p <= k - 2; ++p) {
    auto r = padded_rows(rels, k, p);
    rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return rows;
}

std::vector<Rel<Rational>> at_zero(const std::vector<Tensor2>& rels) {
  std::vector<Rel<Rational>> out;
  for (const auto& r : rels) {
    Rel<Rational> z;
    for (size_t t = 0; t < 9; ++t) z[t] = r[t].at_zero();
    out.push_back(z);
  }
  return out;
}

std::vector<Rel<Rational>> at_value(const std::vector<Tensor2>& rels, const Rational& h) {
  std::vector<Rel<Rational>> out;
  for (const auto& r : rels) {
    Rel<Rational> z;
    for (size_t t = 0; t < 9; ++t) {
      Rational d = r[t].den().eval(h);
      if (sgn(d) == 0) throw DivisionByZero();
      z[t] = r[t].num().eval(h) / d;
    }
    out.push_back(z);
  }
  return out;
}

/// Same span over Q(h), reduced rows (sparser for rank work).
std::vector<Tensor2> echelonized(const std::vector<Tensor2>& rels) {
  ExactMatrix m(rels.size(), 9);
  for (size_t r = 0; r < rels.size(); ++r)
    for (size_t t = 0; t < 9; ++t) m(r, t) = rels[r][t];
  const size_t rk = m.rref().size();
  std::vector<Tensor2> out;
  for (size_t r = 0; r < rk; ++r) {
    Tensor2 t;
    for (size_t c = 0; c < 9; ++c) t[c] = m(r, c);
    out.push_back(t);
  }
  return out;
}

std::vector<Rel<Scalar>> as_rel(const std::vector<Tensor2>& rels) { return {rels.begin(), rels.end()}; }

template <class F>
size_t rank_of(const std::vector<SparseRow<F>>& rows) {
  return sparse_rank(rows);
}

template <class F>
size_t w_dim(const std::vector<Rel<F>>& rels) {
  auto a = padded_rows(rels, 3, 0), b = padded_rows(rels, 3, 1);
  const size_t ra = rank_of(a), rb = rank_of(b);
  a.insert(a.end(), b.begin(), b.end());
  return ra + rb - rank_of(a);
}

}  // namespace

size_t TensorSubspace::ambient() const { return pow3(degree); }

RankProfile TensorSubspace::ranks() const {
  EchelonBasis<Scalar> g;
  EchelonBasis<Rational> z;
  for (const auto& row : rows) {
    g.insert(row);
    SparseRow<Rational> zr;
    for (const auto& [c, v] : row) {
      Rational q = v.at_zero();
      if (sgn(q) != 0) zr.emplace_back(c, q);
    }
    z.insert(std::move(zr));
  }
  return {g.rank(), z.rank()};
}

TensorSubspace padded(const std::vector<Tensor2>& rels, int k, int position) {
  return {k, padded_rows(as_rel(rels), k, position)};
}

TensorSubspace component(const std::vector<Tensor2>& rels, int k) {
  guard(k);
  return {k, component_rows(as_rel(rels), k)};
}

SplittingResult splitting_check(const std::vector<Tensor2>& rels, int k) {
  guard(k);
  SplittingResult s;
  s.rank_zero = rank_of(component_rows(at_zero(rels), k));
  s.rank_generic = rank_of(component_rows(as_rel(echelonized(rels)), k));
  s.splitting = s.rank_zero == s.rank_generic;
  return s;
}

namespace {

// Cyclic pairing: relation r = (1,2), (2,3), (3,1) goes with x3, x1, x2.
constexpr std::array<uint32_t, 3> kThird{2, 0, 1};

using Vec27 = std::array<Scalar, 27>;

void add_left(Vec27& acc, const Tensor2& f, uint32_t l, const Scalar& c) {
  for (uint32_t t = 0; t < 9; ++t)
    if (!f[t].is_zero()) acc[t * 3 + l] += c * f[t];
}

void add_right(Vec27& acc, const Tensor2& f, uint32_t l, const Scalar& c) {
  for (uint32_t t = 0; t < 9; ++t)
    if (!f[t].is_zero()) acc[l * 9 + t] += c * f[t];
}

bool nonzero(const Vec27& v) {
  return std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
}

/// L - R for the cyclic pair.
Vec27 cyclic_difference(const std::vector<Tensor2>& f) {
  Vec27 d;
  for (size_t r = 0; r < 3; ++r) {
    add_left(d, f[r], kThird[r], Scalar(1));
    add_right(d, f[r], kThird[r], Scalar(-1));
  }
  return d;
}

bool cyclic_left_nonzero(const std::vector<Tensor2>& f) {
  Vec27 l;
  for (size_t r = 0; r < 3; ++r) add_left(l, f[r], kThird[r], Scalar(1));
  return nonzero(l);
}

/// Search L = cyclic + sum a h^e f_r x_l, R = cyclic + sum b h^e x_l f_r
/// with rational a, b and e = 1..E, solving L = R coefficientwise in h.
bool corrected_witness(const std::vector<Tensor2>& f_in, int E) {
  // Clear denominators so that every entry is a polynomial in h.
  UPoly den(Rational(1));
  for (const auto& r : f_in)
    for (const auto& s : r) {
      UPoly g = UPoly::gcd(den, s.den());
      UPoly q, rem;
      UPoly::divmod(s.den(), g, q, rem);
      den = den * q;
    }
  std::vector<Tensor2> f = f_in;
  for (auto& r : f)
    for (auto& s : r) s *= Scalar(den);
  const Vec27 base = cyclic_difference(f);
  // Unknown columns: (side, r, l, e).
  struct Unknown {
    bool left;
    size_t r;
    uint32_t l;
    int e;
  };
  std::vector<Unknown> unk;
  for (bool left : {true, false})
    for (size_t r = 0; r < 3; ++r)
      for (uint32_t l = 0; l < 3; ++l)
        for (int e = 1; e <= E; ++e) unk.push_back({left, r, l, e});
  std::vector<Vec27> cols;
  for (const auto& u : unk) {
    Vec27 v;
    const Scalar he = Scalar::h().pow(u.e);
    if (u.left) add_left(v, f[u.r], u.l, he);
    else add_right(v, f[u.r], u.l, -he);
    cols.push_back(v);
  }
  int maxdeg = 0;
  auto upd = [&](const Vec27& v) {
    for (const auto& s : v) maxdeg = std::max(maxdeg, s.num().degree());
  };
  upd(base);
  for (const auto& c : cols) upd(c);
  const size_t nrow = 27 * static_cast<size_t>(maxdeg + 1);
  RationalMatrix sys(nrow, unk.size() + 1);
  for (size_t c = 0; c < 27; ++c)
    for (int t = 0; t <= maxdeg; ++t) {
      const size_t row = c * static_cast<size_t>(maxdeg + 1) + static_cast<size_t>(t);
      for (size_t u = 0; u < unk.size(); ++u) sys(row, u) = cols[u][c].num().coeff(t);
      sys(row, unk.size()) = -base[c].num().coeff(t);
    }
  auto piv = sys.rref();
  if (!piv.empty() && piv.back() == unk.size()) return false;
  // Verify the particular solution independently.
  Vec27 left, right;
  for (size_t r = 0; r < 3; ++r) {
    add_left(left, f[r], kThird[r], Scalar(1));
    add_right(right, f[r], kThird[r], Scalar(1));
  }
  for (size_t i = 0; i < piv.size(); ++i) {
    const Unknown& u = unk[piv[i]];
    const Scalar c = Scalar(sys(i, unk.size())) * Scalar::h().pow(u.e);
    if (u.left) add_left(left, f[u.r], u.l, c);
    else add_right(right, f[u.r], u.l, c);
  }
  return left == right && nonzero(left);
}

std::string find_witness(const std::vector<Tensor2>& f) {
  if (f.size() != 3 || !cyclic_left_nonzero(f)) return "";
  if (!nonzero(cyclic_difference(f))) return "cyclic";
  // The stated rank-1 and rank-2 identities, with h in the corrections
  // replaced by s h.
  for (const Rational& s : {Rational(1), Rational(-1, 2), Rational(1, 2), Rational(-1)}) {
    const Scalar h = Scalar::h() * Scalar(s);
    const std::string tag = s == 1 ? "" : " (h -> " + s.get_str() + " h)";
    {
      // L - h f12 x1 = R + h x1 f12.
      Vec27 d = cyclic_difference(f);
      add_left(d, f[0], 0, -h);
      add_right(d, f[0], 0, -h);
      if (!nonzero(d)) return "rank1" + tag;
    }
    // L - h (c1 f12 x1 + f12 x2 + f31 x1) = R - h (c1 x1 f12 - x2 f12 - x1 f31).
    Vec27 a = cyclic_difference(f);
    add_left(a, f[0], 1, -h);
    add_left(a, f[2], 0, -h);
    add_right(a, f[0], 1, -h);
    add_right(a, f[2], 0, -h);
    Vec27 b;
    add_left(b, f[0], 0, -h);
    add_right(b, f[0], 0, h);
    // a + c1 b = 0 for a rational c1.
    std::optional<Scalar> c1;
    bool ok = true;
    for (size_t i = 0; i < 27 && ok; ++i) {
      if (b[i].is_zero()) {
        ok = a[i].is_zero();
      } else {
        Scalar c = -a[i] / b[i];
        if (!c.is_constant() || (c1 && !(*c1 == c))) ok = false;
        c1 = c;
      }
    }
    if (ok) return "rank2" + tag;
  }
  for (int E = 1; E <= 2; ++E)
    if (corrected_witness(f, E)) return "corrected";
  return "";
}

}  // namespace

WResult intersection_W(const std::vector<Tensor2>& rels) {
  WResult w;
  w.dim_zero = w_dim(at_zero(rels));
  w.dim_generic = w_dim(as_rel(echelonized(rels)));
  w.witness = find_witness(rels);
  w.witness_ok = !w.witness.empty();
  return w;
}

size_t intersection_W_at(const std::vector<Tensor2>& rels, const Rational& h) { return w_dim(at_value(rels, h)); }

namespace {

template <class F>
bool distributive(const std::vector<Rel<F>>& rels, int k, Distributivity which) {
  guard(k);
  if (k < 3) throw InvalidArgument("distributivity needs k >= 3");
  const size_t n = pow3(k);
  std::vector<Subspace<F>> I;
  for (int p = 0; p <= k - 2; ++p) I.emplace_back(n, padded_rows(rels, k, p));
  if (which == Distributivity::eq1) {
    Subspace<F> rest_all(n), rest3(n);
    for (size_t i = 1; i < I.size(); ++i) rest_all = rest_all + I[i];
    for (size_t i = 2; i < I.size(); ++i) rest3 = rest3 + I[i];
    Subspace<F> lhs = intersect(I[0], rest_all);
    Subspace<F> rhs = intersect(I[0], I[1]) + intersect(I[0], rest3);
    return lhs == rhs;
  }
  Subspace<F> meet_all = Subspace<F>::whole(n), meet3 = Subspace<F>::whole(n);
  for (size_t i = 1; i < I.size(); ++i) meet_all = intersect(meet_all, I[i]);
  for (size_t i = 2; i < I.size(); ++i) meet3 = intersect(meet3, I[i]);
  Subspace<F> lhs = I[0] + meet_all;
  Subspace<F> rhs = intersect(I[0] + I[1], I[0] + meet3);
  return lhs == rhs;
}

}  // namespace

bool distributivity(const std::vector<Tensor2>& rels, int k, Distributivity which, Point at) {
  if (at == Point::zero) return distributive(at_zero(rels), k, which);
  return distributive(as_rel(echelonized(rels)), k, which);
}

namespace {

/// Scales a row to be polynomial in h and nonvanishing at h = 0.
SparseRow<Scalar> regularize(SparseRow<Scalar> row) {
  UPoly l(Rational(1));
  for (const auto& [c, v] : row) {
    if (v.den().is_constant()) continue;
    UPoly q, r;
    UPoly::divmod(v.den(), UPoly::gcd(l, v.den()), q, r);
    l = l * q;
  }
  Scalar f(l);
  int val = 0;
  bool first = true;
  for (auto& [c, v] : row) {
    v *= f;
    val = first ? v.valuation() : std::min(val, v.valuation());
    first = false;
  }
  const Scalar shift = Scalar::h().pow(-val);
  for (auto& [c, v] : row) v *= shift;
  return row;
}

}  // namespace

TensorSubspace dual_subspace(const TensorSubspace& space) {
  if (space.degree != 2) throw InvalidArgument("dual_subspace needs a degree-2 subspace");
  ExactMatrix m(space.rows.size(), 9);
  for (size_t r = 0; r < space.rows.size(); ++r)
    for (const auto& [c, v] : space.rows[r]) m(r, c) = v;
  TensorSubspace out;
  out.degree = 2;
  if (space.rows.empty()) {
    for (uint32_t i = 0; i < 9; ++i) out.rows.push_back({{i, Scalar(1)}});
    return out;
  }
  for (const auto& v : m.kernel()) out.rows.push_back(regularize(to_sparse(v)));
  return out;
}

bool same_span(const TensorSubspace& a, const TensorSubspace& b) {
  if (a.degree != b.degree) return false;
  return Subspace<Scalar>(a.ambient(), a.rows) == Subspace<Scalar>(b.ambient(), b.rows);
}

std::vector<Tensor2> commutator_relations() {
  std::vector<Tensor2> out;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j) {
      Tensor2 t;
      t[3 * i + j] = Scalar(1);
      t[3 * j + i] = Scalar(-1);
      out.push_back(t);
    }
  return out;
}

std::vector<Tensor2> symmetric_relations() {
  std::vector<Tensor2> out;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i; j < 3; ++j) {
      Tensor2 t;
      t[3 * i + j] += Scalar(1);
      t[3 * j + i] += Scalar(1);
      out.push_back(t);
    }
  return out;
}

std::vector<Tensor2> to_tensors(const TensorSubspace& s) {
  if (s.degree != 2) throw InvalidArgument("to_tensors needs a degree-2 subspace");
  std::vector<Tensor2> out;
  for (const auto& row : s.rows) {
    Tensor2 t;
    for (const auto& [c, v] : row) t[c] = v;
    out.push_back(t);
  }
  return out;
}

}  // namespace qpb
