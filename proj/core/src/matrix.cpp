#include "qpb/matrix.hpp"

#include "qpb/echelon.hpp"
#include "qpb/errors.hpp"

namespace qpb {

RationalMatrix specialize_at_zero(const ExactMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).at_zero();
  return r;
}

ExactMatrix to_exact(const RationalMatrix& m) {
  ExactMatrix r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Scalar(m(i, j));
  return r;
}

RankProfile rank_profile(const ExactMatrix& m) {
  EchelonBasis<Scalar> generic;
  EchelonBasis<Rational> zero;
  for (size_t i = 0; i < m.rows(); ++i) {
    SparseRow<Scalar> g;
    SparseRow<Rational> z;
    for (size_t j = 0; j < m.cols(); ++j) {
      const Scalar& x = m(i, j);
      if (x.is_zero()) continue;
      g.emplace_back(static_cast<uint32_t>(j), x);
      Rational q = x.at_zero();
      if (sgn(q) != 0) z.emplace_back(static_cast<uint32_t>(j), q);
    }
    generic.insert(std::move(g));
    zero.insert(std::move(z));
  }
  return {generic.rank(), zero.rank()};
}

std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m, Point at) {
  if (at == Point::generic) return m.kernel();
  std::vector<std::vector<Scalar>> out;
  for (const auto& v : specialize_at_zero(m).kernel()) {
    std::vector<Scalar> s;
    s.reserve(v.size());
    for (const auto& q : v) s.emplace_back(q);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

/// Integer polynomial, lowest degree first, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly sub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

/// a / b, known to be exact in Z[h].
ZPoly exact_div(ZPoly a, const ZPoly& b) {
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error("internal: inexact division in fraction-free elimination");
  const size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  for (size_t k = q.size(); k-- > 0;) {
    mpz_class c;
    if (!mpz_divisible_p(a[k + db].get_mpz_t(), b[db].get_mpz_t()))
      throw Error("internal: inexact division in fraction-free elimination");
    mpz_divexact(c.get_mpz_t(), a[k + db].get_mpz_t(), b[db].get_mpz_t());
    if (c != 0)
      for (size_t j = 0; j <= db; ++j) mpz_submul(a[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[k] = std::move(c);
  }
  trim(a);
  if (!a.empty()) throw Error("internal: inexact division in fraction-free elimination");
  trim(q);
  return q;
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  UPoly::divmod(a, b, q, r);
  if (!r.is_zero()) throw Error("internal: inexact division in fraction-free elimination");
  return q;
}

/// Row of Scalars scaled to a common integer polynomial denominator.
std::vector<ZPoly> integral_row(const std::vector<const Scalar*>& row) {
  UPoly l(Rational(1));
  for (const Scalar* x : row) {
    const UPoly& d = x->den();
    if (!d.is_constant()) l = l * exact_quotient(d, UPoly::gcd(l, d));
  }
  std::vector<UPoly> num(row.size());
  mpz_class den = 1;
  for (size_t j = 0; j < row.size(); ++j) {
    if (row[j]->is_zero()) continue;
    num[j] = row[j]->num() * exact_quotient(l, row[j]->den());
    for (const auto& c : num[j].coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<ZPoly> out(row.size());
  for (size_t j = 0; j < row.size(); ++j)
    for (const auto& c : num[j].coeffs()) {
      mpz_class v = den / c.get_den();
      out[j].push_back(v * c.get_num());
    }
  return out;
}

UPoly to_upoly(const ZPoly& p) {
  std::vector<Rational> c(p.begin(), p.end());
  return UPoly(std::move(c));
}

}  // namespace

ExactMatrix solve(const ExactMatrix& A, const ExactMatrix& B) {
  if (A.rows() != A.cols() || B.rows() != A.rows()) throw ArityMismatch("solve: shape mismatch");
  const size_t n = A.rows(), m = B.cols(), w = n + m;
  std::vector<std::vector<ZPoly>> a(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<const Scalar*> row;
    for (size_t j = 0; j < n; ++j) row.push_back(&A(i, j));
    for (size_t j = 0; j < m; ++j) row.push_back(&B(i, j));
    a[i] = integral_row(row);
  }
  ZPoly prev{1};
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][k].empty()) ++p;
    if (p == n) throw SingularMatrix("solve: matrix is singular");
    std::swap(a[p], a[k]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        ZPoly v = mul(a[k][k], a[i][j]);
        if (!a[i][k].empty() && !a[k][j].empty()) v = sub(std::move(v), mul(a[i][k], a[k][j]));
        a[i][j] = exact_div(std::move(v), prev);
      }
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  ExactMatrix x(n, m);
  const UPoly det = to_upoly(prev);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      if (!a[i][n + j].empty()) x(i, j) = Scalar(to_upoly(a[i][n + j]), det);
  return x;
}

}  // namespace qpb
