#include "qpb/jordan.hpp"

#include <algorithm>

#include "qpb/errors.hpp"

namespace qpb {

UPoly charpoly(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ArityMismatch("charpoly of non-square matrix");
  // Faddeev-LeVerrier: exact over Q and short for small sizes.
  const size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk = RationalMatrix::identity(n);
  RationalMatrix id = RationalMatrix::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    RationalMatrix am = m * mk;
    Rational ck = -am.trace() / Rational(static_cast<long>(k));
    c[n - k] = ck;
    mk = am + ck * id;
  }
  return UPoly(c);
}

std::string str_descending(const UPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  out = Rational(sqrt(n), sqrt(d));
  out.canonicalize();
  return true;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p_in) {
  std::vector<Rational> roots;
  UPoly p = p_in;
  if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
  while (p.degree() > 0 && sgn(p.at_zero()) == 0) {
    roots.push_back(0);
    p = p.shift_down(1);
  }
  while (p.degree() > 2) {
    // Integer coefficients for the rational root theorem.
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
    mpz_class a0 = Rational(p.at_zero() * l).get_num();
    mpz_class an = Rational(p.leading() * l).get_num();
    bool found = false;
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int s : {1, -1}) {
          Rational r(num * s, den);
          r.canonicalize();
          if (sgn(p.eval(r)) != 0) continue;
          roots.push_back(r);
          UPoly q, rem;
          UPoly::divmod(p, UPoly(std::vector<Rational>{-r, 1}), q, rem);
          p = q;
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  if (p.degree() == 1) {
    roots.push_back(-p.coeff(0) / p.coeff(1));
  } else if (p.degree() == 2) {
    Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rational disc = b * b - 4 * a * c, s;
    if (rational_sqrt(disc, s)) {
      roots.push_back((-b - s) / (2 * a));
      roots.push_back((-b + s) / (2 * a));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool spectrum_less(const Rational& a, const Rational& b) {
  int c = cmp(abs(a), abs(b));
  if (c != 0) return c < 0;
  return a < b;
}

namespace {

RationalMatrix mat_pow(const RationalMatrix& m, int k) {
  RationalMatrix r = RationalMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

std::vector<Rational> row_times(const std::vector<Rational>& v, const RationalMatrix& m) {
  std::vector<Rational> out(m.cols(), Rational(0));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  return out;
}

bool independent(const std::vector<std::vector<Rational>>& rows, size_t n) {
  RationalMatrix m(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m.rank() == rows.size();
}

}  // namespace

JordanResult jordan_3x3(const RationalMatrix& m) {
  const size_t n = m.rows();
  UPoly cp = charpoly(m);
  auto roots = rational_roots(cp);
  if (roots.size() != n) throw IrrationalSpectrum(str_descending(cp));

  std::vector<Rational> distinct = roots;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::sort(distinct.begin(), distinct.end(), spectrum_less);

  std::vector<std::vector<Rational>> rows;
  std::vector<JordanBlock> blocks;
  for (const auto& lam : distinct) {
    const int mult = static_cast<int>(std::count(roots.begin(), roots.end(), lam));
    RationalMatrix nm = m - lam * RationalMatrix::identity(n);
    // Block sizes from the rank sequence of (M - lambda)^k.
    std::vector<size_t> rk{n};
    for (int k = 1; k <= mult; ++k) rk.push_back(mat_pow(nm, k).rank());
    std::vector<int> sizes;
    for (int k = mult; k >= 1; --k) {
      const size_t at_least_k = rk[static_cast<size_t>(k) - 1] - rk[static_cast<size_t>(k)];
      const size_t at_least_k1 = static_cast<size_t>(k) < rk.size() - 1 ? rk[static_cast<size_t>(k)] - rk[static_cast<size_t>(k) + 1] : 0;
      for (size_t c = 0; c < at_least_k - at_least_k1; ++c) sizes.push_back(k);
    }
    for (int s : sizes) {
      // Left vectors: kernel of ((M - lambda)^s)^T.
      auto cands = mat_pow(nm, s).transpose().kernel();
      const size_t base = cands.size();
      for (size_t i = 0; i < base; ++i)
        for (size_t j = i + 1; j < base; ++j) {
          std::vector<Rational> v = cands[i];
          for (size_t t = 0; t < n; ++t) v[t] += cands[j][t];
          cands.push_back(v);
        }
      bool placed = false;
      for (const auto& v : cands) {
        std::vector<std::vector<Rational>> chain{v};
        for (int t = 1; t < s; ++t) chain.push_back(row_times(chain.back(), nm));
        auto trial = rows;
        trial.insert(trial.end(), chain.begin(), chain.end());
        if (!independent(trial, n)) continue;
        rows = std::move(trial);
        blocks.push_back({lam, s});
        placed = true;
        break;
      }
      if (!placed) throw SingularMatrix("jordan chain construction failed");
    }
  }

  JordanResult res;
  res.A = RationalMatrix(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) res.A(i, j) = rows[i][j];
  res.J = RationalMatrix(n, n);
  size_t pos = 0;
  for (const auto& b : blocks) {
    for (int t = 0; t < b.size; ++t) {
      res.J(pos + static_cast<size_t>(t), pos + static_cast<size_t>(t)) = b.eigenvalue;
      if (t + 1 < b.size) res.J(pos + static_cast<size_t>(t), pos + static_cast<size_t>(t) + 1) = 1;
    }
    pos += static_cast<size_t>(b.size);
  }
  res.blocks = std::move(blocks);
  return res;
}

}  // namespace qpb
