#include "qpb/bracket.hpp"

#include "qpb/errors.hpp"

namespace qpb {

namespace {

Poly x(int i) { return Poly::var(i); }

Poly quad(int k, int l) { return x(k) * x(l); }

void add_poly(Constants& c, int i, int j, const Poly& y) {
  if (!y.is_zero() && !y.is_homogeneous(2)) throw InvalidArgument("bracket component is not a quadratic form");
  for (const auto& [e, coef] : y.terms()) {
    if (!coef.is_constant()) throw InvalidArgument("bracket component depends on h");
    const Rational q = coef.constant();
    std::vector<int> idx;
    for (int k = 0; k < 3; ++k)
      for (int m = 0; m < e[static_cast<size_t>(k)]; ++m) idx.push_back(k);
    const auto k = static_cast<size_t>(idx[0]), l = static_cast<size_t>(idx[1]);
    const auto si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
    if (k == l) {
      c[si][sj][k][k] += q;
      c[sj][si][k][k] -= q;
    } else {
      c[si][sj][k][l] += q / 2;
      c[si][sj][l][k] += q / 2;
      c[sj][si][k][l] -= q / 2;
      c[sj][si][l][k] -= q / 2;
    }
  }
}

}  // namespace

QuadraticBracket::QuadraticBracket() {
  for (auto& a : c_)
    for (auto& b : a)
      for (auto& cc : b)
        for (auto& d : cc) d = 0;
}

const Rational& QuadraticBracket::c(int i, int j, int k, int l) const {
  return c_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(l)];
}

QuadraticBracket QuadraticBracket::from_structure_constants(const Constants& in) {
  QuadraticBracket b;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      for (size_t k = 0; k < 3; ++k)
        for (size_t l = 0; l < 3; ++l) b.c_[i][j][k][l] = (in[i][j][k][l] + in[i][j][l][k]) / 2;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      for (size_t k = 0; k < 3; ++k)
        for (size_t l = 0; l < 3; ++l)
          if (b.c_[i][j][k][l] != -b.c_[j][i][k][l])
            throw AntisymmetryViolation("c_" + std::to_string(i + 1) + std::to_string(j + 1) + "^" +
                                        std::to_string(k + 1) + std::to_string(l + 1) + " is not antisymmetric in (i, j)");
  return b;
}

QuadraticBracket QuadraticBracket::from_polys(const Poly& y12, const Poly& y23, const Poly& y31) {
  QuadraticBracket b;
  add_poly(b.c_, 0, 1, y12);
  add_poly(b.c_, 1, 2, y23);
  add_poly(b.c_, 2, 0, y31);
  return b;
}

void QuadraticBracket::require_even(const char* what) const {
  if (parity_ != Parity::even) throw InvalidArgument(std::string(what) + " needs an even bracket");
}

Poly QuadraticBracket::y(int i, int j) const {
  require_even("y");
  Poly p;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      const Rational& q = c(i, j, k, l);
      if (sgn(q) != 0) p += quad(k, l) * Scalar(q);
    }
  return p;
}

bool QuadraticBracket::is_zero() const {
  for (const auto& a : c_)
    for (const auto& b : a)
      for (const auto& cc : b)
        for (const auto& d : cc)
          if (sgn(d) != 0) return false;
  return true;
}

QuadraticBracket dualize(const QuadraticBracket& b) {
  QuadraticBracket d;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      for (size_t k = 0; k < 3; ++k)
        for (size_t l = 0; l < 3; ++l) d.c_[k][l][i][j] = b.c_[i][j][k][l];
  d.parity_ = b.parity_ == Parity::even ? Parity::odd : Parity::even;
  return d;
}

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::a: return "a";
    case CaseId::b: return "b";
    case CaseId::ca: return "ca";
    case CaseId::cb: return "cb";
    case CaseId::da: return "da";
    case CaseId::db: return "db";
    case CaseId::dc: return "dc";
  }
  return "?";
}

CaseId case_from_string(const std::string& s) {
  for (CaseId id : {CaseId::a, CaseId::b, CaseId::ca, CaseId::cb, CaseId::da, CaseId::db, CaseId::dc})
    if (to_string(id) == s) return id;
  throw InvalidArgument("unknown case '" + s + "'");
}

namespace {

Rational param(const CaseParams& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw InvalidArgument("missing parameter " + name);
  return it->second;
}

}  // namespace

QuadraticBracket case_correction(CaseId id, const CaseParams& params) {
  Poly y12, y23, y31;
  switch (id) {
    case CaseId::a:
      break;
    case CaseId::b:
      y23 -= quad(0, 1);
      break;
    case CaseId::ca:
      y23 -= quad(1, 2) * Scalar(param(params, "lambda"));
      break;
    case CaseId::cb:
      y23 += quad(0, 2) - quad(1, 1) * Scalar::frac(1, 2);
      break;
    case CaseId::da:
      y23 += quad(1, 2) * Scalar(param(params, "lambda2"));
      y31 -= quad(0, 2) * Scalar(param(params, "lambda1"));
      break;
    case CaseId::db:
    case CaseId::dc: {
      const Scalar lam(param(params, "lambda"));
      y23 += quad(1, 2) * lam;
      y31 -= quad(0, 2) * lam;
      if (id == CaseId::dc) y12 -= quad(0, 0) * (lam * Scalar::frac(1, 2));
      break;
    }
  }
  return QuadraticBracket::from_polys(y12, y23, y31);
}

QuadraticBracket from_case(CaseId id, const Poly& f, const CaseParams& params) {
  if (!f.is_zero() && !f.is_homogeneous(3)) throw InvalidArgument("f must be a homogeneous cubic");
  if (!f.is_rational()) throw InvalidArgument("f must not depend on h");
  QuadraticBracket corr = case_correction(id, params);
  return QuadraticBracket::from_polys(f.partial(2) + corr.y(0, 1), f.partial(0) + corr.y(1, 2),
                                      f.partial(1) + corr.y(2, 0));
}

std::array<Poly, 3> v_vector(const QuadraticBracket& b) {
  std::array<Poly, 3> v;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) v[static_cast<size_t>(i)] += b.y(i, k).partial(k);
  return v;
}

PData p_data(const QuadraticBracket& b) {
  PData d;
  d.v = v_vector(b);
  d.P = RationalMatrix(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0};
      e[j] = 1;
      d.P(i, j) = d.v[i].coeff(e).constant();
    }
  if (sgn(d.P.trace()) != 0) throw NotPoisson("trace of P is nonzero");
  return d;
}

RationalMatrix p_matrix(const QuadraticBracket& b) { return p_data(b).P; }

Poly extend(const QuadraticBracket& b, const Poly& f, const Poly& g) {
  Poly r;
  for (int i = 0; i < 3; ++i) {
    Poly fi = f.partial(i);
    if (fi.is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Poly gj = g.partial(j);
      if (gj.is_zero()) continue;
      r += fi * gj * b.y(i, j);
    }
  }
  return r;
}

JacobiResidual jacobi_residual(const QuadraticBracket& b) {
  JacobiResidual res;
  auto v = v_vector(b);
  res.linear_form = b.y(0, 1) * v[2] + b.y(1, 2) * v[0] + b.y(2, 0) * v[1];
  res.triple = extend(b, b.y(0, 1), x(2)) + extend(b, b.y(1, 2), x(0)) + extend(b, b.y(2, 0), x(1));
  return res;
}

QuadraticBracket transform(const QuadraticBracket& b, const RationalMatrix& A) {
  const RationalMatrix inv = A.inverse_matrix();
  std::array<std::array<Poly, 3>, 3> yx;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) yx[static_cast<size_t>(k)][static_cast<size_t>(l)] = b.y(k, l).compose(inv);
  auto comp = [&](size_t i, size_t j) {
    Poly r;
    for (size_t k = 0; k < 3; ++k)
      for (size_t l = 0; l < 3; ++l) {
        Rational w = A(i, k) * A(j, l);
        if (sgn(w) != 0) r += yx[k][l] * Scalar(w);
      }
    return r;
  };
  return QuadraticBracket::from_polys(comp(0, 1), comp(1, 2), comp(2, 0));
}

}  // namespace qpb
