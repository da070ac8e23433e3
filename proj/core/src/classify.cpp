#include "qpb/classify.hpp"

#include <algorithm>

#include "qpb/errors.hpp"
#include "qpb/jordan.hpp"

namespace qpb {

namespace {

Rational param(const CaseParams& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw InvalidArgument("missing parameter " + name);
  return it->second;
}

RationalMatrix diag(const Rational& a, const Rational& b, const Rational& c) {
  RationalMatrix m(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

RationalMatrix from_vec(const std::vector<Rational>& v) {
  RationalMatrix m(3, 3);
  for (size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = v[i];
  return m;
}

Poly x(int i) { return Poly::var(i); }

}  // namespace

RationalMatrix canonical_p(CaseId id, const CaseParams& params) {
  RationalMatrix t(3, 3);
  switch (id) {
    case CaseId::a:
      break;
    case CaseId::b:
      t(2, 0) = 1;
      break;
    case CaseId::ca: {
      Rational l = param(params, "lambda");
      t = diag(0, -l, l);
      break;
    }
    case CaseId::cb:
      t(1, 0) = 1;
      t(2, 1) = 1;
      break;
    case CaseId::da: {
      Rational l1 = param(params, "lambda1"), l2 = param(params, "lambda2");
      t = diag(l1, l2, -l1 - l2);
      break;
    }
    case CaseId::db:
    case CaseId::dc: {
      Rational l = param(params, "lambda");
      t = diag(l, l, -2 * l);
      if (id == CaseId::dc) t(1, 0) = l;
      break;
    }
  }
  return t;
}

std::optional<RationalMatrix> conjugator(const RationalMatrix& P, const RationalMatrix& T) {
  if (P == T) return RationalMatrix::identity(3);
  // A P - T A = 0, unknown a_ij at index 3 i + j.
  RationalMatrix sys(9, 9);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      const size_t row = 3 * i + j;
      for (size_t k = 0; k < 3; ++k) {
        sys(row, 3 * i + k) += P(k, j);
        sys(row, 3 * k + j) -= T(i, k);
      }
    }
  auto basis = sys.kernel();
  if (basis.empty()) return std::nullopt;
  auto combo = [&](const std::vector<long>& w) {
    std::vector<Rational> v(9, Rational(0));
    for (size_t b = 0; b < basis.size(); ++b)
      for (size_t t = 0; t < 9; ++t) v[t] += basis[b][t] * w[b];
    return from_vec(v);
  };
  std::vector<std::vector<long>> tries;
  tries.emplace_back(basis.size(), 1);
  for (size_t b = 0; b < basis.size(); ++b) {
    std::vector<long> w(basis.size(), 0);
    w[b] = 1;
    tries.push_back(w);
  }
  for (long s = 1; s <= 60; ++s) {
    std::vector<long> w(basis.size());
    for (size_t b = 0; b < basis.size(); ++b) w[b] = (static_cast<long>(b) * 7 + s * 13) % 11 - 5;
    tries.push_back(w);
  }
  for (const auto& w : tries) {
    RationalMatrix a = combo(w);
    if (sgn(a.determinant()) != 0) return a;
  }
  return std::nullopt;
}

Poly recover_cubic(const QuadraticBracket& b, CaseId id, const CaseParams& params) {
  const RationalMatrix T = canonical_p(id, params);
  if (!(p_matrix(b) == T)) throw NotCanonical("bracket is not in canonical coordinates for case " + to_string(id));
  const QuadraticBracket corr = case_correction(id, params);
  // Targets: y12 - c12 = f_3, y23 - c23 = f_1, y31 - c31 = f_2.
  const std::array<Poly, 3> target{b.y(1, 2) - corr.y(1, 2), b.y(2, 0) - corr.y(2, 0), b.y(0, 1) - corr.y(0, 1)};
  const auto cubics = homogeneous_basis(3, 3);
  const auto quads = homogeneous_basis(3, 2);
  RationalMatrix sys(18, 11);
  for (size_t u = 0; u < cubics.size(); ++u) {
    Poly m = Poly::monomial(Scalar(1), cubics[u]);
    for (int i = 0; i < 3; ++i) {
      Poly d = m.partial(i);
      for (size_t q = 0; q < quads.size(); ++q) sys(static_cast<size_t>(i) * 6 + q, u) = d.coeff(quads[q]).is_zero() ? Rational(0) : d.coeff(quads[q]).constant();
    }
  }
  for (int i = 0; i < 3; ++i)
    for (size_t q = 0; q < quads.size(); ++q) {
      Scalar c = target[static_cast<size_t>(i)].coeff(quads[q]);
      sys(static_cast<size_t>(i) * 6 + q, 10) = c.is_zero() ? Rational(0) : c.constant();
    }
  auto piv = sys.rref();
  if (!piv.empty() && piv.back() == 10) throw Inconsistent("no cubic form reproduces the bracket in case " + to_string(id));
  Poly f;
  for (size_t r = 0; r < piv.size(); ++r) f.add_term(cubics[piv[r]], Scalar(sys(r, 10)));
  // Admissible family: v . grad f = 0 for the canonical v.
  Poly flow;
  for (size_t i = 0; i < 3; ++i) {
    Poly vi;
    for (size_t j = 0; j < 3; ++j)
      if (sgn(T(i, j)) != 0) vi += x(static_cast<int>(j)) * Scalar(T(i, j));
    flow += vi * f.partial(static_cast<int>(i));
  }
  if (!flow.is_zero()) throw OutsideFamily("f = " + f.str() + " violates the Jacobi constraint of case " + to_string(id));
  return f;
}

namespace {

Rational coeff_of(const Poly& p, Exponent e) {
  Scalar c = p.coeff(e);
  return c.is_zero() ? Rational(0) : c.constant();
}

void fill_constants(ClassificationReport& r) {
  const Poly& f = *r.f;
  switch (r.label) {
    case CaseId::ca:
      r.constants["c1"] = coeff_of(f, {1, 1, 1}) / 2;
      r.constants["c2"] = coeff_of(f, {3, 0, 0});
      break;
    case CaseId::cb:
      r.constants["c1"] = coeff_of(f, {1, 2, 0});
      r.constants["c2"] = coeff_of(f, {3, 0, 0});
      break;
    case CaseId::da:
      r.constants["c"] = coeff_of(f, {1, 1, 1}) / 2;
      break;
    case CaseId::dc:
      r.constants["c"] = coeff_of(f, {2, 0, 1});
      break;
    case CaseId::db: {
      Poly g;
      for (const auto& [e, c] : f.terms()) g.add_term({e[0], e[1], e[2] - 1}, c);
      r.g = g;
      r.constants["a"] = coeff_of(g, {2, 0, 0});
      r.constants["b"] = coeff_of(g, {1, 1, 0});
      r.constants["c"] = coeff_of(g, {0, 2, 0});
      break;
    }
    default:
      break;
  }
}

/// db: remove the x2^2 x3 term of f by a change in x1, x2 when rational.
void reduce_db(ClassificationReport& r) {
  const Poly& f = *r.f;
  const Rational al = coeff_of(f, {2, 0, 1}), be = coeff_of(f, {1, 1, 1}), ga = coeff_of(f, {0, 2, 1});
  if (sgn(ga) == 0) return;
  std::vector<RationalMatrix> cands;
  auto shear = [](const Rational& t) {
    RationalMatrix m = RationalMatrix::identity(3);
    m(0, 1) = t;
    return m;
  };
  if (sgn(al) != 0) {
    for (const auto& t : rational_roots(UPoly(std::vector<Rational>{ga, be, al}))) {
      cands.push_back(shear(t));
      cands.push_back(shear(-t));
    }
  } else if (sgn(be) != 0) {
    cands.push_back(shear(-ga / be));
    cands.push_back(shear(ga / be));
  }
  RationalMatrix swap(3, 3);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  swap(2, 2) = 1;
  cands.push_back(swap);
  for (const auto& B : cands) {
    QuadraticBracket nb = transform(*r.canonical, B);
    Poly nf = recover_cubic(nb, CaseId::db, r.params);
    if (sgn(coeff_of(nf, {0, 2, 1})) != 0) continue;
    r.A = B * *r.A;
    r.canonical = nb;
    r.f = nf;
    return;
  }
}

}  // namespace

ClassificationReport classify(const QuadraticBracket& b) {
  const JacobiResidual jr = jacobi_residual(b);
  if (!jr.poisson()) throw NotPoisson("Jacobi identity fails: residual " + jr.linear_form.str());
  ClassificationReport r;
  const RationalMatrix P = p_matrix(b);
  r.rank = P.rank();
  const UPoly cp = charpoly(P);
  r.charpoly = str_descending(cp);
  auto roots = rational_roots(cp);
  r.rational_spectrum = roots.size() == 3;
  if (r.rational_spectrum) {
    std::sort(roots.begin(), roots.end(), spectrum_less);
    r.eigenvalues = roots;
  }
  switch (r.rank) {
    case 0:
      r.label = CaseId::a;
      break;
    case 1:
      r.label = CaseId::b;
      break;
    case 2:
      r.label = sgn(cp.coeff(1)) == 0 ? CaseId::cb : CaseId::ca;
      if (r.label == CaseId::ca && r.rational_spectrum) r.params["lambda"] = abs(roots.back());
      break;
    default: {
      if (!r.rational_spectrum) {
        r.label = CaseId::da;
        break;
      }
      const bool distinct = roots[0] != roots[1] && roots[1] != roots[2] && roots[0] != roots[2];
      if (distinct) {
        r.label = CaseId::da;
        r.params["lambda1"] = roots[0];
        r.params["lambda2"] = roots[1];
        break;
      }
      // Repeated root lambda, simple root -2 lambda.
      Rational lam = roots[0] == roots[1] ? roots[0] : roots[2];
      if (roots[1] == roots[2]) lam = roots[1];
      r.params["lambda"] = lam;
      const size_t rk = (P - lam * RationalMatrix::identity(3)).rank();
      r.label = rk == 1 ? CaseId::db : CaseId::dc;
      break;
    }
  }
  if (!r.rational_spectrum) return r;
  const RationalMatrix T = canonical_p(r.label, r.params);
  auto A = conjugator(P, T);
  if (!A) throw SingularMatrix("no rational conjugator to the canonical form");
  r.A = *A;
  r.canonical = transform(b, *A);
  r.f = recover_cubic(*r.canonical, r.label, r.params);
  if (r.label == CaseId::db) reduce_db(r);
  fill_constants(r);
  return r;
}

}  // namespace qpb
