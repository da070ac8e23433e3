#include "qpb/orbit.hpp"

#include "qpb/echelon.hpp"
#include "qpb/errors.hpp"

namespace qpb {

namespace {

Poly x(int i) { return Poly::var(i); }

Rational as_rational(const Scalar& s) { return s.is_zero() ? Rational(0) : s.constant(); }

/// Colength of the ideal generated by `gens` (homogeneous quadrics) in
/// degree `d`.
int colength(const std::vector<Poly>& gens, int d) {
  const auto mons = homogeneous_basis(3, d);
  std::map<Exponent, uint32_t> index;
  for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = static_cast<uint32_t>(i);
  EchelonBasis<Rational> eb;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& m : homogeneous_basis(3, d - g.degree())) {
      Poly p = g * Poly::monomial(Scalar(1), m);
      SparseRow<Rational> row;
      for (const auto& [e, c] : p.terms()) row.emplace_back(index.at(e), as_rational(c));
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      eb.insert(std::move(row));
    }
  }
  return static_cast<int>(mons.size() - eb.rank());
}

/// Vectors spanning the partials of f as coefficient rows over quadrics.
RationalMatrix partials_matrix(const Poly& f) {
  RationalMatrix m(3, 6);
  const auto quads = homogeneous_basis(3, 2);
  for (size_t i = 0; i < 3; ++i) {
    Poly d = f.partial(static_cast<int>(i));
    for (size_t q = 0; q < 6; ++q) m(i, q) = as_rational(d.coeff(quads[q]));
  }
  return m;
}

}  // namespace

Poly orbit_representative(int id, const std::optional<Rational>& c) {
  const Poly X = x(0), Y = x(1), Z = x(2);
  switch (id) {
    case 1: return Poly();
    case 2: return X.pow(3);
    case 3: return X * X * Y;
    case 4: return X * Y * (X + Y);
    case 5: return Z * X * X + X * Y * Y;
    case 6: return Z * X * X + Y.pow(3);
    case 7: return Scalar(2) * Z * X * Y;
    case 8: return Scalar(2) * Z * X * Y + X.pow(3);
    case 9: return Scalar(2) * Z * X * Y + X.pow(3) + Y.pow(3);
    case 10: {
      if (!c) throw InvalidArgument("orbit 10 needs the parameter c");
      if (sgn(*c) == 0 || *c == 1) throw InvalidArgument("orbit 10 requires c != 0 and c != 1");
      return Z * Z * X + Y * (X + Y) * (X + Scalar(*c) * Y);
    }
    default:
      throw InvalidArgument("orbit id must be in 1..10");
  }
}

CubicOrbitReport orbit_fingerprint(const Poly& f) {
  if (!f.is_zero() && !f.is_homogeneous(3)) throw InvalidArgument("orbit_fingerprint needs a homogeneous cubic");
  if (!f.is_rational()) throw InvalidArgument("orbit_fingerprint needs an h-free cubic");
  CubicOrbitReport r;
  const RationalMatrix pm = partials_matrix(f);
  r.essential_variables = static_cast<int>(pm.rank());
  switch (r.essential_variables) {
    case 0:
      r.candidates = {1};
      break;
    case 1:
      r.candidates = {2};
      break;
    case 2: {
      // Directions d with sum d_i f_i = 0: move one to the x3 axis.
      auto ker = pm.transpose().kernel();
      RationalMatrix B = RationalMatrix::identity(3);
      const auto& d = ker.at(0);
      size_t col = 0;
      for (size_t i = 0; i < 3; ++i)
        if (sgn(d[i]) != 0) col = i;
      // Columns of B: the standard vectors except `col`, then d.
      RationalMatrix M(3, 3);
      size_t k = 0;
      for (size_t i = 0; i < 3; ++i) {
        if (i == col) continue;
        M(i, k++) = 1;
      }
      for (size_t i = 0; i < 3; ++i) M(i, 2) = d[i];
      Poly g = f.compose(M);
      const Rational a = as_rational(g.coeff({3, 0, 0})), b = as_rational(g.coeff({2, 1, 0})),
                     cc = as_rational(g.coeff({1, 2, 0})), dd = as_rational(g.coeff({0, 3, 0}));
      const Rational disc = b * b * cc * cc - 4 * a * cc * cc * cc - 4 * b * b * b * dd - 27 * a * a * dd * dd + 18 * a * b * cc * dd;
      r.binary_discriminant = disc;
      r.candidates = {sgn(disc) != 0 ? 4 : 3};
      break;
    }
    default: {
      std::vector<Poly> jac{f.partial(0), f.partial(1), f.partial(2)};
      const int tau = colength(jac, 8);
      std::vector<Poly> ext = jac;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int l = k + 1; l < 3; ++l) {
              Poly m = jac[static_cast<size_t>(i)].partial(k) * jac[static_cast<size_t>(j)].partial(l) -
                       jac[static_cast<size_t>(i)].partial(l) * jac[static_cast<size_t>(j)].partial(k);
              if (!m.is_zero()) ext.push_back(m);
            }
      const int tau2 = colength(ext, 8);
      r.tjurina = tau;
      r.tjurina_hessian = tau2;
      if (tau == 0) r.candidates = {10};
      else if (tau == 1) r.candidates = {9};
      else if (tau == 2) r.candidates = {tau2 == 0 ? 8 : 6};
      else if (tau == 3) r.candidates = {tau2 == 0 ? 7 : 5};
      else r.candidates = {5, 6, 7, 8, 9, 10};
      break;
    }
  }
  return r;
}

bool orbit_verify(const Poly& f, const RationalMatrix& A, int orbit_id, const std::optional<Rational>& c) {
  const Poly rep = orbit_representative(orbit_id, c);
  if (sgn(A.determinant()) == 0) throw SingularMatrix("witness matrix is singular");
  return f.compose(A) == rep;
}

}  // namespace qpb
