#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qpb/matrix.hpp"
#include "qpb/scalar.hpp"

namespace qpb {

using Exponent = std::vector<int>;

/// Orders monomials by total degree, then lexicographically, both
/// descending, so iteration prints "x1^2*x3" before "x2^3".
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse commutative polynomial over Q(h) in a fixed number of variables
/// (default x1, x2, x3).
class Poly {
 public:
  using Terms = std::map<Exponent, Scalar, MonomialOrder>;

  explicit Poly(int nvars = 3) : nvars_(nvars) {}
  static Poly constant(const Scalar& c, int nvars = 3);
  /// The variable x_{i+1} (0-based index).
  static Poly var(int i, int nvars = 3);
  static Poly monomial(const Scalar& c, Exponent e);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Scalar& c);

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int degree) const;
  /// True if every coefficient is a rational constant.
  bool is_rational() const;
  bool depends_on_h() const { return !is_rational(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  Poly pow(int e) const;

  /// Formal derivative in variable i (0-based).
  Poly partial(int i) const;

  /// Substitute x_i -> sum_j m(i, j) x_j, i.e. returns p(M x).
  Poly compose(const RationalMatrix& m) const;
  /// Substitute polynomials for the variables.
  Poly substitute(const std::vector<Poly>& images) const;
  Scalar eval(const std::vector<Scalar>& point) const;

  /// Coefficient vector of a homogeneous form in the basis
  /// homogeneous_basis(nvars, degree).
  std::vector<Scalar> coefficient_vector(int degree) const;
  static Poly from_coefficient_vector(const std::vector<Scalar>& v, int degree, int nvars = 3);

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void check_arity(const Poly& o) const;
  int nvars_;
  Terms terms_;
};

/// Monomials of the given degree in MonomialOrder.
std::vector<Exponent> homogeneous_basis(int nvars, int degree);

std::vector<std::string> default_names(int nvars);

}  // namespace qpb
