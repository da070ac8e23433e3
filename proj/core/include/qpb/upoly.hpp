#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace qpb {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Dense univariate polynomial over Q in the formal parameter h.
/// Coefficients are stored lowest degree first; the leading coefficient is
/// never zero (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(const Rational& c, int degree);
  static UPoly h() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  Rational at_zero() const { return c_.empty() ? Rational(0) : c_[0]; }
  /// Lowest degree with a nonzero coefficient; -1 for the zero polynomial.
  int order() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Monic gcd (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly b);

  UPoly monic() const;
  /// Divide by h^k; the low coefficients must be zero.
  UPoly shift_down(int k) const;
  Rational eval(const Rational& x) const;

  /// Total order used for canonical sorting; not an algebraic order.
  friend std::strong_ordering compare(const UPoly& a, const UPoly& b);

  /// Human form in the variable `var`, lowest degree first: "1 - h".
  std::string str(const std::string& var = "h") const;
  int term_count() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace qpb
