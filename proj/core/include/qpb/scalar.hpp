#pragma once

#include <compare>
#include <string>

#include "qpb/upoly.hpp"

namespace qpb {

/// Element of the field Q(h): a reduced fraction of polynomials in h.
///
/// Canonical form: gcd(num, den) = 1; if den(0) != 0 the denominator is
/// scaled so that den(0) = 1, otherwise it is made monic. Equal values have
/// identical representations, so == is structural.
class Scalar {
 public:
  Scalar() : den_(Rational(1)) {}
  Scalar(const Rational& q) : num_(q), den_(Rational(1)) {}  // NOLINT
  Scalar(long v) : Scalar(Rational(v)) {}                    // NOLINT
  Scalar(int v) : Scalar(Rational(v)) {}                     // NOLINT
  Scalar(const UPoly& p) : num_(p), den_(Rational(1)) {}     // NOLINT
  Scalar(UPoly num, UPoly den);

  static Scalar h() { return Scalar(UPoly::h()); }
  static Scalar frac(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return Scalar(q);
  }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return is_constant() && num_.at_zero() == 1; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant; throws InvalidArgument otherwise.
  Rational constant() const;
  bool regular_at_zero() const { return den_.at_zero() != 0; }
  /// Specialization h = 0; throws PoleAtZero when irregular.
  Rational at_zero() const;
  /// Exponent of h in the h-adic valuation (num order - den order).
  int valuation() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Total order for use as a map key; not an ordered-field order.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical text: "3/2", "1 - h", "(1 - h)/(1 + h)".
  std::string str() const;
  /// True if str() is a single term that needs no parentheses in a product.
  bool is_atomic() const;

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Scalar inverse(const Scalar& s) { return s.inverse(); }
inline Rational inverse(const Rational& q) { return 1 / q; }

}  // namespace qpb
