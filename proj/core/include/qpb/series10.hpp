#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpb/scalar.hpp"

namespace qpb {

/// Laurent polynomial in p and v over Q, keyed by (p exponent, v exponent).
class PVPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Rational>;
  PVPoly() = default;
  static PVPoly monomial(const Rational& c, int p, int v);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool depends_on_p() const;
  void add(int p, int v, const Rational& c);

  PVPoly& operator+=(const PVPoly& o);
  PVPoly& operator-=(const PVPoly& o);
  PVPoly& operator*=(const Rational& s);
  friend PVPoly operator+(PVPoly a, const PVPoly& b) { return a += b; }
  friend PVPoly operator-(PVPoly a, const PVPoly& b) { return a -= b; }
  friend PVPoly operator*(PVPoly a, const Rational& s) { return a *= s; }
  friend PVPoly operator*(const PVPoly& a, const PVPoly& b);
  friend bool operator==(const PVPoly&, const PVPoly&) = default;

  PVPoly dp() const;
  /// Antiderivative in p with zero constant; throws on a p^-1 term.
  PVPoly integrate_p() const;
  std::string str() const;

 private:
  Terms t_;
};

/// Truncated series sum h^i q^j a_ij(p, v), i + j <= order, normal ordered
/// q-left with [p, q] = h.
class SeriesElement {
 public:
  using Key = std::pair<int, int>;  ///< (h power, q power)
  explicit SeriesElement(int order = 0) : order_(order) {}
  static SeriesElement constant(int order, const PVPoly& c);
  static SeriesElement monomial(int order, int i, int j, const PVPoly& c);

  int order() const { return order_; }
  const std::map<Key, PVPoly>& terms() const { return c_; }
  PVPoly coeff(int i, int j) const;
  void set(int i, int j, const PVPoly& c);
  bool is_zero() const { return c_.empty(); }
  /// Lowest total degree i + j present; -1 if zero.
  int min_degree() const;
  int min_h_degree() const;
  /// Terms of total degree d only.
  SeriesElement graded(int d) const;

  SeriesElement& operator+=(const SeriesElement& o);
  SeriesElement& operator-=(const SeriesElement& o);
  friend SeriesElement operator+(SeriesElement a, const SeriesElement& b) { return a += b; }
  friend SeriesElement operator-(SeriesElement a, const SeriesElement& b) { return a -= b; }
  friend SeriesElement operator*(const SeriesElement& a, const SeriesElement& b);
  /// Multiply by h^k.
  SeriesElement shift_h(int k) const;
  SeriesElement scaled(const Rational& s) const;
  friend bool operator==(const SeriesElement&, const SeriesElement&) = default;

  std::string str() const;

 private:
  int order_;
  std::map<Key, PVPoly> c_;
};

struct Series10Result {
  std::array<SeriesElement, 3> x;
  std::array<SeriesElement, 3> residual;
  PVPoly u;                    ///< H(x_{1,0,0}, x_{2,0,0}, p)
  std::vector<PVPoly> delta;   ///< q-free part of the first relation at h^n, n = 1..N
  bool ok() const;
};

/// Orbit 10 with H = z^2 x + c1 x y^2 + c2 x^2 y + y^3, x3 = p, x_{1,i,0} = 0,
/// x_{2,0,0} = v. Relations are the quantization of the bracket of H.
Series10Result solve_case10(const Rational& c1, const Rational& c2, int N);

}  // namespace qpb
