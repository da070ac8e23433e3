#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpb/scalar.hpp"

namespace qpb {

/// Which generators an operator algebra has. Elements from different
/// contexts cannot be combined (BackendMismatch).
struct OpContext {
  int weyl_pairs = 0;    ///< pairs (p_i, q_i) with [p_i, q_i] = 1
  int lattice_dims = 0;  ///< 0, 1 (x with shift s) or 2 (x, y with s_x, s_y)
  std::vector<std::string> central;  ///< central Laurent symbols, e.g. w, z
  friend bool operator==(const OpContext&, const OpContext&) = default;
};

/// Exponential b^(ax + by) on the lattice. Bases are canonicalized so b and
/// 1/b share one symbol.
struct ExpForm {
  Scalar base;
  std::array<int, 2> form{0, 0};
  friend auto operator<=>(const ExpForm&, const ExpForm&) = default;
  friend bool operator==(const ExpForm&, const ExpForm&) = default;
};

/// Normal-ordered monomial: central^c * [q^a p^b (ln p)^e per pair] *
/// [exponentials * x^i y^j] * shifts. p exponents may be any Scalar.
struct OpKey {
  std::vector<int> central;
  std::vector<int> q;
  std::vector<Scalar> p;
  std::vector<int> ln;
  std::vector<ExpForm> exps;  ///< sorted by base, no zero forms
  std::array<int, 2> poly{0, 0};
  std::array<int, 2> shift{0, 0};
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
  friend bool operator==(const OpKey&, const OpKey&) = default;
};

class OpElement {
 public:
  OpElement() = default;
  explicit OpElement(OpContext ctx) : ctx_(std::move(ctx)) {}

  static OpElement constant(const OpContext& ctx, const Scalar& c);
  /// Generators; `pair` and `axis` are 0-based.
  static OpElement p(const OpContext& ctx, int pair = 0, const Scalar& exponent = Scalar(1));
  static OpElement q(const OpContext& ctx, int pair = 0);
  static OpElement ln_p(const OpContext& ctx, int pair = 0);
  static OpElement central(const OpContext& ctx, const std::string& name, int exponent = 1);
  static OpElement shift(const OpContext& ctx, int sx, int sy = 0);
  /// base^(a x + b y + c), the constant part folded into the coefficient.
  static OpElement exponential(const OpContext& ctx, const Scalar& base, int a, int b = 0, int c = 0);
  /// Lattice coordinate x (axis 0) or y (axis 1).
  static OpElement coordinate(const OpContext& ctx, int axis);

  const OpContext& context() const { return ctx_; }
  const std::map<OpKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const OpKey& k, const Scalar& c);

  OpElement operator-() const;
  OpElement& operator+=(const OpElement& o);
  OpElement& operator-=(const OpElement& o);
  OpElement& operator*=(const Scalar& s);
  friend OpElement operator+(OpElement a, const OpElement& b) { return a += b; }
  friend OpElement operator-(OpElement a, const OpElement& b) { return a -= b; }
  friend OpElement operator*(OpElement a, const Scalar& s) { return a *= s; }
  friend OpElement operator*(const Scalar& s, OpElement a) { return a *= s; }
  friend OpElement operator*(const OpElement& a, const OpElement& b);
  friend bool operator==(const OpElement& a, const OpElement& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }
  OpElement pow(int e) const;

  std::string str() const;

 private:
  void check(const OpElement& o) const;
  OpKey unit_key() const;
  OpContext ctx_;
  std::map<OpKey, Scalar> terms_;
};

OpElement commutator(const OpElement& a, const OpElement& b);

}  // namespace qpb
