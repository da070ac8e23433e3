#pragma once

#include <array>
#include <map>
#include <string>

#include "qpb/matrix.hpp"
#include "qpb/poly.hpp"

namespace qpb {

/// Structure constants c[i][j][k][l], 0-based.
using Constants = std::array<std::array<std::array<std::array<Rational, 3>, 3>, 3>, 3>;

enum class Parity { even, odd };

/// Quadratic bracket y_ij = sum_kl c_ij^kl x_k x_l on three generators.
///
/// Even brackets are antisymmetric in (i, j) and stored symmetric in
/// (k, l). Odd brackets only arise from dualize(); they live on Grassmann
/// generators and have the opposite symmetries.
class QuadraticBracket {
 public:
  QuadraticBracket();

  /// Symmetrizes in (k, l), then checks antisymmetry in (i, j).
  static QuadraticBracket from_structure_constants(const Constants& c);
  /// From y12, y23, y31 (homogeneous quadratic, h-free).
  static QuadraticBracket from_polys(const Poly& y12, const Poly& y23, const Poly& y31);

  const Constants& constants() const { return c_; }
  const Rational& c(int i, int j, int k, int l) const;
  Parity parity() const { return parity_; }

  /// y_ij as a commutative polynomial (even brackets only), 0-based.
  Poly y(int i, int j) const;
  bool is_zero() const;

  friend bool operator==(const QuadraticBracket& a, const QuadraticBracket& b) {
    return a.parity_ == b.parity_ && a.c_ == b.c_;
  }

  /// Exchanges upper and lower index pairs and flips the parity.
  friend QuadraticBracket dualize(const QuadraticBracket& b);

 private:
  void require_even(const char* what) const;
  Constants c_{};
  Parity parity_ = Parity::even;
};

enum class CaseId { a, b, ca, cb, da, db, dc };

std::string to_string(CaseId id);
/// Throws InvalidArgument for unknown labels.
CaseId case_from_string(const std::string& s);

/// Case parameters by name: "lambda", "lambda1", "lambda2".
using CaseParams = std::map<std::string, Rational>;

/// Bracket from a cubic f plus the case correction terms: y12 = df/dx3,
/// y23 = df/dx1, y31 = df/dx2, then
///   b:  y23 -= x1x2
///   ca: y23 -= lambda x2x3
///   cb: y23 += x1x3 - x2^2/2
///   da: y23 += lambda2 x2x3, y31 -= lambda1 x1x3
///   db: y23 += lambda x2x3, y31 -= lambda x1x3
///   dc: as db, and y12 -= lambda/2 x1^2
QuadraticBracket from_case(CaseId id, const Poly& f, const CaseParams& params = {});

/// The correction part alone (from_case with f = 0).
QuadraticBracket case_correction(CaseId id, const CaseParams& params = {});

struct PData {
  RationalMatrix P;
  std::array<Poly, 3> v;
};

/// v_i = sum_k d y_ik / d x_k.
std::array<Poly, 3> v_vector(const QuadraticBracket& b);
/// p_ij = d v_i / d x_j; trace(P) = 0 is checked.
PData p_data(const QuadraticBracket& b);
RationalMatrix p_matrix(const QuadraticBracket& b);

struct JacobiResidual {
  Poly linear_form;  ///< y12 v3 + y23 v1 + y31 v2
  Poly triple;       ///< cyclic sum of b(b(x_i, x_j), x_k)
  bool poisson() const { return linear_form.is_zero() && triple.is_zero(); }
};

JacobiResidual jacobi_residual(const QuadraticBracket& b);

/// Leibniz extension: sum_ij (d_i f)(d_j g) y_ij.
Poly extend(const QuadraticBracket& b, const Poly& f, const Poly& g);

/// Bracket in coordinates x'_i = sum_j a_ij x_j. Throws SingularMatrix.
QuadraticBracket transform(const QuadraticBracket& b, const RationalMatrix& A);

}  // namespace qpb
