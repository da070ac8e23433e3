#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpb/bracket.hpp"

namespace qpb {

struct ClassificationReport {
  CaseId label = CaseId::a;
  size_t rank = 0;
  std::string charpoly;  ///< det(t I - P), highest degree first
  bool rational_spectrum = true;
  std::vector<Rational> eigenvalues;  ///< spectrum order; empty when irrational
  std::optional<RationalMatrix> A;    ///< canonical coordinates x' = A x
  std::optional<QuadraticBracket> canonical;
  std::optional<Poly> f;
  CaseParams params;  ///< lambda, lambda1, lambda2
  /// Named constants of f: c (da, dc), c1 and c2 (ca, cb), g = f / x3 (db).
  std::map<std::string, Rational> constants;
  std::optional<Poly> g;
};

/// Canonical P for a case: b = E31, ca = diag(0, -l, l), cb = E21 + E32,
/// da = diag(l1, l2, -l1 - l2), db = diag(l, l, -2l), dc adds p21 = l.
RationalMatrix canonical_p(CaseId id, const CaseParams& params = {});

/// Throws NotPoisson when the Jacobi identity fails.
ClassificationReport classify(const QuadraticBracket& b);

/// Solves the cubic-form system for a bracket in canonical coordinates.
/// Throws NotCanonical, Inconsistent or OutsideFamily.
Poly recover_cubic(const QuadraticBracket& canonical, CaseId id, const CaseParams& params = {});

/// Some invertible A with A * P * A^-1 = T, or nullopt if none is found.
std::optional<RationalMatrix> conjugator(const RationalMatrix& P, const RationalMatrix& T);

}  // namespace qpb
