#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpb/matrix.hpp"
#include "qpb/poly.hpp"

namespace qpb {

struct CubicOrbitReport {
  int essential_variables = 0;
  /// Binary cubics (two essential variables): discriminant of the reduced form.
  std::optional<Rational> binary_discriminant;
  /// Three essential variables: colength of the Jacobian ideal, and of the
  /// Jacobian ideal plus the 2x2 Hessian minors.
  std::optional<int> tjurina;
  std::optional<int> tjurina_hessian;
  std::vector<int> candidates;
  std::optional<RationalMatrix> witness;
  std::optional<Rational> c;
};

/// Catalog representative in x1, x2, x3 (x, y, z). Orbit 10 needs c.
Poly orbit_representative(int orbit_id, const std::optional<Rational>& c = std::nullopt);

/// Throws InvalidArgument for non-cubic input.
CubicOrbitReport orbit_fingerprint(const Poly& f);

/// f(A x) == representative. Throws InvalidArgument for a bad id, a missing
/// c, or c in {0, 1} for orbit 10; SingularMatrix for singular A.
bool orbit_verify(const Poly& f, const RationalMatrix& A, int orbit_id, const std::optional<Rational>& c = std::nullopt);

}  // namespace qpb
