#pragma once

#include <string>
#include <vector>

#include "qpb/matrix.hpp"
#include "qpb/upoly.hpp"

namespace qpb {

/// Characteristic polynomial det(t I - M), coefficients lowest degree first.
UPoly charpoly(const RationalMatrix& m);

/// Polynomial printed highest degree first in `var`: "t^3 - 2".
std::string str_descending(const UPoly& p, const std::string& var = "t");

/// Rational roots with multiplicity, sorted ascending.
std::vector<Rational> rational_roots(const UPoly& p);

/// Spectrum order: ascending by absolute value, negative first on ties.
bool spectrum_less(const Rational& a, const Rational& b);

struct JordanBlock {
  Rational eigenvalue;
  int size = 1;
};

struct JordanResult {
  RationalMatrix J;
  RationalMatrix A;  ///< A * M * A^-1 = J
  std::vector<JordanBlock> blocks;
};

/// Upper-triangular Jordan form of a 3x3 rational matrix (any square size
/// works when the spectrum is rational). Throws IrrationalSpectrum.
JordanResult jordan_3x3(const RationalMatrix& m);

}  // namespace qpb
