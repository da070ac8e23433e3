#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qpb/bracket.hpp"
#include "qpb/operator.hpp"
#include "qpb/quantize.hpp"

namespace qpb {

using Triple = std::array<OpElement, 3>;

/// An explicit operator triple together with the relations it is meant to
/// satisfy.
struct Realization {
  std::string id;
  std::string backend;  ///< "weyl", "shift" or "tensor"
  Triple x;
  std::vector<Tensor2> relations;
  /// Constants read off the rewriting rules (k, k1, c, d, a, ...).
  std::map<std::string, Scalar> derived;
};

/// Catalog ids: orbit2..orbit9, rank1, rank2a, rank2b, rank3a, rank3b,
/// rank3c.
std::vector<std::string> catalog_ids();

/// Throws InvalidArgument for unknown ids or params, DegenerateParams when a
/// denominator of the realization vanishes.
Realization catalog(const std::string& id, const CaseParams& params = {});

/// Residual of each relation after substituting the triple.
Triple verify(const Triple& x, const std::vector<Tensor2>& relations);
Triple verify(const Triple& x, const RewritingSystem& rs);

/// x_j x_i - rhs for each rule, in the order x2x1, x3x1, x3x2.
std::vector<Tensor2> rule_tensors(const RewritingSystem& rs);

struct IndependenceResult {
  bool independent = false;
  size_t rank = 0;
  size_t monomials = 0;
};

/// Rank of the expansion of x1^i x2^j x3^k, i + j + k <= D. D > 4 throws
/// DegreeGuard.
IndependenceResult independence(const Triple& x, int D);

}  // namespace qpb
