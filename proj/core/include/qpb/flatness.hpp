#pragma once

#include <string>
#include <vector>

#include "qpb/echelon.hpp"
#include "qpb/matrix.hpp"
#include "qpb/quantize.hpp"

namespace qpb {

/// Spanning family of a subspace of the degree-k tensor power (3^k columns).
struct TensorSubspace {
  int degree = 2;
  std::vector<SparseRow<Scalar>> rows;
  size_t ambient() const;
  RankProfile ranks() const;
};

constexpr int kMaxDegree = 8;

/// V^(p) (x) span(rels) (x) V^(k-2-p), p 0-based. Throws DegreeGuard.
TensorSubspace padded(const std::vector<Tensor2>& rels, int k, int position);
/// I^k = sum over all positions.
TensorSubspace component(const std::vector<Tensor2>& rels, int k);

struct SplittingResult {
  size_t rank_zero = 0;
  size_t rank_generic = 0;
  bool splitting = false;
};

SplittingResult splitting_check(const std::vector<Tensor2>& rels, int k);

struct WResult {
  size_t dim_generic = 0;
  size_t dim_zero = 0;
  bool witness_ok = false;
  /// "cyclic", "rank1", "rank2" (possibly with h rescaled), "corrected" or empty when no witness was found.
  std::string witness;
};

/// W = (I (x) V) cap (V (x) I) in degree 3.
WResult intersection_W(const std::vector<Tensor2>& rels);
/// dim W after substituting h = value (rels must be regular there).
size_t intersection_W_at(const std::vector<Tensor2>& rels, const Rational& h);

enum class Distributivity { eq1, eq3 };

/// Distributivity of the lattice I^k_1, ..., I^k_{k-1} at the chosen point.
bool distributivity(const std::vector<Tensor2>& rels, int k, Distributivity which, Point at = Point::zero);

/// Annihilator of a degree-2 subspace under the standard pairing.
TensorSubspace dual_subspace(const TensorSubspace& space);
/// Row-space equality over the fraction field.
bool same_span(const TensorSubspace& a, const TensorSubspace& b);

/// x_i x_j - x_j x_i for i < j.
std::vector<Tensor2> commutator_relations();
/// x_i x_j + x_j x_i for i <= j (the Grassmann relations).
std::vector<Tensor2> symmetric_relations();

std::vector<Tensor2> to_tensors(const TensorSubspace& degree2);

}  // namespace qpb
