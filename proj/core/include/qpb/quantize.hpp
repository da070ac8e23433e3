#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpb/bracket.hpp"
#include "qpb/scalar.hpp"

namespace qpb {

/// Degree-2 tensor; word x_a x_b (0-based letters) sits at index 3a + b.
using Tensor2 = std::array<Scalar, 9>;

/// Index of a word in the 3^d tensor basis, first letter most significant.
using Word = std::vector<int>;
uint32_t word_index(const Word& w);
Word word_from_index(uint32_t idx, int degree);
std::string word_str(const Word& w);

struct Relation {
  int i = 0, j = 0;  ///< 0-based generator pair
  Tensor2 t{};
};

/// f_ij = x_i x_j - x_j x_i - h sum_kl c_ij^kl x_k x_l for (1,2), (2,3), (3,1).
std::array<Relation, 3> relations(const QuadraticBracket& b);

/// Rules for the non-standard words x2x1, x3x1, x3x2 in standard words.
class RewritingSystem {
 public:
  static constexpr std::array<int, 3> kLeft{3, 6, 7};
  static constexpr std::array<int, 6> kStandard{0, 1, 2, 4, 5, 8};

  RewritingSystem();
  /// rhs[m] rewrites word kLeft[m]; entries on non-standard words must be 0.
  explicit RewritingSystem(const std::array<Tensor2, 3>& rhs);

  const Tensor2& rule(int m) const { return rhs_[static_cast<size_t>(m)]; }
  /// Rule for a non-standard word index (3, 6 or 7).
  const Tensor2& rule_for(int word) const;
  /// Coefficientwise h = 0 specialization.
  RewritingSystem at_zero() const;
  friend bool operator==(const RewritingSystem& a, const RewritingSystem& b) { return a.rhs_ == b.rhs_; }

 private:
  std::array<Tensor2, 3> rhs_;
};

/// The pure transposition rules x_j x_i -> x_i x_j.
RewritingSystem transposition_system();

/// Solve the relations for the non-standard words. Throws SingularSystem.
RewritingSystem triangularize(const std::vector<Tensor2>& rels);
RewritingSystem triangularize(const std::array<Relation, 3>& rels);

/// Linear combination of words (all of one degree).
using NormalForm = std::map<Word, Scalar>;

enum class Strategy { leftmost, rightmost };

/// Rewrites to standard words. When the rewriting cycles, the result is the
/// unique fixpoint of the rewriting map, found by an exact linear solve;
/// NonTerminating is thrown if that fixpoint is not unique.
NormalForm normal_form(const Word& w, const RewritingSystem& rs, Strategy s = Strategy::leftmost);
NormalForm normal_form(const NormalForm& v, const RewritingSystem& rs, Strategy s = Strategy::leftmost);

/// NF(x3x2x1 reducing x3x2 first) - NF(x3x2x1 reducing x2x1 first).
NormalForm diamond_residual(const RewritingSystem& rs);

std::string to_string(const NormalForm& nf);

/// (dim at generic h, dim at h = 0) of the degree-d quotient.
std::pair<size_t, size_t> graded_dimension(const std::vector<Tensor2>& rels, int d);
std::pair<size_t, size_t> graded_dimension(const std::array<Relation, 3>& rels, int d);

std::vector<Tensor2> tensors(const std::array<Relation, 3>& rels);

}  // namespace qpb
