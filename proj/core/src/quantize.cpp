#include "qpb/quantize.hpp"

#include <algorithm>
#include <set>

#include "qpb/errors.hpp"
#include "qpb/flatness.hpp"
#include "qpb/matrix.hpp"

namespace qpb {

uint32_t word_index(const Word& w) {
  uint32_t idx = 0;
  for (int l : w) idx = idx * 3 + static_cast<uint32_t>(l);
  return idx;
}

Word word_from_index(uint32_t idx, int degree) {
  Word w(static_cast<size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = static_cast<int>(idx % 3);
    idx /= 3;
  }
  return w;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(w[i] + 1);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::array<Relation, 3> relations(const QuadraticBracket& b) {
  static constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
  std::array<Relation, 3> out;
  const Scalar h = Scalar::h();
  for (size_t r = 0; r < 3; ++r) {
    auto [i, j] = pairs[r];
    Relation& rel = out[r];
    rel.i = i;
    rel.j = j;
    rel.t[static_cast<size_t>(3 * i + j)] += Scalar(1);
    rel.t[static_cast<size_t>(3 * j + i)] -= Scalar(1);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        const Rational& c = b.c(i, j, k, l);
        if (sgn(c) != 0) rel.t[static_cast<size_t>(3 * k + l)] -= h * Scalar(c);
      }
  }
  return out;
}

std::vector<Tensor2> tensors(const std::array<Relation, 3>& rels) {
  return {rels[0].t, rels[1].t, rels[2].t};
}

RewritingSystem::RewritingSystem() : RewritingSystem(transposition_system()) {}

RewritingSystem::RewritingSystem(const std::array<Tensor2, 3>& rhs) : rhs_(rhs) {
  for (const auto& r : rhs_)
    for (int w : kLeft)
      if (!r[static_cast<size_t>(w)].is_zero()) throw InvalidArgument("rule right-hand side contains a non-standard word");
}

const Tensor2& RewritingSystem::rule_for(int word) const {
  for (size_t m = 0; m < 3; ++m)
    if (kLeft[m] == word) return rhs_[m];
  throw InvalidArgument("no rule for word " + std::to_string(word));
}

RewritingSystem RewritingSystem::at_zero() const {
  std::array<Tensor2, 3> z;
  for (size_t m = 0; m < 3; ++m)
    for (size_t w = 0; w < 9; ++w) z[m][w] = Scalar(rhs_[m][w].at_zero());
  return RewritingSystem(z);
}

RewritingSystem transposition_system() {
  std::array<Tensor2, 3> rhs;
  rhs[0][1] = Scalar(1);  // x2x1 -> x1x2
  rhs[1][2] = Scalar(1);  // x3x1 -> x1x3
  rhs[2][5] = Scalar(1);  // x3x2 -> x2x3
  return RewritingSystem(rhs);
}

RewritingSystem triangularize(const std::vector<Tensor2>& rels) {
  if (rels.size() != 3) throw ArityMismatch("triangularize needs exactly three relations");
  ExactMatrix N(3, 3), S(3, 6);
  for (size_t r = 0; r < 3; ++r) {
    for (size_t m = 0; m < 3; ++m) N(r, m) = rels[r][static_cast<size_t>(RewritingSystem::kLeft[m])];
    for (size_t s = 0; s < 6; ++s) S(r, s) = rels[r][static_cast<size_t>(RewritingSystem::kStandard[s])];
  }
  ExactMatrix inv;
  try {
    inv = N.inverse_matrix();
  } catch (const SingularMatrix&) {
    throw SingularSystem("non-standard block of the relations is singular");
  }
  ExactMatrix sol = inv * S;
  std::array<Tensor2, 3> rhs;
  for (size_t m = 0; m < 3; ++m)
    for (size_t s = 0; s < 6; ++s) rhs[m][static_cast<size_t>(RewritingSystem::kStandard[s])] = -sol(m, s);
  return RewritingSystem(rhs);
}

RewritingSystem triangularize(const std::array<Relation, 3>& rels) { return triangularize(tensors(rels)); }

namespace {

class Reducer {
 public:
  Reducer(const RewritingSystem& rs, Strategy s) : rs_(rs), s_(s) {}

  /// Plain rewriting when it terminates, otherwise the fixpoint of the
  /// rewriting map solved as a linear system.
  const NormalForm& run(const Word& w) {
    try {
      return reduce(w);
    } catch (const NonTerminating&) {
      active_.clear();
      return solve(w);
    }
  }

  const NormalForm& reduce(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    if (!active_.insert(w).second) throw NonTerminating("rewriting cycle at " + word_str(w));
    NormalForm out;
    const int pos = inversion(w);
    if (pos < 0) {
      out[w] = Scalar(1);
    } else {
      const auto p = static_cast<size_t>(pos);
      const Tensor2& rhs = rs_.rule_for(3 * w[p] + w[p + 1]);
      for (int t = 0; t < 9; ++t) {
        const Scalar& c = rhs[static_cast<size_t>(t)];
        if (c.is_zero()) continue;
        Word v = w;
        v[p] = t / 3;
        v[p + 1] = t % 3;
        for (const auto& [u, cu] : reduce(v)) {
          Scalar& dst = out[u];
          dst += c * cu;
          if (dst.is_zero()) out.erase(u);
        }
      }
    }
    active_.erase(w);
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  /// One rewriting step at the chosen inversion.
  NormalForm step(const Word& w) const {
    NormalForm out;
    const auto p = static_cast<size_t>(inversion(w));
    const Tensor2& rhs = rs_.rule_for(3 * w[p] + w[p + 1]);
    for (int t = 0; t < 9; ++t) {
      const Scalar& c = rhs[static_cast<size_t>(t)];
      if (c.is_zero()) continue;
      Word v = w;
      v[p] = t / 3;
      v[p + 1] = t % 3;
      out[v] += c;
    }
    return out;
  }

  const NormalForm& solve(const Word& w) {
    // Non-standard words reachable from w, and standard words hit on the way.
    std::map<Word, size_t> unknown, standard;
    std::vector<Word> queue{w};
    std::vector<NormalForm> steps;
    for (size_t i = 0; i < queue.size(); ++i) {
      const Word u = queue[i];
      unknown.emplace(u, unknown.size());
      steps.push_back(step(u));
      for (const auto& [v, c] : steps.back()) {
        if (inversion(v) < 0) {
          standard.emplace(v, standard.size());
        } else if (!unknown.count(v) && std::find(queue.begin(), queue.end(), v) == queue.end()) {
          queue.push_back(v);
        }
      }
    }
    // (I - R) X = B with R the step map among unknowns, B its standard part.
    const size_t n = unknown.size(), m = standard.size();
    ExactMatrix lhs = ExactMatrix::identity(n), rhs(n, m);
    for (const auto& [u, i] : unknown)
      for (const auto& [v, c] : steps[i]) {
        if (auto it = unknown.find(v); it != unknown.end()) lhs(i, it->second) -= c;
        else rhs(i, standard.at(v)) += c;
      }
    ExactMatrix x;
    try {
      x = qpb::solve(lhs, rhs);
    } catch (const SingularMatrix&) {
      throw NonTerminating("rewriting has no unique fixpoint at " + word_str(w));
    }
    for (const auto& [u, i] : unknown) {
      NormalForm out;
      for (const auto& [v, j] : standard)
        if (!x(i, j).is_zero()) out[v] = x(i, j);
      memo_.insert_or_assign(u, std::move(out));
    }
    return memo_.at(w);
  }

  int inversion(const Word& w) const {
    const int n = static_cast<int>(w.size());
    if (s_ == Strategy::leftmost) {
      for (int i = 0; i + 1 < n; ++i)
        if (w[static_cast<size_t>(i)] > w[static_cast<size_t>(i) + 1]) return i;
    } else {
      for (int i = n - 2; i >= 0; --i)
        if (w[static_cast<size_t>(i)] > w[static_cast<size_t>(i) + 1]) return i;
    }
    return -1;
  }

  const RewritingSystem& rs_;
  Strategy s_;
  std::map<Word, NormalForm> memo_;
  std::set<Word> active_;
};

void accumulate(NormalForm& acc, const NormalForm& v, const Scalar& c) {
  for (const auto& [u, cu] : v) {
    Scalar& dst = acc[u];
    dst += c * cu;
    if (dst.is_zero()) acc.erase(u);
  }
}

}  // namespace

NormalForm normal_form(const Word& w, const RewritingSystem& rs, Strategy s) {
  Reducer r(rs, s);
  return r.run(w);
}

NormalForm normal_form(const NormalForm& v, const RewritingSystem& rs, Strategy s) {
  Reducer r(rs, s);
  NormalForm out;
  for (const auto& [w, c] : v) accumulate(out, r.run(w), c);
  return out;
}

NormalForm diamond_residual(const RewritingSystem& rs) {
  Reducer r(rs, Strategy::leftmost);
  // x3x2 first: x3x2 -> rule, then x1 appended.
  NormalForm a, b;
  const Tensor2& r32 = rs.rule_for(7);
  const Tensor2& r21 = rs.rule_for(3);
  for (int t = 0; t < 9; ++t) {
    if (!r32[static_cast<size_t>(t)].is_zero()) accumulate(a, r.run({t / 3, t % 3, 0}), r32[static_cast<size_t>(t)]);
    if (!r21[static_cast<size_t>(t)].is_zero()) accumulate(b, r.run({2, t / 3, t % 3}), r21[static_cast<size_t>(t)]);
  }
  NormalForm diff = a;
  accumulate(diff, b, Scalar(-1));
  return diff;
}

std::string to_string(const NormalForm& nf) {
  if (nf.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : nf) {
    std::string coef;
    bool neg = false;
    if (c.is_atomic()) {
      neg = !c.num().coeffs().empty() && sgn(c.num().coeffs()[static_cast<size_t>(c.num().order())]) < 0;
      Scalar mag = neg ? -c : c;
      if (!mag.is_one()) coef = mag.str() + "*";
    } else {
      coef = "(" + c.str() + ")*";
    }
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    out += coef + word_str(w);
  }
  return out;
}

std::pair<size_t, size_t> graded_dimension(const std::vector<Tensor2>& rels, int d) {
  if (d > kMaxDegree) throw DegreeGuard("degree " + std::to_string(d) + " exceeds " + std::to_string(kMaxDegree));
  if (d < 0) throw InvalidArgument("negative degree");
  size_t total = 1;
  for (int i = 0; i < d; ++i) total *= 3;
  if (d < 2) return {total, total};
  auto s = splitting_check(rels, d);
  return {total - s.rank_generic, total - s.rank_zero};
}

std::pair<size_t, size_t> graded_dimension(const std::array<Relation, 3>& rels, int d) {
  return graded_dimension(tensors(rels), d);
}

}  // namespace qpb
