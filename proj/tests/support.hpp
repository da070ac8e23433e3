#pragma once

#include <random>
#include <string>
#include <vector>

#include "qpb/bracket.hpp"
#include "qpb/matrix.hpp"
#include "qpb/poly.hpp"

namespace qpb::testing {

struct Family {
  CaseId id;
  Poly f;
  CaseParams params;
};

inline Poly X() { return Poly::var(0); }
inline Poly Y() { return Poly::var(1); }
inline Poly Z() { return Poly::var(2); }

/// The seven canonical families with the sample parameters used throughout.
inline std::vector<Family> seven_families() {
  return {
      {CaseId::a, X() * Y() * Z(), {}},
      {CaseId::b, Poly(), {}},
      {CaseId::ca, Scalar(2) * X() * Y() * Z() + X().pow(3), {{"lambda", 1}}},
      {CaseId::cb, Scalar(-2) * X() * X() * Z() + X() * Y() * Y(), {}},
      {CaseId::da, Poly(), {{"lambda1", 1}, {"lambda2", 2}}},
      {CaseId::db, X() * Y() * Z(), {{"lambda", 1}}},
      {CaseId::dc, X() * X() * Z(), {{"lambda", 1}}},
  };
}

inline QuadraticBracket build(const Family& f) { return from_case(f.id, f.f, f.params); }

inline Rational random_rational(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline RationalMatrix random_invertible(std::mt19937& rng) {
  for (;;) {
    RationalMatrix m(3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) m(i, j) = random_rational(rng, 3);
    if (sgn(m.determinant()) != 0) return m;
  }
}

inline Poly random_form(std::mt19937& rng, int degree, int nvars = 3, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  Poly p(nvars);
  for (const auto& e : homogeneous_basis(nvars, degree))
    if (keep(rng)) p.add_term(e, Scalar(random_rational(rng)));
  return p;
}

/// Arbitrary (usually non-Poisson) quadratic bracket.
inline QuadraticBracket random_bracket(std::mt19937& rng, double density = 0.4) {
  return QuadraticBracket::from_polys(random_form(rng, 2, 3, density), random_form(rng, 2, 3, density),
                                      random_form(rng, 2, 3, density));
}

/// Poisson bracket: a random case-a cubic moved by a random linear change.
inline QuadraticBracket random_poisson(std::mt19937& rng) {
  return transform(from_case(CaseId::a, random_form(rng, 3)), random_invertible(rng));
}

inline std::string data_path(const std::string& name) { return std::string(QPB_TEST_DATA) + "/" + name; }

}  // namespace qpb::testing
