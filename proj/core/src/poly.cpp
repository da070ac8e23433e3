#include "qpb/poly.hpp"

#include <numeric>

#include "qpb/errors.hpp"

namespace qpb {

bool MonomialOrder::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

std::vector<std::string> default_names(int nvars) {
  std::vector<std::string> n;
  for (int i = 0; i < nvars; ++i) n.push_back("x" + std::to_string(i + 1));
  return n;
}

Poly Poly::constant(const Scalar& c, int nvars) {
  Poly p(nvars);
  p.add_term(Exponent(static_cast<size_t>(nvars), 0), c);
  return p;
}

Poly Poly::var(int i, int nvars) {
  if (i < 0 || i >= nvars) throw ArityMismatch("variable index out of range");
  Exponent e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  return monomial(Scalar(1), e);
}

Poly Poly::monomial(const Scalar& c, Exponent e) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Scalar Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void Poly::add_term(const Exponent& e, const Scalar& c) {
  if (static_cast<int>(e.size()) != nvars_) throw ArityMismatch("exponent arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool Poly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
  return true;
}

bool Poly::is_rational() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

void Poly::check_arity(const Poly& o) const {
  if (nvars_ != o.nvars_) throw ArityMismatch("polynomials over different variable lists");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_arity(b);
  Poly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::pow(int e) const {
  Poly r = constant(Scalar(1), nvars_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly Poly::partial(int i) const {
  if (i < 0 || i >= nvars_) throw ArityMismatch("partial: variable index out of range");
  Poly r(nvars_);
  const auto k = static_cast<size_t>(i);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent d = e;
    d[k] -= 1;
    r.add_term(d, c * Scalar(e[k]));
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw ArityMismatch("substitute: wrong number of images");
  const int target = images.empty() ? nvars_ : images[0].nvars();
  // Cache powers of each image.
  std::vector<std::vector<Poly>> powers(images.size());
  for (size_t i = 0; i < images.size(); ++i) powers[i].push_back(Poly::constant(Scalar(1), target));
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(c, target);
    for (size_t i = 0; i < e.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      if (e[i] > 0) t = t * powers[i][static_cast<size_t>(e[i])];
    }
    r += t;
  }
  return r;
}

Poly Poly::compose(const RationalMatrix& m) const {
  if (static_cast<int>(m.rows()) != nvars_ || m.cols() != m.rows())
    throw ArityMismatch("compose: matrix shape does not match variable count");
  std::vector<Poly> images;
  for (int i = 0; i < nvars_; ++i) {
    Poly li(nvars_);
    for (int j = 0; j < nvars_; ++j)
      li += Poly::var(j, nvars_) * Scalar(m(static_cast<size_t>(i), static_cast<size_t>(j)));
    images.push_back(li);
  }
  return substitute(images);
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw ArityMismatch("eval: wrong point dimension");
  Scalar v;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < e.size(); ++i) t *= point[i].pow(e[i]);
    v += t;
  }
  return v;
}

std::vector<Exponent> homogeneous_basis(int nvars, int degree) {
  std::vector<Exponent> out;
  Exponent e(static_cast<size_t>(nvars), 0);
  // Enumerate in lex-descending order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars - 1) {
      e[static_cast<size_t>(pos)] = remaining;
      out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<size_t>(pos)] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  if (nvars == 0) return degree == 0 ? std::vector<Exponent>{Exponent{}} : out;
  rec(rec, 0, degree);
  return out;
}

std::vector<Scalar> Poly::coefficient_vector(int degree) const {
  if (!is_homogeneous(degree)) throw InvalidArgument("coefficient_vector: not homogeneous of degree " + std::to_string(degree));
  auto basis = homogeneous_basis(nvars_, degree);
  std::vector<Scalar> v;
  v.reserve(basis.size());
  for (const auto& e : basis) v.push_back(coeff(e));
  return v;
}

Poly Poly::from_coefficient_vector(const std::vector<Scalar>& v, int degree, int nvars) {
  auto basis = homogeneous_basis(nvars, degree);
  if (basis.size() != v.size()) throw ArityMismatch("coefficient vector has the wrong length");
  Poly p(nvars);
  for (size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
  return p;
}

namespace {

int sign_of(const Scalar& c) {
  // Atomic scalars are single-term polynomials; the sign is that coefficient's.
  for (const auto& q : c.num().coeffs())
    if (sgn(q) != 0) return sgn(q);
  return 0;
}

}  // namespace

std::string Poly::str(const std::vector<std::string>& names_in) const {
  if (terms_.empty()) return "0";
  const auto names = names_in.empty() ? default_names(nvars_) : names_in;
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef;
    bool negative = false;
    if (c.is_atomic()) {
      negative = sign_of(c) < 0;
      Scalar mag = negative ? -c : c;
      if (!(mag.is_one() && !mono.empty())) coef = mag.str();
    } else {
      coef = "(" + c.str() + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (!coef.empty() && !mono.empty()) out += coef + "*" + mono;
    else out += coef + mono;
  }
  return out;
}

}  // namespace qpb
