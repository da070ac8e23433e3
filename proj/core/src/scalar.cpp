#include "qpb/scalar.hpp"

#include <algorithm>
#include <utility>

#include "qpb/errors.hpp"

namespace qpb {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  UPoly p;
  if (sgn(c) == 0) return p;
  p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

int UPoly::order() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

int UPoly::term_count() const {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) != 0; }));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw DivisionByZero();
  r = a;
  q = UPoly();
  if (a.degree() < b.degree()) return;
  std::vector<Rational> qc(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational lead_inv = 1 / b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    Rational f = r.leading() * lead_inv;
    qc[static_cast<size_t>(shift)] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c_[static_cast<size_t>(i + shift)] -= f * b.c_[static_cast<size_t>(i)];
    r.trim();
  }
  q = UPoly(std::move(qc));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly r = *this;
  r *= Rational(1 / leading());
  return r;
}

namespace {

using ZCoeffs = std::vector<mpz_class>;

/// Primitive integer multiple of a nonzero rational polynomial.
ZCoeffs primitive(const UPoly& p) {
  mpz_class den = 1, content = 0;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZCoeffs z;
  for (const auto& c : p.coeffs()) {
    z.push_back(den / c.get_den() * c.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.back().get_mpz_t());
  }
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return z;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return static_cast<uint64_t>((unsigned __int128)a * b % p); }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

using ModPoly = std::vector<uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce_mod(const ZCoeffs& z, uint64_t p) {
  ModPoly r;
  for (const auto& c : z) r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  trim(r);
  return r;
}

/// Monic gcd over Z/p.
ModPoly gcd_mod(ModPoly a, ModPoly b, uint64_t p) {
  while (!b.empty()) {
    const uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const uint64_t f = mulmod(a.back(), inv, p);
      const size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - mulmod(f, b[i], p)) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  const uint64_t inv = powmod(a.back(), p - 2, p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

const std::vector<uint64_t>& primes() {
  static const std::vector<uint64_t> ps = [] {
    std::vector<uint64_t> v;
    mpz_class q = mpz_class(1) << 61;
    for (int i = 0; i < 256; ++i) {
      mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
      v.push_back(q.get_ui());
    }
    return v;
  }();
  return ps;
}

bool divides(const UPoly& d, const UPoly& a) {
  UPoly q, r;
  UPoly::divmod(a, d, q, r);
  return r.is_zero();
}

UPoly euclid_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace

// Modular gcd: images mod large primes, CRT in the symmetric range, and an
// exact trial division to confirm.
UPoly UPoly::gcd(UPoly a, UPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return UPoly(Rational(1));
  const ZCoeffs za = primitive(a), zb = primitive(b);
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), za.back().get_mpz_t(), zb.back().get_mpz_t());
  const int bound = std::min(a.degree(), b.degree());
  int deg = bound + 1;
  ZCoeffs H;
  mpz_class M = 1;
  for (uint64_t p : primes()) {
    if (mpz_divisible_ui_p(za.back().get_mpz_t(), p) || mpz_divisible_ui_p(zb.back().get_mpz_t(), p)) continue;
    ModPoly g = gcd_mod(reduce_mod(za, p), reduce_mod(zb, p), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return UPoly(Rational(1));
    if (dg > deg) continue;
    const uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& c : g) c = mulmod(c, gm, p);
    if (dg < deg) {
      deg = dg;
      H.assign(g.begin(), g.end());
      for (auto& c : H)
        if (c > p / 2) c -= p;
      M = p;
      continue;
    }
    // CRT: h = H + M * t with t = (g - H) / M mod p.
    const uint64_t minv = powmod(mpz_fdiv_ui(M.get_mpz_t(), p), p - 2, p);
    bool changed = false;
    const mpz_class Mp = M * p, half = Mp / 2;
    for (size_t i = 0; i < H.size(); ++i) {
      const uint64_t hi = mpz_fdiv_ui(H[i].get_mpz_t(), p);
      const uint64_t t = mulmod((g[i] + p - hi) % p, minv, p);
      if (t == 0) continue;
      changed = true;
      H[i] += M * t;
      if (H[i] > half) H[i] -= Mp;
    }
    M = Mp;
    if (changed) continue;
    std::vector<Rational> c(H.begin(), H.end());
    UPoly cand = UPoly(std::move(c)).monic();
    if (divides(cand, a) && divides(cand, b)) return cand;
  }
  return euclid_gcd(std::move(a), std::move(b));
}

UPoly UPoly::shift_down(int k) const {
  if (k <= 0) return *this;
  UPoly r;
  if (static_cast<int>(c_.size()) <= k) return r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

Rational UPoly::eval(const Rational& x) const {
  Rational v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

std::strong_ordering compare(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// --------------------------------------------------------------- Scalar

Scalar::Scalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    UPoly g = UPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      UPoly q, r;
      UPoly::divmod(num_, g, q, r);
      num_ = std::move(q);
      UPoly::divmod(den_, g, q, r);
      den_ = std::move(q);
    }
  }
  Rational s = den_.at_zero();
  if (sgn(s) == 0) s = den_.leading();
  if (s != 1) {
    Rational inv = 1 / s;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational Scalar::constant() const {
  if (!is_constant()) throw InvalidArgument("scalar depends on h: " + str());
  return num_.at_zero();
}

Rational Scalar::at_zero() const {
  if (!regular_at_zero()) throw PoleAtZero();
  return num_.at_zero() / den_.at_zero();
}

int Scalar::valuation() const {
  if (is_zero()) return 0;
  return num_.order() - den_.order();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ -= o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    *this = Scalar();
    return *this;
  }
  if (is_polynomial() && o.is_polynomial()) {
    if (o.num_.is_constant()) {
      num_ *= o.num_.at_zero();
    } else if (num_.is_constant()) {
      Rational c = num_.at_zero();
      num_ = o.num_;
      num_ *= c;
    } else {
      num_ = num_ * o.num_;
    }
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (num_.is_constant() && is_polynomial()) return Scalar(Rational(1 / num_.at_zero()));
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  auto c = compare(a.num_, b.num_);
  if (c != 0) return c;
  return compare(a.den_, b.den_);
}

bool Scalar::is_atomic() const {
  if (!is_polynomial()) return false;
  if (num_.term_count() != 1) return num_.is_zero();
  return true;
}

std::string Scalar::str() const {
  if (is_polynomial()) return num_.str();
  std::string n = num_.str();
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace qpb
