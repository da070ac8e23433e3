#include "qpb/lang.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qpb/errors.hpp"

namespace qpb {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ParseOptions& opts) : s_(text), o_(opts) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(i_, what); }

  [[noreturn]] void fail_at(size_t at, const std::string& what) const {
    int line = o_.line, col = o_.column;
    for (size_t k = 0; k < at && k < s_.size(); ++k) {
      if (s_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  int nvars() const { return static_cast<int>(o_.variables.size()); }

  Poly expr() {
    skip();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly p = term();
    if (negate) p = -p;
    for (;;) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      if (accept('*')) {
        p = p * factor();
      } else if (accept('/')) {
        skip();
        const size_t at = i_;
        Poly d = factor();
        if (d.degree() > 0) fail_at(at, "division by an expression in the variables");
        if (d.is_zero()) fail_at(at, "division by zero");
        p *= d.coeff(Exponent(static_cast<size_t>(nvars()), 0)).inverse();
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip();
    const size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a non-negative integer exponent");
    if (i_ - start > 4) fail_at(start, "exponent too large");
    return base.pow(std::stoi(s_.substr(start, i_ - start)));
  }

  Poly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    const size_t start = i_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Poly::constant(Scalar(Rational(mpz_class(s_.substr(start, i_ - start)))), nvars());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string id = s_.substr(start, i_ - start);
      for (int v = 0; v < nvars(); ++v)
        if (o_.variables[static_cast<size_t>(v)] == id) return Poly::var(v, nvars());
      if (id == "h") {
        if (!o_.allow_h) fail_at(start, "h is not permitted here");
        return Poly::constant(Scalar::h(), nvars());
      }
      fail_at(start, "unknown identifier '" + id + "'");
    }
    if (c == '(') {
      ++i_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const ParseOptions& o_;
  size_t i_ = 0;
};

std::string trim(const std::string& s, size_t& offset) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset = b;
  return s.substr(b, e - b);
}

struct Assignment {
  std::string name;
  Poly value;
  int line;
};

// "name = expr" lines with '#' comments.
std::vector<Assignment> assignments(const std::string& text, const std::vector<std::string>& names, bool allow_h) {
  std::vector<Assignment> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    size_t off = 0;
    if (trim(raw, off).empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'name = polynomial'", line, static_cast<int>(off) + 1);
    size_t noff = 0;
    const std::string name = trim(raw.substr(0, eq), noff);
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw ParseError("unknown component '" + name + "'", line, static_cast<int>(noff) + 1);
    for (const auto& a : out)
      if (a.name == name) throw ParseError("duplicate component '" + name + "'", line, static_cast<int>(noff) + 1);
    ParseOptions o;
    o.allow_h = allow_h;
    o.line = line;
    o.column = static_cast<int>(eq) + 2;
    out.push_back({name, parse_poly(raw.substr(eq + 1), o), line});
  }
  return out;
}

nlohmann::json to_json(const Report& r) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Report::List>) {
          nlohmann::json a = nlohmann::json::array();
          for (const auto& e : v) a.push_back(to_json(e));
          return a;
        } else if constexpr (std::is_same_v<T, Report::Object>) {
          nlohmann::json o = nlohmann::json::object();
          for (const auto& [k, e] : v) o[k] = to_json(e);
          return o;
        } else {
          return v;
        }
      },
      r.value());
}

Report from_json(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return Report();
    case nlohmann::json::value_t::boolean: return Report(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
    case nlohmann::json::value_t::number_unsigned: return Report(j.get<long long>());
    case nlohmann::json::value_t::string: return Report(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      Report::List l;
      for (const auto& e : j) l.push_back(from_json(e));
      return Report(std::move(l));
    }
    case nlohmann::json::value_t::object: {
      Report::Object o;
      for (const auto& [k, e] : j.items()) o.emplace(k, from_json(e));
      return Report(std::move(o));
    }
    default: throw InvalidArgument("reports hold no floating-point numbers");
  }
}

}  // namespace

Poly parse_poly(const std::string& text, const ParseOptions& opts) { return Parser(text, opts).parse(); }

Rational parse_rational(const std::string& text) {
  ParseOptions o;
  o.variables.clear();
  o.allow_h = false;
  Poly p = parse_poly(text, o);
  return p.is_zero() ? Rational(0) : p.coeff(Exponent{}).constant();
}

QuadraticBracket parse_bracket(const std::string& text) {
  const std::vector<std::string> names{"y12", "y23", "y31"};
  auto as = assignments(text, names, false);
  std::map<std::string, Poly> got;
  for (const auto& a : as) {
    if (!a.value.is_zero() && !a.value.is_homogeneous(2))
      throw NonQuadratic(a.name + " on line " + std::to_string(a.line) + " is not a homogeneous quadratic");
    got.emplace(a.name, a.value);
  }
  for (const auto& n : names)
    if (!got.count(n)) throw MissingComponent("bracket file has no " + n);
  return QuadraticBracket::from_polys(got["y12"], got["y23"], got["y31"]);
}

Poly parse_cubic(const std::string& text) {
  auto as = assignments(text, {"f"}, false);
  if (as.empty()) throw MissingComponent("cubic file has no f");
  const Poly& f = as.front().value;
  if (!f.is_zero() && !f.is_homogeneous(3)) throw InvalidArgument("f is not a homogeneous cubic");
  return f;
}

RationalMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  size_t start = 0;
  std::vector<Rational> row;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',' && text[i] != ';') continue;
    ParseOptions o;
    o.variables.clear();
    o.allow_h = false;
    o.column = static_cast<int>(start) + 1;
    const std::string cell = text.substr(start, i - start);
    size_t off = 0;
    if (trim(cell, off).empty()) throw ParseError("empty matrix entry", 1, static_cast<int>(start) + 1);
    Poly p = parse_poly(cell, o);
    row.push_back(p.is_zero() ? Rational(0) : p.coeff(Exponent{}).constant());
    if (i == text.size() || text[i] == ';') {
      if (!rows.empty() && rows.front().size() != row.size())
        throw ParseError("ragged matrix row", 1, static_cast<int>(start) + 1);
      rows.push_back(std::move(row));
      row.clear();
    }
    start = i + 1;
  }
  RationalMatrix m(rows.size(), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

CaseParams parse_params(const std::vector<std::string>& items) {
  CaseParams out;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value in '" + it + "'", 1, 1);
    ParseOptions o;
    o.variables.clear();
    o.allow_h = false;
    o.column = static_cast<int>(eq) + 2;
    Poly p = parse_poly(it.substr(eq + 1), o);
    out[it.substr(0, eq)] = p.is_zero() ? Rational(0) : p.coeff(Exponent{}).constant();
  }
  return out;
}

std::string print(const Poly& p) { return p.str(); }
std::string print(const Scalar& s) { return s.str(); }
std::string print(const OpElement& e) { return e.str(); }

std::string print_bracket(const QuadraticBracket& b) {
  return "y12 = " + b.y(0, 1).str() + "\ny23 = " + b.y(1, 2).str() + "\ny31 = " + b.y(2, 0).str() + "\n";
}

std::string print_cubic(const Poly& f) { return "f = " + f.str() + "\n"; }

std::string print_matrix(const RationalMatrix& m) {
  std::string out;
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ";";
    for (size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).get_str();
  }
  return out;
}

namespace {

NormalForm rule_form(const Tensor2& t) {
  NormalForm nf;
  for (uint32_t w = 0; w < 9; ++w)
    if (!t[w].is_zero()) nf[word_from_index(w, 2)] = t[w];
  return nf;
}

}  // namespace

std::string print(const RewritingSystem& rs) {
  std::string out;
  for (int m = 0; m < 3; ++m)
    out += word_str(word_from_index(static_cast<uint32_t>(RewritingSystem::kLeft[static_cast<size_t>(m)]), 2)) +
           " = " + to_string(rule_form(rs.rule(m))) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report& Report::operator[](const std::string& key) {
  if (std::holds_alternative<std::monostate>(v_)) v_ = Object{};
  if (!std::holds_alternative<Object>(v_)) throw InvalidArgument("report is not an object");
  return std::get<Object>(v_)[key];
}

const Report& Report::at(const std::string& key) const {
  if (!std::holds_alternative<Object>(v_)) throw InvalidArgument("report is not an object");
  const auto& o = std::get<Object>(v_);
  auto it = o.find(key);
  if (it == o.end()) throw InvalidArgument("report has no field " + key);
  return it->second;
}

bool Report::contains(const std::string& key) const {
  return std::holds_alternative<Object>(v_) && std::get<Object>(v_).count(key) > 0;
}

void Report::push_back(Report r) {
  if (std::holds_alternative<std::monostate>(v_)) v_ = List{};
  if (!std::holds_alternative<List>(v_)) throw InvalidArgument("report is not a list");
  std::get<List>(v_).push_back(std::move(r));
}

std::string Report::dump(int indent) const { return to_json(*this).dump(indent); }

Report Report::parse(const std::string& text) {
  try {
    return from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1, col = 1;
    for (size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed report", line, col);
  }
}

Report to_report(const Scalar& s) { return Report(s.str()); }
Report to_report(const Poly& p) { return Report(p.str()); }

Report to_report(const RationalMatrix& m) {
  Report::List rows;
  for (size_t i = 0; i < m.rows(); ++i) {
    Report::List r;
    for (size_t j = 0; j < m.cols(); ++j) r.emplace_back(m(i, j).get_str());
    rows.emplace_back(std::move(r));
  }
  return Report(std::move(rows));
}

Report to_report(const RewritingSystem& rs) {
  Report::List rules;
  for (int m = 0; m < 3; ++m) {
    Report r = Report::object();
    r["lhs"] = word_str(word_from_index(static_cast<uint32_t>(RewritingSystem::kLeft[static_cast<size_t>(m)]), 2));
    r["rhs"] = to_string(rule_form(rs.rule(m)));
    rules.push_back(std::move(r));
  }
  return Report(std::move(rules));
}

Report to_report(const NormalForm& nf) { return Report(to_string(nf)); }

}  // namespace qpb
