#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qpb/bracket.hpp"
#include "qpb/matrix.hpp"
#include "qpb/operator.hpp"
#include "qpb/poly.hpp"
#include "qpb/quantize.hpp"

namespace qpb {

struct ParseOptions {
  std::vector<std::string> variables{"x1", "x2", "x3"};
  bool allow_h = true;
  /// Position of the first character, for text cut out of a larger file.
  int line = 1;
  int column = 1;
};

/// expr := [+|-] term ((+|-) term)*, term := factor ((*|/) factor)*,
/// factor := atom (^ uint)?, atom := integer | identifier | ( expr ).
/// Division is only by x-free expressions. Throws ParseError.
Poly parse_poly(const std::string& text, const ParseOptions& opts = {});
Rational parse_rational(const std::string& text);

/// Lines "y12 = ...", "y23 = ...", "y31 = ..."; '#' starts a comment.
/// Throws ParseError, MissingComponent, NonQuadratic.
QuadraticBracket parse_bracket(const std::string& text);
/// A single line "f = <cubic>".
Poly parse_cubic(const std::string& text);
/// "a,b,c;d,e,f;g,h,i".
RationalMatrix parse_matrix(const std::string& text);
/// "key=value" with a rational value.
CaseParams parse_params(const std::vector<std::string>& items);

std::string print(const Poly& p);
std::string print(const Scalar& s);
std::string print_bracket(const QuadraticBracket& b);
std::string print_cubic(const Poly& f);
std::string print_matrix(const RationalMatrix& m);
/// One rule per line, in the order x2x1, x3x1, x3x2.
std::string print(const RewritingSystem& rs);
std::string print(const OpElement& e);

/// Reads a whole file; throws InvalidArgument if it cannot be opened.
std::string read_file(const std::string& path);

/// Structured report: null, bool, integer, string, list or object. Exact
/// scalars are stored as strings. Objects keep keys sorted.
class Report {
 public:
  using List = std::vector<Report>;
  using Object = std::map<std::string, Report>;
  using Value = std::variant<std::monostate, bool, long long, std::string, List, Object>;

  Report() = default;
  Report(bool b) : v_(b) {}                                  // NOLINT
  Report(int i) : v_(static_cast<long long>(i)) {}           // NOLINT
  Report(long long i) : v_(i) {}                             // NOLINT
  Report(size_t i) : v_(static_cast<long long>(i)) {}        // NOLINT
  Report(std::string s) : v_(std::move(s)) {}                // NOLINT
  Report(const char* s) : v_(std::string(s)) {}              // NOLINT
  Report(List l) : v_(std::move(l)) {}                       // NOLINT
  Report(Object o) : v_(std::move(o)) {}                     // NOLINT

  static Report object() { return Report(Object{}); }
  static Report list() { return Report(List{}); }

  const Value& value() const { return v_; }
  /// Object member access; converts a null report to an object.
  Report& operator[](const std::string& key);
  const Report& at(const std::string& key) const;
  void push_back(Report r);
  bool contains(const std::string& key) const;

  std::string dump(int indent = 2) const;
  static Report parse(const std::string& text);
  friend bool operator==(const Report&, const Report&) = default;

 private:
  Value v_;
};

Report to_report(const Scalar& s);
Report to_report(const Poly& p);
Report to_report(const RationalMatrix& m);
Report to_report(const RewritingSystem& rs);
Report to_report(const NormalForm& nf);

}  // namespace qpb
