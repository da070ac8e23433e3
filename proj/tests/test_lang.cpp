#include <doctest.h>

#include <filesystem>
#include <random>

#include "qpb/errors.hpp"
#include "qpb/lang.hpp"
#include "qpb/orbit.hpp"
#include "qpb/quantize.hpp"
#include "support.hpp"

using namespace qpb;
using namespace qpb::testing;

namespace {

const Scalar h = Scalar::h();

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(0, 3), n(1, 5), kind(0, 3);
  Poly p;
  const int terms = n(rng);
  for (int t = 0; t < terms; ++t) {
    Scalar c(random_rational(rng, 9));
    if (kind(rng) == 0) c = c * h + Scalar(random_rational(rng));
    if (kind(rng) == 0) c = c / (Scalar(1) + Scalar(random_rational(rng)) * h);
    p.add_term({e(rng), e(rng), e(rng)}, c);
  }
  return p;
}

int error_column(const std::string& text, const ParseOptions& opts = {}) {
  try {
    parse_poly(text, opts);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_poly") {
  CHECK(parse_poly("x1^2*x3 - 3/2*x2^3") == X() * X() * Z() - Scalar::frac(3, 2) * Y().pow(3));
  CHECK(parse_poly("x1*(x2 + x3)") == X() * Y() + X() * Z());
  CHECK(parse_poly("  -x1 +x2") == Y() - X());
  CHECK(parse_poly("(1 - h)/(1 + h)*x1") == ((Scalar(1) - h) / (Scalar(1) + h)) * X());
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("x1/2") == Scalar::frac(1, 2) * X());
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_column("x1 + x4") == 6);
  CHECK(error_column("x1 +") == 5);
  CHECK(error_column("x1 * * x2") == 6);
  CHECK(error_column("x1 / x2") == 6);
  CHECK(error_column("x1 / 0") == 6);
  CHECK(error_column("(x1 + x2") == 9);
  CHECK(error_column("x1 x2") == 4);
  ParseOptions no_h;
  no_h.allow_h = false;
  CHECK(error_column("h*x1", no_h) == 1);
  try {
    parse_poly("x1 + x4");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unknown identifier 'x4'") != std::string::npos);
    CHECK(e.line() == 1);
  }
}

TEST_CASE("parser rejects random mutations with a position") {
  std::mt19937 rng(79);
  const std::string junk = "+-*/^()x1h$ ";
  for (int t = 0; t < 200; ++t) {
    std::string s = print(random_poly(rng));
    std::uniform_int_distribution<size_t> pos(0, s.size()), ch(0, junk.size() - 1);
    s.insert(pos(rng), 1, junk[ch(rng)]);
    try {
      parse_poly(s);
    } catch (const ParseError& e) {
      CHECK(e.column() >= 1);
      CHECK(e.column() <= static_cast<int>(s.size()) + 1);
    } catch (const Error&) {
      FAIL("non-parse error for " << s);
    }
  }
}

TEST_CASE("poly round trip") {
  std::mt19937 rng(83);
  for (int t = 0; t < 100; ++t) {
    Poly p = random_poly(rng);
    CAPTURE(print(p));
    CHECK(parse_poly(print(p)) == p);
  }
}

TEST_CASE("scalar printing") {
  CHECK(print((Scalar(1) - h) / (Scalar(1) + h)) == "(1 - h)/(1 + h)");
  CHECK(print(Scalar::frac(-3, 4)) == "-3/4");
  CHECK(print(h * h) == "h^2");
  std::mt19937 rng(89);
  for (int t = 0; t < 50; ++t) {
    Scalar s = (Scalar(random_rational(rng)) + Scalar(random_rational(rng)) * h) /
               (Scalar(1) + Scalar(random_rational(rng)) * h * h);
    Poly back = parse_poly(print(s));
    CHECK(back == Poly::constant(s));
  }
}

TEST_CASE("bracket files") {
  auto da = parse_bracket(read_file(data_path("da.bracket")));
  CHECK(da == from_case(CaseId::da, Poly(), {{"lambda1", 1}, {"lambda2", 2}}));
  CHECK_THROWS_AS(parse_bracket(read_file(data_path("missing.bracket"))), MissingComponent);
  CHECK_THROWS_AS(parse_bracket(read_file(data_path("cubic.bracket"))), NonQuadratic);
  CHECK_THROWS_AS(parse_bracket(read_file(data_path("hbar.bracket"))), ParseError);
  try {
    parse_bracket(read_file(data_path("syntax.bracket")));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(parse_bracket("y12 = 0\ny12 = 0\ny23 = 0\ny31 = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_bracket("y13 = 0\n"), ParseError);
  CHECK_THROWS_AS(read_file(data_path("no_such_file")), InvalidArgument);
}

TEST_CASE("golden files round trip byte for byte") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("golden"))) {
    const std::string text = read_file(entry.path().string());
    CAPTURE(entry.path().string());
    if (entry.path().extension() == ".bracket") CHECK(print_bracket(parse_bracket(text)) == text);
    else CHECK(print_cubic(parse_cubic(text)) == text);
    ++seen;
  }
  CHECK(seen == 16);
  for (const auto& f : seven_families())
    CHECK(parse_bracket(read_file(data_path("golden/" + to_string(f.id) + ".bracket"))) == build(f));
  CHECK(parse_cubic(read_file(data_path("golden/orbit8.cubic"))) == orbit_representative(8));
}

TEST_CASE("cubic, matrix and params") {
  CHECK(parse_cubic(read_file(data_path("orbit5.cubic"))) == orbit_representative(5));
  CHECK_THROWS_AS(parse_cubic(read_file(data_path("notcubic.cubic"))), InvalidArgument);
  RationalMatrix m{{1, 0, 0}, {0, Rational(1, 2), 0}, {0, 0, -3}};
  CHECK(print_matrix(m) == "1,0,0;0,1/2,0;0,0,-3");
  CHECK(parse_matrix(print_matrix(m)) == m);
  CHECK_THROWS_AS(parse_matrix("1,2;3"), ParseError);
  auto p = parse_params({"k=2", "c=-1/3"});
  CHECK(p.at("k") == 2);
  CHECK(p.at("c") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_params({"k"}), ParseError);
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
}

TEST_CASE("rewriting system printing") {
  auto rs = triangularize(relations(from_case(CaseId::a, Scalar(2) * X() * Y() * Z())));
  const std::string text = print(rs);
  CHECK(text ==
        "x2*x1 = ((1 - h)/(1 + h))*x1*x2\n"
        "x3*x1 = ((1 + h)/(1 - h))*x1*x3\n"
        "x3*x2 = ((1 - h)/(1 + h))*x2*x3\n");
  CHECK(print(transposition_system()) == "x2*x1 = x1*x2\nx3*x1 = x1*x3\nx3*x2 = x2*x3\n");
}

TEST_CASE("reports") {
  Report r = Report::object();
  r["name"] = "orbit7";
  r["ok"] = true;
  r["dims"] = Report::list();
  for (int d : {3, 6, 10}) r["dims"].push_back(d);
  r["k"] = to_report((Scalar(1) - h) / (Scalar(1) + h));
  r["rules"] = to_report(triangularize(relations(from_case(CaseId::da, Poly(), {{"lambda1", 1}, {"lambda2", 2}}))));
  r["nothing"] = Report();
  const std::string text = r.dump();
  CHECK(Report::parse(text) == r);
  CHECK(Report::parse(text).dump() == text);
  CHECK(r.at("k") == Report("(1 - h)/(1 + h)"));
  CHECK(text.find("\"dims\"") < text.find("\"k\""));
  CHECK(r.contains("ok"));
  CHECK_FALSE(r.contains("missing"));
  CHECK_THROWS(Report::parse("{not json"));
  CHECK(to_report(RationalMatrix::identity(2)).dump(-1) == "[[\"1\",\"0\"],[\"0\",\"1\"]]");
}
