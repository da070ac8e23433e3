#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "qpb/lang.hpp"
#include "support.hpp"

using namespace qpb;
using namespace qpb::testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string da = data_path("da.bracket");
const std::string nonjacobi = data_path("nonjacobi.bracket");
const std::string orbit7 = data_path("orbit7.bracket");

}  // namespace

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", data_path("no_such_file")}).code == 2);
}

TEST_CASE("check") {
  auto ok = run({"check", orbit7});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("poisson: true") != std::string::npos);
  CHECK(run({"check", nonjacobi}).code == 1);
  auto bad = run({"check", data_path("syntax.bracket")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(run({"check", data_path("missing.bracket")}).code == 2);
  CHECK(run({"check", data_path("cubic.bracket")}).code == 2);
}

TEST_CASE("classify") {
  auto ok = run({"--json", "classify", da});
  CHECK(ok.code == 0);
  auto r = Report::parse(ok.out);
  CHECK(r.at("label") == Report("da"));
  CHECK(run({"classify", nonjacobi}).code == 1);
}

TEST_CASE("quantize") {
  auto ok = run({"--json", "quantize", orbit7, "--degree", "4"});
  CHECK(ok.code == 0);
  auto r = Report::parse(ok.out);
  CHECK(r.at("confluent") == Report(true));
  CHECK(run({"quantize", nonjacobi, "--degree", "3"}).code == 1);
  CHECK(run({"quantize", orbit7, "--degree", "0"}).code == 2);
}

TEST_CASE("flatness") {
  CHECK(run({"flatness", orbit7, "--degree", "3"}).code == 0);
  auto bad = run({"--json", "flatness", nonjacobi, "--degree", "3"});
  CHECK(bad.code == 1);
  auto r = Report::parse(bad.out);
  CHECK(r.at("W").at("witness_ok") == Report(false));
  CHECK(run({"flatness", orbit7}).code == 2);
}

TEST_CASE("dualize") {
  auto ok = run({"--json", "dualize", da});
  CHECK(ok.code == 0);
  CHECK(Report::parse(ok.out).at("involution") == Report(true));
  CHECK(run({"dualize", data_path("hbar.bracket")}).code == 2);
}

TEST_CASE("orbit") {
  CHECK(run({"orbit", data_path("orbit5.cubic")}).code == 0);
  CHECK(run({"orbit", data_path("orbit8_swapped.cubic"), "--witness", "0,1,0;1,0,0;0,0,1", "--id", "8"}).code == 0);
  CHECK(run({"orbit", data_path("orbit5.cubic"), "--witness", "1,0,0;0,1,0;0,0,1", "--id", "7"}).code == 1);
  CHECK(run({"orbit", data_path("orbit5.cubic"), "--id", "7"}).code == 2);
  CHECK(run({"orbit", data_path("notcubic.cubic")}).code == 2);
}

TEST_CASE("realize") {
  auto ok = run({"--json", "realize", "--case", "orbit7", "--verify", "--independence", "3"});
  CHECK(ok.code == 0);
  CHECK(Report::parse(ok.out).at("verified") == Report(true));
  CHECK(run({"realize", "--case", "orbit7", "--params", "k=1"}).code == 2);
  CHECK(run({"realize", "--case", "orbit11"}).code == 2);
}

TEST_CASE("series10") {
  auto ok = run({"--json", "series10", "--c1", "1", "--c2", "0", "--order", "3"});
  CHECK(ok.code == 0);
  CHECK(Report::parse(ok.out).at("u") == Report("v^3"));
  CHECK(run({"series10", "--order", "1"}).code == 2);
  CHECK(run({"series10", "--c1", "x"}).code == 2);
}
