#include "apolar/apolarity.hpp"
#include "apolar/cli.hpp"
#include "apolar/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace apolar;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("analyze") {
  const Result ok = invoke({"analyze", "y0^3+y1^3", "--format", "json"});
  REQUIRE(ok.code == cli::kExitOk);
  const Json j = Json::parse(ok.out);
  CHECK(j.at("hilbert_function") == Json::array({1, 2, 2, 1}));
  CHECK(j.at("stratum").get<std::string>().rfind("a=2", 0) == 0);
  CHECK(invoke({"analyze", "y0^3+y1^3", "--format", "json"}).out == ok.out);

  const Result zero = invoke({"analyze", "0"});
  CHECK(zero.code == cli::kExitInput);
  CHECK(zero.err.find("zero") != std::string::npos);

  const Result bad = invoke({"analyze", "y0^2 + y1"});
  CHECK(bad.code == cli::kExitInput);
  CHECK(bad.err.find("column") != std::string::npos);

  const Result big = invoke({"analyze", "y0^7 + y1^7"});
  CHECK(big.code == cli::kExitEnvelope);
  CHECK(big.err.find("d <= 6") != std::string::npos);

  CHECK(invoke({"analyze"}).code == cli::kExitInput);
  CHECK(invoke({"analyze", "y0^2", "--format", "xml"}).code == cli::kExitInput);
  CHECK(invoke({"frobnicate"}).code == cli::kExitInput);
}

TEST_CASE("analyze reads files and ordinary powers") {
  const std::string path = "cli_test_quartic.txt";
  {
    std::ofstream f(path);
    f << "3*y0^4 - y1^4 + 2*y2^4\n + y0*y1*y2^2 - 5*y0^2*y1*y2\n + 7*y1^3*y2 + y0*y1^3\n";
  }
  const Result r = invoke({"analyze", "--file", path, "--format", "json"});
  std::remove(path.c_str());
  REQUIRE(r.code == cli::kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("hilbert_function") == Json::array({1, 3, 6, 3, 1}));
  CHECK(j.at("stratum") == "open/semistable");

  const Result o = invoke({"analyze", "y0^2*y1", "--powers", "ordinary", "--format", "json"});
  REQUIRE(o.code == cli::kExitOk);
  CHECK(Json::parse(o.out).at("socle") == "2*y0^2*y1");
  CHECK(invoke({"analyze", "--file", "no/such/file"}).code == cli::kExitInput);
}

TEST_CASE("seeded sampling") {
  const Result a = invoke({"classify", "--random", "4", "--n", "2", "--seed", "5"});
  const Result b = invoke({"classify", "--random", "4", "--n", "2", "--seed", "5"});
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  CHECK(trim(a.out) == "open/semistable");
  CHECK(invoke({"classify", "y0^3", "--n", "3"}).code == cli::kExitEnvelope);
}

TEST_CASE("synth") {
  const Result two = invoke({"synth", R"({"points": [[1, 0], [0, 1]], "weights": [1, 1], "degree": 3})"});
  REQUIRE(two.code == cli::kExitOk);
  CHECK(trim(two.out) == "y0^3 + y1^3");

  // x^3 + y^3 written two ways as a sum of cubes gives the same canonical text
  const Result alt = invoke({"synth", R"({"points": [[1, 0], [0, 1], [1, 1], [1, 1]], "weights": [1, 1, "1/2", "-1/2"], "degree": 3})"});
  CHECK(alt.out == two.out);

  const Result three = invoke({"synth", R"({"points": [[1,0,0],[0,1,0],[0,0,1]], "degree": 4})"});
  REQUIRE(three.code == cli::kExitOk);
  const Result analyzed = invoke({"analyze", trim(three.out), "--format", "json"});
  CHECK(Json::parse(analyzed.out).at("hilbert_function") == Json::array({1, 3, 3, 3, 1}));

  // round trip: printed text parses back to the same socle
  const Result odd = invoke({"synth", R"({"points": [[2, "-1/3"], [1, 5]], "weights": ["3/4", -2], "degree": 5})"});
  REQUIRE(odd.code == cli::kExitOk);
  CHECK(to_text(Socle::parse(trim(odd.out)).form()) == trim(odd.out));

  CHECK(invoke({"synth", R"({"points": [[1, 0], [1, 0]], "weights": [1, -1], "degree": 2})"}).code == cli::kExitInput);
  CHECK(invoke({"synth", "{not json"}).code == cli::kExitInput);
  CHECK(invoke({"synth", R"({"points": [[1, 0]], "weights": [1, 2], "degree": 2})"}).code == cli::kExitInput);
}

TEST_CASE("betti, zdiagram and mrtable") {
  const Result b = invoke({"betti", "y0^2+y1^2+y2^2+y3^2", "--format", "json"});
  REQUIRE(b.code == cli::kExitOk);
  const BettiTable t = betti_from_json(Json::parse(b.out));
  CHECK(t.at(1, 2) == 9);
  CHECK(t.at(2, 3) == 16);
  CHECK(t.at(3, 4) == 9);
  CHECK(invoke({"betti", "y0^2+y1^2+y2^2+y3^2"}).out.find("16") != std::string::npos);
  const Result z = invoke({"zdiagram", "--n", "2", "--d", "2", "--format", "svg"});
  REQUIRE(z.code == cli::kExitOk);
  CHECK(z.out.rfind("<svg", 0) == 0);
  CHECK(invoke({"zdiagram", "--n", "2", "--d", "9"}).code == cli::kExitEnvelope);
  CHECK(invoke({"zdiagram", "--n", "2"}).code == cli::kExitInput);
  const Result m = invoke({"mrtable", "--format", "json"});
  REQUIRE(m.code == cli::kExitOk);
  CHECK(Json::parse(m.out).dump().find("7/2") != std::string::npos);
}

TEST_CASE("verify-paper") {
  const Result ok = invoke({"verify-paper", "--json"});
  CHECK(ok.code == cli::kExitOk);
  const Json j = Json::parse(ok.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("criteria").size() == 13u);

  const Result tampered = invoke({"verify-paper", "--naive-m-r"});
  CHECK(tampered.code == cli::kExitVerification);
  CHECK(tampered.out.find("m3(7/2)=0") != std::string::npos);
  CHECK(tampered.out.find("FAIL 9") != std::string::npos);
}
