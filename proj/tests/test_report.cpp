#include "apolar/errors.hpp"
#include "apolar/report.hpp"
#include "apolar/sampling.hpp"

#include <doctest.h>

using namespace apolar;

TEST_CASE("reports are internally consistent and round trip through JSON") {
  Rng rng(71);
  for (int k = 0; k < 60; ++k) {
    const int n = 1 + k % 3;
    const int d = 1 + (k / 3) % 4;
    const AnalysisReport r = analyze(Socle(random_form(n, d, rng, -3, 3)));
    CHECK(hf_from_betti(r.betti) == r.hilbert_function);
    CHECK(r.e == (d + 1) / 2);
    CHECK(r.s == evaluation_point(d));
    CHECK(r.cone_charge.has_value() == (d % 2 == 0));
    CHECK(r.stratum.has_value() == catalog_supported(n, d));
    const Json j = to_json(r);
    CHECK(report_from_json(j) == r);
    CHECK(to_json(report_from_json(Json::parse(j.dump()))).dump() == j.dump());
  }
}

TEST_CASE("json output is deterministic") {
  const Socle g = Socle::parse("y0^4 + y1^4 + y2^4 + y0^2*y1*y2");
  CHECK(to_json(analyze(g)).dump() == to_json(analyze(g)).dump());
  CHECK(to_json(zdiagram(2, 3)).dump() == to_json(zdiagram(2, 3)).dump());
  CHECK(to_json(mr_table()).dump() == to_json(mr_table()).dump());
}

TEST_CASE("rationals serialize as p/q strings") {
  CHECK(rational_json(make_rational(-3, 6)) == Json("-1/2"));
  CHECK(rational_json(4) == Json("4"));
  CHECK(rational_from_json(Json("7/21")) == make_rational(1, 3));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), DomainError);
  const BettiTable t = koszul_betti(Socle::parse("y0^2 + y1^2 + y2^2"));
  CHECK(betti_from_json(to_json(t)) == t);
  const std::string dumped = to_json(analyze(Socle::parse("y0^3 + y1^3"))).dump();
  CHECK(dumped.find('.') == std::string::npos);
}

TEST_CASE("binary cubic report") {
  const AnalysisReport r = analyze(Socle::parse("y0^3 + y1^3"));
  CHECK(r.hilbert_function == HilbertFunction{1, 2, 2, 1});
  REQUIRE(r.stratum.has_value());
  CHECK(r.stratum->rfind("a=2", 0) == 0);
  CHECK(r.top_is_one);
  CHECK(r.palindromic);
  CHECK(r.catalecticants_symmetric);
  const std::string text = to_text(r);
  CHECK(text.find("[1 2 2 1]") != std::string::npos);
}

TEST_CASE("table and diagram serializations") {
  const Json mr = to_json(mr_table());
  CHECK(mr.dump().find("\"7/2\"") != std::string::npos);
  CHECK(to_text(mr_table()).find("7/2") != std::string::npos);
  const Json nodes = to_json(zdiagram(2, 1));
  CHECK(nodes.is_array());
  CHECK(zdiagram_text(zdiagram(2, 1)).find("I_p(1)") != std::string::npos);
  const Json w = to_json(binary_waring(Socle::parse("y0^3 + 2*y1^3")));
  CHECK(w.dump().find("rational points") != std::string::npos);
}

TEST_CASE("analysis envelope") {
  CHECK_THROWS_AS(analyze(Socle::parse("y0^7 + y1^7")), EnvelopeError);
}
