#include "apolar/errors.hpp"
#include "apolar/zdiagram.hpp"

#include <doctest.h>

#include <map>

using namespace apolar;

namespace {

std::map<std::string, const ZNode*> by_name(const std::vector<ZNode>& nodes) {
  std::map<std::string, const ZNode*> out;
  for (const auto& node : nodes) out[node.name] = &node;
  return out;
}

struct Expected {
  const char* name;
  NodeStatus status;
  RedReason reason;
};

void check_nodes(int d, const std::vector<Expected>& expected) {
  const auto nodes = zdiagram(2, d);
  const auto index = by_name(nodes);
  int candidates = 0;
  for (const auto& node : nodes) candidates += node.reference ? 0 : 1;
  CHECK(candidates == static_cast<int>(expected.size()));
  for (const auto& e : expected) {
    CAPTURE(e.name);
    REQUIRE(index.count(e.name) == 1);
    const ZNode& node = *index.at(e.name);
    CHECK_FALSE(node.reference);
    CHECK(node.verdict.status == e.status);
    CHECK(node.verdict.reason == e.reason);
  }
}

constexpr auto black = NodeStatus::black;
constexpr auto red = NodeStatus::red;

}  // namespace

TEST_CASE("plane diagrams") {
  check_nodes(1, {{"O", red, RedReason::factorization},
                  {"O^2", red, RedReason::factorization},
                  {"I_p(1)", black, RedReason::none}});
  check_nodes(2, {{"O", black, RedReason::none},
                  {"I_p(1)", black, RedReason::none},
                  {"I_pq(1)", red, RedReason::below_slope},
                  {"O_C + C_p", red, RedReason::exceeds_m_r},
                  {"O_l", red, RedReason::exceeds_m_r}});
  check_nodes(3, {{"O(1)", black, RedReason::none},
                  {"I_p(2)", black, RedReason::none},
                  {"I_pq(2)", black, RedReason::none},
                  {"T(-1)", red, RedReason::factorization},
                  {"I_pqr(2)", black, RedReason::none},
                  {"O^3", black, RedReason::none}});
}

TEST_CASE("node charges and verdicts are recomputable") {
  for (const auto& [n, d] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 6}, {2, 1}, {2, 2}, {2, 3}, {2, 4}}) {
    const Rational s = evaluation_point(d);
    const ChargePoint zo = charge(line_bundle(n, 0), s);
    for (const ZNode& node : zdiagram(n, d)) {
      CAPTURE(node.name);
      CHECK(node.z == charge(node.cls, s));
      if (node.reference) continue;
      // rule (1): strictly below the argument of O
      const bool below = compare_arg(node.z, zo) < 0;
      CHECK((node.verdict.reason == RedReason::below_slope) == below);
      if (node.verdict.reason != RedReason::factorization) {
        const NodeVerdict again = judge_node(n, d, node.cls);
        CHECK(again.status == node.verdict.status);
        CHECK(again.reason == node.verdict.reason);
      }
      CHECK((node.verdict.status == NodeStatus::red) == (node.verdict.reason != RedReason::none));
    }
  }
}

TEST_CASE("svg output and support") {
  const auto nodes = zdiagram(2, 2);
  const std::string svg = to_svg(nodes, 2, 2);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  for (const auto& node : nodes) CHECK(svg.find(node.name) != std::string::npos);
  CHECK(zdiagram_supported(1, 12));
  CHECK_FALSE(zdiagram_supported(2, 5));
  CHECK_THROWS_AS(zdiagram(3, 2), DomainError);
}
