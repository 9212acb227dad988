#pragma once

#include "apolar/plane_sheaves.hpp"
#include "apolar/strata.hpp"
#include "apolar/zdiagram.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace apolar {

using Json = nlohmann::ordered_json;

struct AnalysisReport {
  std::string socle;  ///< canonical text, divided-power coefficients
  int n = 0;
  int d = 0;
  HilbertFunction hilbert_function;
  BettiTable betti;
  bool top_is_one = false;
  bool palindromic = false;
  bool catalecticants_symmetric = false;
  std::optional<std::string> stratum;
  Rational s;                     ///< evaluation point
  int e = 0;                      ///< ceil(d/2)
  ChargePoint line_charge;        ///< Z_s(O(e))
  std::optional<ChargePoint> cone_charge;  ///< present for even d
  std::vector<std::string> warnings;

  bool operator==(const AnalysisReport&) const = default;
};

/// Throws EnvelopeError outside the betti envelope.
AnalysisReport analyze(const Socle& g);

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

Json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const Json& j);
std::string to_text(const AnalysisReport& r);

Json to_json(const std::vector<ZNode>& nodes);
std::string zdiagram_text(const std::vector<ZNode>& nodes);

Json to_json(const MrTable& t);
std::string to_text(const MrTable& t);

Json to_json(const WaringReport& w);

}  // namespace apolar
