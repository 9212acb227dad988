#include "apolar/report.hpp"

#include "apolar/errors.hpp"

#include <iomanip>
#include <sstream>

namespace apolar {

AnalysisReport analyze(const Socle& g) {
  AnalysisReport r;
  r.socle = to_text(g.form());
  r.n = g.n();
  r.d = g.d();
  r.betti = koszul_betti(g);
  const GorensteinDiagnostics diag = gorenstein_check(g);
  r.hilbert_function = diag.h;
  r.top_is_one = diag.top_is_one;
  r.palindromic = diag.palindromic;
  r.catalecticants_symmetric = diag.catalecticants_symmetric;
  if (hf_from_betti(r.betti) != r.hilbert_function)
    r.warnings.push_back("Hilbert function from the betti table disagrees with catalecticant ranks");
  if (catalog_supported(g.n(), g.d())) {
    r.stratum = classify(g).name();
  } else {
    r.warnings.push_back("no stratum catalog for n = " + std::to_string(g.n()) + ", d = " + std::to_string(g.d()));
  }
  r.s = evaluation_point(g.d());
  r.e = (g.d() + 1) / 2;
  r.line_charge = charge(line_bundle(g.n(), r.e), r.s);
  if (g.d() % 2 == 0) r.cone_charge = cone_charge(r.betti, r.s);
  return r;
}

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("expected a rational string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

namespace {

Json point_json(const ChargePoint& p) { return {{"x", rational_json(p.x)}, {"y", rational_json(p.y)}}; }

ChargePoint point_from_json(const Json& j) {
  return {rational_from_json(j.at("x")), rational_from_json(j.at("y"))};
}

std::string status_name(NodeStatus s) { return s == NodeStatus::red ? "red" : "black"; }

}  // namespace

Json to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [key, b] : t.entries()) entries.push_back({key.first, key.second, b});
  return {{"n", t.n()}, {"d", t.d()}, {"entries", entries}};
}

BettiTable betti_from_json(const Json& j) {
  BettiTable t(j.at("n").get<int>(), j.at("d").get<int>());
  for (const auto& e : j.at("entries")) t.set(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
  return t;
}

Json to_json(const AnalysisReport& r) {
  Json j;
  j["socle"] = r.socle;
  j["n"] = r.n;
  j["d"] = r.d;
  j["hilbert_function"] = r.hilbert_function;
  j["betti"] = to_json(r.betti);
  j["gorenstein"] = {{"top_is_one", r.top_is_one},
                     {"palindromic", r.palindromic},
                     {"catalecticants_symmetric", r.catalecticants_symmetric}};
  j["stratum"] = r.stratum ? Json(*r.stratum) : Json(nullptr);
  j["charge"] = {{"s", rational_json(r.s)},
                 {"e", r.e},
                 {"line", point_json(r.line_charge)},
                 {"cone", r.cone_charge ? point_json(*r.cone_charge) : Json(nullptr)}};
  j["warnings"] = r.warnings;
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  r.socle = j.at("socle").get<std::string>();
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.hilbert_function = j.at("hilbert_function").get<HilbertFunction>();
  r.betti = betti_from_json(j.at("betti"));
  const Json& g = j.at("gorenstein");
  r.top_is_one = g.at("top_is_one").get<bool>();
  r.palindromic = g.at("palindromic").get<bool>();
  r.catalecticants_symmetric = g.at("catalecticants_symmetric").get<bool>();
  if (!j.at("stratum").is_null()) r.stratum = j.at("stratum").get<std::string>();
  const Json& c = j.at("charge");
  r.s = rational_from_json(c.at("s"));
  r.e = c.at("e").get<int>();
  r.line_charge = point_from_json(c.at("line"));
  if (!c.at("cone").is_null()) r.cone_charge = point_from_json(c.at("cone"));
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "socle: " << r.socle << "  (n = " << r.n << ", d = " << r.d << ")\n";
  out << "Hilbert function: [";
  for (std::size_t i = 0; i < r.hilbert_function.size(); ++i) out << (i ? " " : "") << r.hilbert_function[i];
  out << "]\n";
  out << "Gorenstein: top " << (r.top_is_one ? "ok" : "FAIL") << ", palindromic "
      << (r.palindromic ? "ok" : "FAIL") << ", symmetric catalecticants "
      << (r.catalecticants_symmetric ? "ok" : "FAIL") << "\n";
  out << "betti table (rows j - i):\n" << to_text(r.betti);
  out << "stratum: " << (r.stratum ? *r.stratum : "(no catalog)") << "\n";
  out << "Z at s = " << to_string(r.s) << " of O(" << r.e << "): (" << to_string(r.line_charge.x) << ", "
      << to_string(r.line_charge.y) << ")\n";
  if (r.cone_charge)
    out << "cone charge: (" << to_string(r.cone_charge->x) << ", " << to_string(r.cone_charge->y) << ")\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

Json to_json(const std::vector<ZNode>& nodes) {
  Json out = Json::array();
  for (const auto& node : nodes) {
    Json j = {{"name", node.name},
              {"x", rational_json(node.z.x)},
              {"y", rational_json(node.z.y)},
              {"kind", node.reference ? "reference" : "node"}};
    if (!node.reference) {
      j["status"] = status_name(node.verdict.status);
      j["reason"] = node.verdict.status == NodeStatus::red ? Json(static_cast<int>(node.verdict.reason)) : Json(nullptr);
      j["detail"] = node.verdict.detail;
    }
    out.push_back(j);
  }
  return out;
}

std::string zdiagram_text(const std::vector<ZNode>& nodes) {
  std::size_t width = 4;
  for (const auto& node : nodes) width = std::max(width, node.name.size());
  std::ostringstream out;
  for (const auto& node : nodes) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << node.name;
    std::string coords = "(" + to_string(node.z.x) + ", " + to_string(node.z.y) + ")";
    out << std::setw(16) << coords;
    if (node.reference) {
      out << "reference";
    } else if (node.verdict.status == NodeStatus::red) {
      out << "red (" << static_cast<int>(node.verdict.reason) << ") " << node.verdict.detail;
    } else {
      out << "black";
    }
    out << "\n";
  }
  return out.str();
}

Json to_json(const MrTable& t) {
  Json columns = Json::array();
  for (const auto& c : t.columns) columns.push_back(rational_json(c));
  Json rows = Json::array();
  for (long r : t.rows) {
    Json cells = Json::array();
    for (const auto& c : t.columns) {
      const MrCell* cell = t.find(r, c);
      cells.push_back(cell ? Json{{"m", rational_json(cell->dlp)}, {"naive", rational_json(cell->naive)}}
                           : Json(nullptr));
    }
    rows.push_back({{"r", r}, {"cells", cells}});
  }
  return {{"columns", columns}, {"rows", rows}};
}

std::string to_text(const MrTable& t) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "r\\x'";
  for (const auto& c : t.columns) out << std::setw(6) << to_string(c);
  out << "\n";
  for (long r : t.rows) {
    out << std::setw(6) << r;
    for (const auto& c : t.columns) {
      const MrCell* cell = t.find(r, c);
      out << std::setw(6) << (cell ? to_string(cell->dlp) : "");
    }
    out << "\n";
  }
  return out.str();
}

Json to_json(const WaringReport& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  j["a"] = w.a;
  j["F_a"] = to_text(w.fa, 'x');
  Json pts = Json::array();
  for (std::size_t i = 0; i < w.points.size(); ++i)
    pts.push_back({{"point", {rational_json(w.points[i][0]), rational_json(w.points[i][1])}},
                   {"weight", rational_json(w.weights.at(i))}});
  j["points"] = pts;
  j["partition"] = w.partition;
  Json roots = Json::array();
  for (const auto& [p, k] : w.rational_roots)
    roots.push_back({{"point", {rational_json(p[0]), rational_json(p[1])}}, {"multiplicity", k}});
  j["rational_roots"] = roots;
  return j;
}

}  // namespace apolar
