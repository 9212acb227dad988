#include "apolar/cli.hpp"

#include "apolar/errors.hpp"
#include "apolar/report.hpp"
#include "apolar/sampling.hpp"
#include "apolar/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace apolar::cli {

namespace {

struct Options {
  std::string text;
  std::string file;
  std::string format = "text";
  std::string powers = "divided";
  int n = -1;
  int d = -1;
  int random_degree = -1;
  std::uint64_t seed = 20240611;
  bool json = false;
  bool naive_m_r = false;
};

std::string read_input(const Options& o) {
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw DomainError("cannot read " + o.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  if (o.text.empty()) throw DomainError("no input: pass a polynomial or --file");
  return o.text;
}

Socle load_socle(const Options& o) {
  if (o.random_degree >= 0) {
    if (o.n < 1) throw DomainError("--random needs --n");
    Rng rng(o.seed);
    return Socle(random_form(o.n, o.random_degree, rng));
  }
  const PowerBasis basis = o.powers == "ordinary" ? PowerBasis::ordinary : PowerBasis::divided;
  std::optional<int> n;
  if (o.n >= 0) n = o.n;
  return Socle::parse(read_input(o), n, basis);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_analyze(const Options& o, std::ostream& out) {
  const AnalysisReport r = analyze(load_socle(o));
  if (o.format == "json") print_json(out, to_json(r));
  else out << to_text(r);
  return kExitOk;
}

int cmd_betti(const Options& o, std::ostream& out) {
  const BettiTable t = koszul_betti(load_socle(o));
  if (o.format == "json") print_json(out, to_json(t));
  else out << to_text(t);
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Socle g = load_socle(o);
  if (!catalog_supported(g.n(), g.d()))
    throw EnvelopeError("classification covers n = 1 with d <= 12 and n = 2 with d <= 4");
  const StratumLabel label = classify(g);
  if (o.format == "json") {
    Json j{{"socle", to_text(g.form())}, {"n", g.n()}, {"d", g.d()}, {"stratum", label.name()}};
    if (g.n() == 1) j["waring"] = to_json(binary_waring(g));
    print_json(out, j);
  } else {
    out << label.name() << '\n';
  }
  return kExitOk;
}

Rational json_rational(const Json& j) {
  if (j.is_number_integer()) return make_rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw DomainError("expected an integer or a \"p/q\" string");
}

int cmd_synth(const Options& o, std::ostream& out) {
  Json spec;
  try {
    spec = Json::parse(read_input(o));
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), 1, static_cast<int>(e.byte));
  }
  if (!spec.is_object() || !spec.contains("points") || !spec.contains("degree"))
    throw DomainError("synth spec needs \"points\" and \"degree\"");
  const int d = spec.at("degree").get<int>();
  if (d < 1) throw DomainError("degree must be positive");
  std::vector<Form> forms;
  for (const Json& p : spec.at("points")) {
    Vector coords;
    for (const Json& c : p) coords.push_back(json_rational(c));
    forms.push_back(Form::linear(coords));
  }
  if (forms.empty()) throw DomainError("no points");
  Vector weights;
  if (spec.contains("weights")) {
    for (const Json& w : spec.at("weights")) weights.push_back(json_rational(w));
  } else {
    weights.assign(forms.size(), Rational(1));
  }
  if (weights.size() != forms.size()) throw DomainError("points and weights differ in length");
  for (const Form& f : forms)
    if (f.n() != forms.front().n()) throw DomainError("points differ in dimension");
  const Socle g = synth_power_sum(forms, weights, d);
  if (o.format == "json") print_json(out, {{"socle", to_text(g.form())}, {"n", g.n()}, {"d", g.d()}});
  else out << to_text(g.form()) << '\n';
  return kExitOk;
}

int cmd_zdiagram(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.d < 1) throw DomainError("zdiagram needs --n and --d");
  if (!zdiagram_supported(o.n, o.d))
    throw EnvelopeError("charge diagrams cover n = 1 with d <= 12 and n = 2 with d <= 4");
  const auto nodes = zdiagram(o.n, o.d);
  if (o.format == "json") print_json(out, to_json(nodes));
  else if (o.format == "svg") out << to_svg(nodes, o.n, o.d);
  else out << zdiagram_text(nodes);
  return kExitOk;
}

int cmd_mrtable(const Options& o, std::ostream& out) {
  const MrTable t = mr_table();
  if (o.format == "json") print_json(out, to_json(t));
  else out << to_text(t);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.seed = o.seed;
  so.naive_m_r = o.naive_m_r;
  const auto rows = run_paper_suite(so);
  const auto summaries = summarize(rows);
  const bool ok = std::all_of(summaries.begin(), summaries.end(), [](const auto& s) { return s.passed(); });
  if (o.json || o.format == "json") {
    Json criteria = Json::array();
    for (const auto& s : summaries) {
      Json checks = Json::array();
      for (const auto& r : rows) {
        if (r.criterion != s.criterion) continue;
        checks.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"passed", r.passed}});
      }
      criteria.push_back({{"criterion", s.criterion},
                          {"title", s.title},
                          {"passed", s.passed()},
                          {"checks", checks}});
    }
    print_json(out, {{"passed", ok}, {"criteria", criteria}});
  } else {
    for (const auto& s : summaries) {
      out << (s.passed() ? "PASS " : "FAIL ") << s.criterion << ' ' << s.title << " ("
          << s.rows - s.failed << '/' << s.rows << ")\n";
      for (const auto& r : rows) {
        if (r.criterion != s.criterion || r.passed) continue;
        out << "    " << r.name << ": expected " << r.expected << ", got " << r.actual << '\n';
      }
    }
  }
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Apolar ideals, betti tables and charges of socles on projective space", "apolar"};
  app.require_subcommand(1);
  Options o;

  const auto formats = CLI::IsMember({"text", "json"});
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("polynomial", o.text, "socle in the polynomial grammar, e.g. \"y0^3 + y1^3\"");
    sub->add_option("--file", o.file, "read the socle from a file");
    sub->add_option("--n", o.n, "number of variables minus one (default: largest index seen)");
    sub->add_option("--powers", o.powers, "how monomial coefficients are read")
        ->check(CLI::IsMember({"divided", "ordinary"}));
    sub->add_option("--format", o.format, "output format")->check(formats);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one socle");
  add_input(analyze_cmd);
  analyze_cmd->add_option("--random", o.random_degree, "analyze a seeded random socle of this degree");
  analyze_cmd->add_option("--seed", o.seed, "seed for --random");

  auto* betti_cmd = app.add_subcommand("betti", "graded betti table");
  add_input(betti_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "stratum label");
  add_input(classify_cmd);
  classify_cmd->add_option("--random", o.random_degree, "classify a seeded random socle of this degree");
  classify_cmd->add_option("--seed", o.seed, "seed for --random");

  auto* synth_cmd = app.add_subcommand("synth", "power sum from {points, weights, degree} JSON");
  synth_cmd->add_option("spec", o.text, "JSON spec");
  synth_cmd->add_option("--file", o.file, "read the spec from a file");
  synth_cmd->add_option("--format", o.format, "output format")->check(formats);

  auto* zd_cmd = app.add_subcommand("zdiagram", "charge diagram nodes");
  zd_cmd->add_option("--n", o.n, "projective dimension")->required();
  zd_cmd->add_option("--d", o.d, "socle degree")->required();
  zd_cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "svg"}));

  auto* mr_cmd = app.add_subcommand("mrtable", "maximal chi' of semistable sheaves by rank");
  mr_cmd->add_option("--format", o.format, "output format")->check(formats);

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the acceptance suite");
  verify_cmd->add_flag("--json", o.json, "machine-readable results");
  verify_cmd->add_option("--format", o.format, "output format")->check(formats);
  verify_cmd->add_option("--seed", o.seed, "seed for sampled checks");
  verify_cmd->add_flag("--naive-m-r", o.naive_m_r)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*betti_cmd) return cmd_betti(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*synth_cmd) return cmd_synth(o, out);
    if (*zd_cmd) return cmd_zdiagram(o, out);
    if (*mr_cmd) return cmd_mrtable(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const EnvelopeError& e) {
    err << "envelope: " << e.what() << '\n';
    return kExitEnvelope;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BoundaryError& e) {
    err << "boundary: " << e.what() << '\n';
    return kExitEnvelope;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace apolar::cli
