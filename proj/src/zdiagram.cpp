#include "apolar/zdiagram.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace apolar {

namespace {

TwistComplex shifted_line(int n, int k) { return line_bundle(n, -k).shift(k); }

std::string twist_name(const char* base, int k) {
  return std::string(base) + "(" + std::to_string(k) + ")";
}

struct Spec {
  std::string name;
  TwistComplex cls;
  bool reference = false;
  std::string annotation;
};

std::vector<Spec> specs_for(int n, int d) {
  std::vector<Spec> out;
  const int e = (d + 1) / 2;
  auto ref = [&](std::string name, TwistComplex c) { out.push_back({std::move(name), std::move(c), true, {}}); };
  auto node = [&](std::string name, TwistComplex c, std::string note = {}) {
    out.push_back({std::move(name), std::move(c), false, std::move(note)});
  };
  const TwistComplex o = line_bundle(n, 0);
  if (n == 1) {
    ref("O(-1)[1]", shifted_line(1, 1));
    ref("C_p", point_class(1));
    ref("E(sigma)", cone_class(1, d, e));
    ref(twist_name("O", e), line_bundle(1, e));
    for (int k = 0; k < e; ++k) node(k == 0 ? "O" : twist_name("O", k), line_bundle(1, k));
    return out;
  }
  if (d % 2 == 1) {
    ref("O(-2)[2]", shifted_line(2, 2));
    ref("O(-1)[1]", shifted_line(2, 1));
  } else {
    ref("O(-1)[1]", shifted_line(2, 1));
    ref("O(-2)[2]", shifted_line(2, 2));
  }
  ref("C_p", point_class(2));
  switch (d) {
    case 1:
      ref("O(1)", line_bundle(2, 1));
      node("O", o);
      node("O^2", o.times(2), "every map O^2 -> O(1) factors through I_p(1)");
      node("I_p(1)", ideal_of_points(2, 1, 1));
      break;
    case 2: {
      ref("O(1)", line_bundle(2, 1));
      node("O", o);
      node("I_p(1)", ideal_of_points(2, 1, 1));
      node("I_pq(1)", ideal_of_points(2, 1, 2));
      const TwistComplex line = o + line_bundle(2, -1).shift(1);
      const TwistComplex conic = o + line_bundle(2, -2).shift(1);
      node("O_C + C_p", conic + point_class(2));
      node("O_l", line);
      break;
    }
    case 3:
      ref("O(2)", line_bundle(2, 2));
      node("O(1)", line_bundle(2, 1));
      node("I_p(2)", ideal_of_points(2, 2, 1));
      node("I_pq(2)", ideal_of_points(2, 2, 2));
      node("T(-1)", o.times(3) + shifted_line(2, 1),
           "every map T(-1) -> O(2) factors through I_pqr(2), since c2(T) = 3");
      node("I_pqr(2)", ideal_of_points(2, 2, 3));
      node("O^3", o.times(3));
      break;
    case 4:
      ref("O(2)", line_bundle(2, 2));
      node("O", o);
      node("O(1)", line_bundle(2, 1));
      node("I_p(1)", ideal_of_points(2, 1, 1));
      node("O^2", o.times(2));
      node("I_p(2)", ideal_of_points(2, 2, 1));
      node("I_pq(2)", ideal_of_points(2, 2, 2));
      node("I_pqr(2)", ideal_of_points(2, 2, 3));
      break;
    default:
      break;
  }
  return out;
}

double approx(const Rational& q) { return q.get_d(); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

bool zdiagram_supported(int n, int d) {
  return (n == 1 && d >= 1 && d <= 12) || (n == 2 && d >= 1 && d <= 4);
}

std::vector<ZNode> zdiagram(int n, int d) {
  if (!zdiagram_supported(n, d))
    throw DomainError("no charge diagram for n = " + std::to_string(n) + ", d = " + std::to_string(d) +
                      " (supported: n = 1 with d <= 12, n = 2 with d <= 4)");
  const Rational s = evaluation_point(d);
  std::vector<ZNode> out;
  for (auto& spec : specs_for(n, d)) {
    ZNode node;
    node.name = spec.name;
    node.z = charge(spec.cls, s);
    node.reference = spec.reference;
    if (!spec.reference) {
      node.verdict = judge_node(n, d, spec.cls);
      if (node.verdict.status == NodeStatus::black && !spec.annotation.empty())
        node.verdict = {NodeStatus::red, RedReason::factorization, spec.annotation};
    }
    node.cls = std::move(spec.cls);
    out.push_back(std::move(node));
  }
  return out;
}

std::string to_svg(const std::vector<ZNode>& nodes, int n, int d) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& node : nodes) {
    min_x = std::min(min_x, approx(node.z.x));
    max_x = std::max(max_x, approx(node.z.x));
    min_y = std::min(min_y, approx(node.z.y));
    max_y = std::max(max_y, approx(node.z.y));
  }
  const double scale = 360.0 / std::max({max_x - min_x, max_y - min_y, 1.0});
  const double margin = 90;
  const double width = (max_x - min_x) * scale + 2 * margin;
  const double height = (max_y - min_y) * scale + 2 * margin;
  auto px = [&](const Rational& x) { return margin + (approx(x) - min_x) * scale; };
  auto py = [&](const Rational& y) { return height - margin - (approx(y) - min_y) * scale; };
  const Rational zero = 0;
  std::ostringstream svg;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "font-family=\"sans-serif\" font-size=\"13\">\n",
                width, height);
  svg << buf;
  svg << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
         "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#444\"/></marker></defs>\n";
  std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"24\">Z at s = %s, n = %d, d = %d</text>\n", margin,
                to_string(evaluation_point(d)).c_str(), n, d);
  svg << buf;
  const double ox = px(zero), oy = py(zero);
  for (const auto& node : nodes) {
    const double x = px(node.z.x), y = py(node.z.y);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#444\" "
                  "marker-end=\"url(#head)\"/>\n",
                  ox, oy, x, y);
    svg << buf;
    if (!node.reference) {
      const char* colour = node.verdict.status == NodeStatus::red ? "#c00" : "#000";
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"5\" fill=\"%s\"/>\n", x, y, colour);
      svg << buf;
    }
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\">", x + 8, y - 6);
    svg << buf << escape(node.name) << " (" << to_string(node.z.x) << ", " << to_string(node.z.y)
        << ")</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace apolar
