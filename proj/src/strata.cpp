#include "apolar/strata.hpp"

#include "apolar/errors.hpp"
#include "apolar/plane_sheaves.hpp"
#include "apolar/sampling.hpp"

#include <algorithm>
#include <functional>

namespace apolar {

// ---------------------------------------------------------------- node rules

Rational evaluation_point(int d) { return d % 2 == 0 ? Rational(0) : make_rational(-1, 2); }

NodeVerdict judge_node(int n, int d, const TwistComplex& cls) {
  const Rational s = evaluation_point(d);
  const ChargePoint z = charge(cls, s);
  const ChargePoint z_o = charge(line_bundle(n, 0), s);
  if (compare_arg(z, z_o) == std::weak_ordering::less)
    return {NodeStatus::red, RedReason::below_slope, "argument lies below that of O"};
  if (n != 2) return {};

  const ChernP2 ch = chern_p2(cls);
  const Rational chi_prime = ch.chi_prime(), chi = ch.chi();
  if (ch.ch0 >= 1) {
    const long r = ch.ch0.get_si();
    if (chi_prime_admissible(r, chi_prime)) {
      const Rational m = m_r_dlp(r, chi_prime);
      if (chi > m)
        return {NodeStatus::red, RedReason::exceeds_m_r,
                "chi = " + to_string(chi) + " exceeds m_" + std::to_string(r) + "(" +
                    to_string(chi_prime) + ") = " + to_string(m)};
    }
  } else if (ch.ch0 == 0) {
    bool torsion_free_possible = false;
    for (long r = 1; r <= 12 && !torsion_free_possible; ++r) {
      if (!chi_prime_admissible(r, chi_prime)) continue;
      if (chi <= m_r_naive(r, chi_prime) && chi <= m_r_dlp(r, chi_prime)) torsion_free_possible = true;
    }
    if (!torsion_free_possible)
      return {NodeStatus::red, RedReason::exceeds_m_r,
              "chi = " + to_string(chi) + " exceeds m_r(" + to_string(chi_prime) +
                  ") for every rank r <= 12; only torsion sheaves have this charge"};
  }
  if (d % 2 == 1) {
    const int e = (d + 1) / 2;
    if (chi < e + 1)
      return {NodeStatus::red, RedReason::factorization,
              "the kernel contains C^" + std::to_string(e + 1) + " (x) O, forcing chi >= " +
                  std::to_string(e + 1)};
  }
  return {};
}

// ------------------------------------------------------------------ catalogs

namespace {

using Point = std::vector<Rational>;

Point pt(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

Form x_poly(std::string_view text) { return parse_form(text, 'x', 2); }

TwistComplex ideal_pts(int e, long k) { return ideal_of_points(2, e, k); }

void finish(CatalogEntry& entry) {
  if (!entry.kernel_class) return;
  entry.charge_node = charge(*entry.kernel_class, evaluation_point(entry.d));
  entry.node = judge_node(entry.n, entry.d, *entry.kernel_class);
}

std::vector<CatalogEntry> catalog_p1(int d) {
  const int e = (d + 1) / 2;
  std::vector<CatalogEntry> out;
  for (int a = 1; a <= d / 2 + 1; ++a) {
    CatalogEntry c;
    c.n = 1;
    c.d = d;
    std::string what = a == 1 ? "point" : a == 2 ? "secant line" : "secant " + std::to_string(a - 1) + "-plane";
    c.label = "a=" + std::to_string(a) + " (" + what + ")";
    for (int k = 0; k <= d; ++k) c.hilbert_function.push_back(std::min({k + 1, d - k + 1, a}));
    if (a <= e) {
      c.kernel_object = "O(" + std::to_string(e - a) + ")";
      c.kernel_class = line_bundle(1, e - a);
    }
    for (long k = 0; k < a; ++k) c.witness.points.push_back({Rational(1), Rational(k)});
    finish(c);
    out.push_back(std::move(c));
  }
  return out;
}

CatalogEntry plane_entry(int d, std::string label, HilbertFunction h, std::string kernel,
                         std::optional<TwistComplex> cls, std::vector<Point> points,
                         std::vector<std::string_view> ideal) {
  CatalogEntry c;
  c.label = std::move(label);
  c.n = 2;
  c.d = d;
  c.hilbert_function = std::move(h);
  c.kernel_object = std::move(kernel);
  c.kernel_class = std::move(cls);
  c.witness.points = std::move(points);
  c.witness.random = c.witness.points.empty();
  for (auto g : ideal) c.witness_ideal.push_back(x_poly(g));
  return c;
}

std::vector<CatalogEntry> catalog_p2(int d) {
  std::vector<CatalogEntry> out;
  const TwistComplex o = line_bundle(2, 0);
  switch (d) {
    case 1:
      out.push_back(plane_entry(1, "point", {1, 1}, "I_p(1)", ideal_pts(1, 1), {pt(1, 0, 0)}, {"x1", "x2"}));
      out.back().factorization = "O(1) -> C_p -> omega(0)[2]";
      break;
    case 2:
      out.push_back(plane_entry(2, "rank 1", {1, 1, 1}, "I_p(1)", ideal_pts(1, 1), {pt(1, 0, 0)}, {"x1", "x2"}));
      out.back().factorization = "O(1) -> O_p(1) -> omega(-1)[2]";
      out.push_back(plane_entry(2, "rank 2", {1, 2, 1}, "O", o, {pt(1, 0, 0), pt(0, 1, 0)}, {"x2"}));
      out.back().factorization = "O(1) -> O_l(1) -> omega(-1)[2]";
      out.push_back(plane_entry(2, "rank 3", {1, 3, 1}, "", std::nullopt,
                                {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}, {}));
      break;
    case 3: {
      out.push_back(plane_entry(3, "point", {1, 1, 1, 1}, "I_p(2)", ideal_pts(2, 1), {pt(1, 0, 0)}, {"x1", "x2"}));
      out.push_back(plane_entry(3, "secant line", {1, 2, 2, 1}, "I_pq(2)", ideal_pts(2, 2),
                                {pt(1, 0, 0), pt(0, 1, 0)}, {"x2", "x0*x1"}));
      out.push_back(plane_entry(3, "three non-collinear points", {1, 3, 3, 1}, "I_pqr(2)", ideal_pts(2, 3),
                                {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}, {"x0*x1", "x0*x2", "x1*x2"}));
      out.back().interior_square = {{0, 0}, {3, 2}, {2, 3}, {0, 0}};
      out.push_back(plane_entry(3, "open", {1, 3, 3, 1}, "O^3", o.times(3), {}, {}));
      out.back().interior_square = {{0, 0}, {3, 0}, {0, 3}, {0, 0}};
      break;
    }
    case 4: {
      const std::vector<Point> line_pts{pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)};
      out.push_back(plane_entry(4, "four-uple embedding", {1, 1, 1, 1, 1}, "I_p(2)", ideal_pts(2, 1),
                                {pt(1, 0, 0)}, {"x1", "x2"}));
      out.back().factorization = "O(2) -> O_p -> omega(-2)[2]";
      out.back().dimension = 2;
      out.push_back(plane_entry(4, "secant lines", {1, 2, 2, 2, 1}, "I_pq(2)", ideal_pts(2, 2),
                                {pt(1, 0, 0), pt(0, 1, 0)}, {"x2", "x0*x1"}));
      out.back().factorization = "O(2) -> O_l(2) -> O_pq -> omega(-2)[2]";
      out.back().dimension = 5;
      out.push_back(plane_entry(4, "spans of lines", {1, 2, 3, 2, 1}, "O(1)", line_bundle(2, 1), line_pts, {"x2"}));
      out.back().factorization = "O(2) -> O_l(2) -> omega(-2)[2]";
      out.back().dimension = 6;
      out.push_back(plane_entry(4, "three non-collinear points", {1, 3, 3, 3, 1}, "I_pqr(2)", ideal_pts(2, 3),
                                {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)}, {"x0*x1", "x0*x2", "x1*x2"}));
      out.back().factorization = "O(2) -> O_pqr -> omega(-2)[2]";
      out.back().dimension = 8;
      std::vector<Point> line_and_point(line_pts);
      line_and_point.push_back(pt(0, 0, 1));
      out.push_back(plane_entry(4, "rational quartic and a point", {1, 3, 4, 3, 1}, "I_p(1)", ideal_pts(1, 1),
                                line_and_point, {"x0*x2", "x1*x2"}));
      out.back().factorization = "O(2) -> O_{l+p}(2) -> omega(-2)[2]";
      out.back().interior_square = {{0, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 0}};
      out.back().dimension = 9;
      out.push_back(plane_entry(4, "intersection of two conics", {1, 3, 4, 3, 1}, "O^2", o.times(2),
                                {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1)}, {}));
      out.back().factorization = "O(2) -> O(2)/O^2 -> omega(-2)[2]";
      out.back().interior_square = {{0, 0}, {2, 0}, {1, 1}, {0, 2}, {0, 0}};
      out.back().dimension = 11;
      out.push_back(plane_entry(4, "single conic", {1, 3, 5, 3, 1}, "O", o,
                                {pt(1, 0, 0), pt(1, 1, 1), pt(1, -1, 1), pt(1, 2, 4), pt(0, 0, 1)},
                                {"x0*x2 - x1^2"}));
      out.back().factorization = "O(2) -> O_C(2) -> omega(-2)[2]";
      out.back().dimension = 13;
      out.push_back(plane_entry(4, "open/semistable", {1, 3, 6, 3, 1}, "", std::nullopt, {}, {}));
      out.back().factorization = "[O(-2)^7 -> O(-1)^7]";
      out.back().dimension = 14;
      break;
    }
    default:
      break;
  }
  for (auto& c : out) finish(c);
  return out;
}

}  // namespace

bool catalog_supported(int n, int d) {
  return (n == 1 && d >= 1 && d <= 12) || (n == 2 && d >= 1 && d <= 4);
}

std::vector<CatalogEntry> catalog(int n, int d) {
  if (!catalog_supported(n, d))
    throw DomainError("no stratum catalog for n = " + std::to_string(n) + ", d = " + std::to_string(d) +
                      " (supported: n = 1 with d <= 12, n = 2 with d <= 4)");
  return n == 1 ? catalog_p1(d) : catalog_p2(d);
}

StratumLabel classify(const Socle& g) {
  const auto entries = catalog(g.n(), g.d());
  const HilbertFunction h = hilbert_function(g);
  std::vector<const CatalogEntry*> candidates;
  for (const auto& c : entries)
    if (c.hilbert_function == h) candidates.push_back(&c);
  if (candidates.empty()) return {};
  if (candidates.size() == 1 && !candidates.front()->interior_square) return {*candidates.front()};
  const auto square = interior_square(koszul_betti(g));
  for (const auto* c : candidates)
    if (c->interior_square && *c->interior_square == square) return {*c};
  return {};
}

Socle witness_socle(const CatalogEntry& entry, std::uint64_t seed) {
  if (!entry.witness.random) {
    std::vector<Form> forms;
    for (const auto& p : entry.witness.points) forms.push_back(Form::linear(p));
    return synth_power_sum(forms, Vector(forms.size(), Rational(1)), entry.d);
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Socle g(random_form(entry.n, entry.d, rng));
    if (classify(g).name() == entry.label) return g;
  }
  throw DomainError("witness_socle: no random sample landed in stratum '" + entry.label + "'");
}

bool verify_factorization_witness(const Socle& g, const CatalogEntry& entry) {
  if (entry.witness_ideal.empty())
    throw DomainError("stratum '" + entry.label + "' has no ideal-theoretic witness");
  return factors_through_ideal(g, entry.witness_ideal);
}

QuadricRank quadric_rank(const Socle& g) {
  if (g.d() != 2) throw DomainError("quadric_rank: requires d = 2");
  QuadricRank out;
  out.rank = static_cast<int>(rank(catalecticant(g, 1)));
  if (catalog_supported(g.n(), 2)) out.label = classify(g);
  return out;
}

// ---------------------------------------------------------- binary forms

namespace {

// Dense univariate polynomials over Q, index = power.
using Poly = Vector;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long>(k));
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  if (den.empty()) throw DomainError("polynomial division by zero");
  trim(num);
  Poly q(std::max(0, deg(num) - deg(den) + 1));
  while (!num.empty() && deg(num) >= deg(den)) {
    const int shift = deg(num) - deg(den);
    const Rational c = num.back() / den.back();
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t k = 0; k < den.size(); ++k) num[k + static_cast<std::size_t>(shift)] -= c * den[k];
    trim(num);
  }
  trim(q);
  return {q, num};
}

Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Squarefree decomposition: pairs (P_k, k) with p = c * prod P_k^k.
std::vector<std::pair<Poly, int>> yun(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (deg(p) <= 0) return out;
  Poly c = gcd(p, derivative(p));
  Poly w = divmod(p, c).first;
  for (int i = 1; deg(w) > 0; ++i) {
    Poly y = gcd(w, c);
    Poly z = divmod(w, y).first;
    if (deg(z) > 0) out.emplace_back(monic(z), i);
    w = std::move(y);
    c = divmod(c, w).first;
  }
  return out;
}

std::vector<Integer> divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> small, large;
  for (Integer k = 1; k * k <= v; ++k)
    if (v % k == 0) {
      small.push_back(k);
      if (k * k != v) large.push_back(v / k);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational eval(const Poly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Distinct rational roots of p (p nonzero).
std::vector<Rational> rational_roots(Poly p) {
  trim(p);
  std::vector<Rational> out;
  std::size_t low = 0;
  while (low < p.size() && sgn(p[low]) == 0) ++low;
  if (low > 0) out.push_back(0);
  p.erase(p.begin(), p.begin() + static_cast<long>(low));
  if (deg(p) <= 0) return out;
  const auto ints = primitive_integer_vector(p);
  for (const Integer& num : divisors(ints.front()))
    for (const Integer& den : divisors(ints.back()))
      for (int sign : {1, -1}) {
        const Rational t = make_rational(num * sign, den);
        if (std::find(out.begin(), out.end(), t) == out.end() && sgn(eval(p, t)) == 0) out.push_back(t);
      }
  std::sort(out.begin(), out.end());
  return out;
}

// Independent basis of I_e as forms, all of S_e above the socle degree.
std::vector<Form> ideal_basis(const Socle& g, int e) {
  if (e <= g.d()) return apolar_piece_forms(g, e);
  std::vector<Form> out;
  for (const auto& m : monomial_basis(g.n(), e)) out.push_back(Form::from_monomial(m));
  return out;
}

}  // namespace

BinaryApolarPair binary_apolar_pair(const Socle& g) {
  if (g.n() != 1) throw DomainError("binary_apolar_pair: requires n = 1");
  const HilbertFunction h = hilbert_function(g);
  int a = 0;
  while (a <= g.d() && h[static_cast<std::size_t>(a)] == a + 1) ++a;
  BinaryApolarPair out;
  out.a = a;
  out.b = g.d() + 2 - a;
  const auto ia = ideal_basis(g, a);
  out.fa = ia.front();
  if (out.a == out.b) {
    out.fb = ia.at(1);
    return out;
  }
  std::vector<Vector> span;
  for (const auto& m : monomial_basis(1, out.b - a)) span.push_back((Form::from_monomial(m) * out.fa).coefficients());
  const std::size_t base = rank(Matrix::from_rows(span));
  for (const auto& f : ideal_basis(g, out.b)) {
    auto rows = span;
    rows.push_back(f.coefficients());
    if (rank(Matrix::from_rows(rows)) > base) {
      out.fb = f;
      return out;
    }
  }
  throw DomainError("binary_apolar_pair: no second generator found");
}

std::string to_string(WaringReport::Kind kind) {
  switch (kind) {
    case WaringReport::Kind::rational_points: return "rational points";
    case WaringReport::Kind::irrational: return "squarefree, irrational points";
    case WaringReport::Kind::non_squarefree: return "not squarefree";
    case WaringReport::Kind::non_unique: return "non-unique regime";
  }
  return "";
}

WaringReport binary_waring(const Socle& g) {
  const BinaryApolarPair pair = binary_apolar_pair(g);
  WaringReport out;
  out.a = pair.a;
  out.fa = pair.fa;
  if (pair.a >= pair.b) return out;

  // f(u) = F_a(1, u); a missing top degree is a root at (0:1).
  Poly f(static_cast<std::size_t>(pair.a) + 1);
  for (const auto& [m, c] : pair.fa.terms()) f[m[1]] = c;
  trim(f);
  const int at_infinity = pair.a - deg(f);

  std::vector<std::pair<Poly, int>> factors = yun(f);
  for (const auto& [p, k] : factors) {
    for (int r = 0; r < deg(p); ++r) out.partition.push_back(k);
    for (const Rational& t : rational_roots(p)) out.rational_roots.push_back({ProjectivePoint{1, t}, k});
  }
  if (at_infinity > 0) {
    out.partition.push_back(at_infinity);
    out.rational_roots.push_back({ProjectivePoint{0, 1}, at_infinity});
  }
  std::sort(out.partition.begin(), out.partition.end(), std::greater<>());

  if (!out.partition.empty() && out.partition.front() > 1) {
    out.kind = WaringReport::Kind::non_squarefree;
    return out;
  }
  if (static_cast<int>(out.rational_roots.size()) < pair.a) {
    out.kind = WaringReport::Kind::irrational;
    return out;
  }
  out.kind = WaringReport::Kind::rational_points;
  const int d = g.d();
  Matrix system(static_cast<std::size_t>(d) + 1, out.rational_roots.size());
  for (std::size_t i = 0; i < out.rational_roots.size(); ++i) {
    const auto& p = out.rational_roots[i].first;
    out.points.push_back(p);
    const Form power = divided_power(p, d);
    for (std::size_t r = 0; r <= static_cast<std::size_t>(d); ++r) system(r, i) = power.coefficients()[r];
  }
  auto w = solve(system, g.form().coefficients());
  if (!w) throw DomainError("binary_waring: power sum system is inconsistent");
  out.weights = *w;
  return out;
}

}  // namespace apolar
