#include "apolar/charge.hpp"

#include "apolar/errors.hpp"
#include "apolar/matrix.hpp"

namespace apolar {

TwistComplex TwistComplex::operator+(const TwistComplex& other) const {
  if (n != other.n) throw DomainError("TwistComplex: dimension mismatch");
  TwistComplex out(*this);
  out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
  return out;
}

TwistComplex TwistComplex::shift(int k) const {
  TwistComplex out(*this);
  for (auto& t : out.terms) t.i += k;
  return out;
}

TwistComplex TwistComplex::twist(int e) const {
  TwistComplex out(*this);
  for (auto& t : out.terms) t.j -= e;
  return out;
}

TwistComplex TwistComplex::times(long m) const {
  if (m < 1) throw DomainError("TwistComplex: multiplicity must be positive");
  TwistComplex out(*this);
  for (auto& t : out.terms) t.b *= m;
  return out;
}

TwistComplex line_bundle(int n, int e) { return {n, {{0, -e, 1}}}; }

TwistComplex omega_twist(int n, int e) { return {n, {{n, e + n + 1, 1}}}; }

TwistComplex point_class(int n) {
  TwistComplex out{n, {}};
  for (int i = 0; i <= n; ++i) out.terms.push_back({i, i, binomial(n, i).get_si()});
  return out;
}

TwistComplex ideal_of_points(int n, int e, long points) {
  TwistComplex out = line_bundle(n, e);
  if (points > 0) out = out + point_class(n).times(points).shift(1);
  return out;
}

TwistComplex interior_complex(const BettiTable& t, int e) {
  TwistComplex out{t.n(), {}};
  for (const auto& [key, b] : t.entries())
    if (key.first >= 1 && key.first <= t.n()) out.terms.push_back({key.first - 1, key.second - e, b});
  return out;
}

TwistComplex cone_class(int n, int d, int e) {
  return line_bundle(n, e) + omega_twist(n, d - e).shift(1);
}

Rational HilbPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational HilbPoly::derivative(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * t + coeffs[k] * static_cast<long>(k);
  return acc;
}

namespace {

// Coefficients of C(t + c, n) = (t+c)(t+c-1)...(t+c-n+1) / n!.
Vector binomial_poly(int n, long c) {
  Vector p{Rational(1)};
  for (int k = 0; k < n; ++k) {
    Vector next(p.size() + 1);
    const Rational shift = c - k;
    for (std::size_t a = 0; a < p.size(); ++a) {
      next[a + 1] += p[a];
      next[a] += p[a] * shift;
    }
    p = std::move(next);
  }
  const Rational inv = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
  for (auto& q : p) q *= inv;
  return p;
}

}  // namespace

HilbPoly hilb_poly(const TwistComplex& c) {
  HilbPoly out{Vector(static_cast<std::size_t>(c.n) + 1)};
  for (const auto& t : c.terms) {
    const Vector p = binomial_poly(c.n, c.n - t.j);
    const Rational sign = (t.i % 2 == 0 ? 1 : -1) * t.b;
    for (std::size_t k = 0; k < p.size(); ++k) out.coeffs[k] += sign * p[k];
  }
  return out;
}

ChargePoint charge(const TwistComplex& c, const Rational& s) {
  const HilbPoly p = hilb_poly(c);
  return {p.derivative(s), p(s)};
}

namespace {

// 0 for arguments in (-1, 0], 1 for (0, 1].
int half(const ChargePoint& p) {
  if (sgn(p.y) < 0) return 0;
  if (sgn(p.y) == 0) return sgn(p.x) > 0 ? 0 : 1;
  return 1;
}

}  // namespace

std::weak_ordering compare_arg(const ChargePoint& p, const ChargePoint& q) {
  if ((sgn(p.x) == 0 && sgn(p.y) == 0) || (sgn(q.x) == 0 && sgn(q.y) == 0))
    throw DomainError("compare_arg: zero charge has no argument");
  const int hp = half(p), hq = half(q);
  if (hp != hq) return hp <=> hq;
  const int cross = sgn(Rational(p.x * q.y - p.y * q.x));
  if (cross > 0) return std::weak_ordering::less;
  if (cross < 0) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

TwistComplex dual_class(const TwistComplex& c) {
  TwistComplex out{c.n, {}};
  for (const auto& t : c.terms) out.terms.push_back({c.n - t.i, c.n + 1 - t.j, t.b});
  return out;
}

Vector beilinson_dims(const TwistComplex& c) {
  const int n = c.n;
  const HilbPoly p = hilb_poly(c);
  Matrix a(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
  Vector rhs;
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= n; ++i)
      a(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) =
          (i % 2 == 0 ? 1 : -1) * gen_binomial(Rational(n - k - i), static_cast<unsigned>(n));
    rhs.push_back(p(Rational(-k)));
  }
  auto v = solve(a, rhs);
  if (!v) throw DomainError("beilinson_dims: singular system");
  return *v;
}

ChargePoint cone_charge(const BettiTable& t, const Rational& s) {
  for (const auto& [key, b] : t.entries())
    if (key.first < 0 || key.first > t.n() + 1 || key.second < key.first)
      throw DomainError("cone_charge: malformed betti table");
  const int e = (t.d() + 1) / 2;
  return charge(interior_complex(t, e), s);
}

Rational anti_slope(int n, const Rational& t) {
  Rational sum = 0;
  for (int i = 1; i <= n; ++i) {
    Rational den = t + i;
    if (sgn(den) == 0) throw DomainError("anti_slope: pole at t = " + to_string(t));
    sum += 1 / den;
  }
  return sum;
}

Rational ChernP2::chi_prime() const { return Rational(3, 2) * Rational(ch0) + Rational(ch1); }

Rational ChernP2::chi() const {
  return Rational(ch0) + Rational(3, 2) * Rational(ch1) + ch2;
}

ChernP2 chern_p2(const TwistComplex& c) {
  if (c.n != 2) throw DomainError("chern_p2: requires n = 2");
  const HilbPoly p = hilb_poly(c);
  const Rational ch0 = 2 * p.coeffs[2];
  const Rational ch1 = p.coeffs[1] - Rational(3, 2) * ch0;
  const Rational ch2 = p.coeffs[0] - ch0 - Rational(3, 2) * ch1;
  return {ch0.get_num(), ch1.get_num(), ch2};
}

Rational discriminant(const ChernP2& ch) {
  return Rational(ch.ch1 * ch.ch1) - 2 * Rational(ch.ch0) * ch.ch2;
}

ChargePoint charge_of(const ChernP2& ch) { return {ch.chi_prime(), ch.chi()}; }

}  // namespace apolar
