#include "apolar/charge.hpp"
#include "apolar/errors.hpp"
#include "apolar/sampling.hpp"

#include <doctest.h>

using namespace apolar;

namespace {

// Exact derivative at t = 0 of the degree-n polynomial through (k, values[k]),
// k = 0..n, via Newton forward differences: p'(0) = sum_{m>=1} (-1)^(m+1) D^m / m.
Rational derivative_at_zero(Vector values) {
  Rational out = 0;
  for (std::size_t m = 1; m < values.size(); ++m) {
    for (std::size_t k = 0; k + m < values.size(); ++k) values[k] = values[k + 1] - values[k];
    const Rational term = values[0] / static_cast<long>(m);
    out += m % 2 ? term : Rational(-term);
  }
  return out;
}

Rational harmonic(int n) {
  Rational h = 0;
  for (int i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

TwistComplex random_complex(int n, Rng& rng) {
  TwistComplex c{n, {}};
  const long count = uniform_int(rng, 1, 4);
  for (long k = 0; k < count; ++k)
    c.terms.push_back({static_cast<int>(uniform_int(rng, 0, n)), static_cast<int>(uniform_int(rng, -3, 5)),
                       uniform_int(rng, 1, 6)});
  return c;
}

}  // namespace

TEST_CASE("hilbert polynomials count monomials") {
  for (int n = 1; n <= 3; ++n) {
    for (int e = -2; e <= 4; ++e) {
      const HilbPoly p = hilb_poly(line_bundle(n, e));
      for (int t = 0; t <= 6; ++t) {
        const long expected = t + e >= 0 ? static_cast<long>(monomial_basis(n, t + e).size()) : 0;
        // the polynomial agrees with the count wherever t + e >= -n
        if (t + e >= -n) CHECK(p(Rational(t)) == expected);
      }
      for (int k = 0; k <= 5; ++k) {
        const HilbPoly q = hilb_poly(ideal_of_points(n, e, k));
        CHECK(q(Rational(3)) == p(Rational(3)) - k);
      }
    }
    CHECK(hilb_poly(point_class(n)).coeffs.front() == 1);
    for (std::size_t k = 1; k < hilb_poly(point_class(n)).coeffs.size(); ++k)
      CHECK(hilb_poly(point_class(n)).coeffs[k] == 0);
  }
}

TEST_CASE("charge of the structure sheaf") {
  for (int n = 1; n <= 3; ++n) {
    Vector counts;
    for (int t = 0; t <= n; ++t) counts.push_back(static_cast<long>(monomial_basis(n, t).size()));
    const ChargePoint z = charge(line_bundle(n, 0), 0);
    CHECK(z.x == derivative_at_zero(counts));
    CHECK(z.x == harmonic(n));
    CHECK(z.y == 1);
    CHECK(anti_slope(n, 0) == harmonic(n));
  }
  CHECK(charge(point_class(2), Rational(-1, 2)) == ChargePoint{0, 1});
  CHECK_THROWS_AS(anti_slope(2, Rational(-1)), DomainError);
}

TEST_CASE("charge is additive and respects shifts") {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 3;
    const TwistComplex a = random_complex(n, rng), b = random_complex(n, rng);
    const Rational s = make_rational(uniform_int(rng, -4, 4), 2);
    CHECK(charge(a + b, s) == charge(a, s) + charge(b, s));
    CHECK(charge(a.shift(1), s) == charge(a, s) * Rational(-1));
    CHECK(charge(a.times(3), s) == charge(a, s) * Rational(3));
    // twisting by O(e) moves the evaluation point
    CHECK(charge(a.twist(2), s) == charge(a, s + 2));
  }
}

TEST_CASE("duality is an involution that reflects the charge") {
  Rng rng(37);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 3;
    const TwistComplex c = random_complex(n, rng);
    CHECK(dual_class(dual_class(c)).terms == c.terms);
    const ChargePoint z = charge(c, 0), w = charge(dual_class(c), 0);
    CHECK(w.x == -z.x);
    CHECK(w.y == z.y);
  }
}

TEST_CASE("beilinson dimensions reconstruct the class") {
  Rng rng(41);
  for (int k = 0; k < 80; ++k) {
    const int n = 1 + k % 3;
    const TwistComplex c = random_complex(n, rng);
    const Vector v = beilinson_dims(c);
    REQUIRE(v.size() == static_cast<std::size_t>(n + 1));
    TwistComplex rebuilt{n, {}};
    for (int i = 0; i <= n; ++i) {
      // V_i [O(-i)] with sign (-1)^i, integral by construction here
      const Rational& x = v[static_cast<std::size_t>(i)];
      CHECK(x.get_den() == 1);
      const long b = x.get_num().get_si();
      if (b > 0) rebuilt.terms.push_back({i, i, b});
      if (b < 0) rebuilt.terms.push_back({i + 1, i, -b});
    }
    CHECK(hilb_poly(rebuilt) == hilb_poly(c));
  }
  const Vector o = beilinson_dims(line_bundle(2, 0));
  CHECK(o == Vector{1, 0, 0});
}

TEST_CASE("plane chern characters") {
  for (int k = -3; k <= 3; ++k) {
    const ChernP2 ch = chern_p2(line_bundle(2, k));
    CHECK(ch.ch0 == 1);
    CHECK(ch.ch1 == k);
    CHECK(ch.ch2 == make_rational(k * k, 2));
    CHECK(discriminant(ch) == 0);
  }
  const ChernP2 p = chern_p2(point_class(2));
  CHECK(p.ch0 == 0);
  CHECK(p.ch1 == 0);
  CHECK(p.ch2 == 1);
  Rng rng(43);
  for (int k = 0; k < 60; ++k) {
    const TwistComplex c = random_complex(2, rng);
    CHECK(charge_of(chern_p2(c)) == charge(c, 0));
  }
  CHECK_THROWS_AS(chern_p2(line_bundle(1, 0)), DomainError);
}

TEST_CASE("argument comparison") {
  // counterclockwise from just above -pi to pi
  const std::vector<ChargePoint> ordered{{-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}};
  for (std::size_t a = 0; a < ordered.size(); ++a) {
    for (std::size_t b = 0; b < ordered.size(); ++b) {
      const auto cmp = compare_arg(ordered[a], ordered[b]);
      if (a < b) CHECK(cmp == std::weak_ordering::less);
      if (a == b) CHECK(cmp == std::weak_ordering::equivalent);
      if (a > b) CHECK(cmp == std::weak_ordering::greater);
    }
  }
  CHECK(compare_arg({2, 2}, {1, 1}) == std::weak_ordering::equivalent);
  CHECK_THROWS_AS(compare_arg({0, 0}, {1, 0}), DomainError);
}

TEST_CASE("cone classes of even socles have real charge") {
  for (int n = 1; n <= 3; ++n) {
    for (int e = 1; e <= 3; ++e) {
      const ChargePoint z = charge(cone_class(n, 2 * e, e), 0);
      CHECK(z.y == 0);
      CHECK(z.x == 2 * charge(line_bundle(n, e), 0).x);
    }
  }
}
