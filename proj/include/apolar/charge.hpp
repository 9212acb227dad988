#pragma once

#include "apolar/rational.hpp"
#include "apolar/resolution.hpp"

#include <compare>
#include <vector>

namespace apolar {

/// A term b * O(-j) sitting in homological degree i.
struct TwistTerm {
  int i = 0;
  int j = 0;
  long b = 1;

  bool operator==(const TwistTerm&) const = default;
};

/// A formal K-class sum (-1)^i b [O(-j)] on P^n.
struct TwistComplex {
  int n = 0;
  std::vector<TwistTerm> terms;

  TwistComplex operator+(const TwistComplex& other) const;
  /// Homological shift [k]: i -> i + k.
  TwistComplex shift(int k) const;
  /// Tensor with O(e): j -> j - e.
  TwistComplex twist(int e) const;
  TwistComplex times(long m) const;
};

TwistComplex line_bundle(int n, int e);                  ///< O(e)
TwistComplex omega_twist(int n, int e);                  ///< omega(-e)[n] = O(-e-n-1)[n]
TwistComplex point_class(int n);                         ///< C_p via its Koszul resolution
TwistComplex ideal_of_points(int n, int e, long points); ///< I_Z(e) for `points` reduced points
/// Twisted interior columns i = 1..n of a betti table: terms (i-1, j-e, b_ij).
TwistComplex interior_complex(const BettiTable& t, int e);
/// [O(e)] - [omega(e-d)[n]], the class of the cone over a degree-d socle twisted by e.
TwistComplex cone_class(int n, int d, int e);

/// Coefficients a_0 .. a_n of a polynomial in t.
struct HilbPoly {
  Vector coeffs;

  Rational operator()(const Rational& t) const;
  Rational derivative(const Rational& t) const;
  bool operator==(const HilbPoly&) const = default;
};

HilbPoly hilb_poly(const TwistComplex& c);

struct ChargePoint {
  Rational x;  ///< chi'
  Rational y;  ///< chi

  ChargePoint operator+(const ChargePoint& o) const { return {x + o.x, y + o.y}; }
  ChargePoint operator*(const Rational& c) const { return {x * c, y * c}; }
  bool operator==(const ChargePoint&) const = default;
};

ChargePoint charge(const TwistComplex& c, const Rational& s);

/// Compares principal arguments in (-1, 1] (angle / pi) exactly. Throws on zero.
std::weak_ordering compare_arg(const ChargePoint& p, const ChargePoint& q);

/// (i, j, b) -> (n - i, n + 1 - j, b). Z at 0 goes to (-x, y); an involution.
TwistComplex dual_class(const TwistComplex& c);

/// V_0..V_n with [c] = sum (-1)^i V_i [O(-i)].
Vector beilinson_dims(const TwistComplex& c);

/// Charge of the interior complex of t twisted by ceil(d/2).
ChargePoint cone_charge(const BettiTable& t, const Rational& s);

/// sum_{i=1}^n 1/(t+i). Throws DomainError at a pole.
Rational anti_slope(int n, const Rational& t);

struct ChernP2 {
  Integer ch0;
  Integer ch1;
  Rational ch2;

  Rational chi_prime() const;
  Rational chi() const;
  bool operator==(const ChernP2&) const = default;
};

ChernP2 chern_p2(const TwistComplex& c);
Rational discriminant(const ChernP2& ch);

/// Charge at 0 of a plane sheaf with the given Chern data.
ChargePoint charge_of(const ChernP2& ch);

}  // namespace apolar
