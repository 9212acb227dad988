#pragma once

#include "apolar/form.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace apolar {

using Rng = std::mt19937_64;

/// Integer in [lo, hi].
long uniform_int(Rng& rng, long lo, long hi);

/// Nonzero form with integer coefficients in [lo, hi].
Form random_form(int n, int d, Rng& rng, long lo = -9, long hi = 9);

/// Nonzero rational point with numerators in [-bound, bound] and denominators in [1, 3].
std::vector<Rational> random_point(int n, Rng& rng, long bound = 5);

/// `count` pairwise non-proportional points on P^1.
std::vector<std::vector<Rational>> random_distinct_points_p1(int count, Rng& rng, long bound = 6);

/// Nonzero rational weight with numerator in [-bound, bound] and denominator in [1, 4].
Rational random_weight(Rng& rng, long bound = 7);

/// Applies the substitution y -> M y (M square, invertible) to a form in divided powers.
Form substitute_linear(const Form& f, const std::vector<std::vector<Rational>>& m);

/// Random integer matrix with entries in [-3, 3] and nonzero determinant.
std::vector<std::vector<Rational>> random_invertible(int size, Rng& rng);

}  // namespace apolar
