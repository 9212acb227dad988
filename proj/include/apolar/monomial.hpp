#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace apolar {

/// Exponent vector of a monomial in n+1 variables x0..xn (or y0..yn).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);

  /// The variable x_i in n+1 variables.
  static Monomial variable(int n, int i);
  static Monomial one(int n);

  int num_vars() const noexcept { return static_cast<int>(exps_.size()); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

  /// Graded reverse lexicographic order with x0 > x1 > ... > xn.
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::vector<unsigned> exps_;
  unsigned degree_ = 0;
};

/// All monomials of degree e in n+1 variables, largest first. Length C(n+e, n).
std::vector<Monomial> monomial_basis(int n, int e);

/// Position of m in a list produced by monomial_basis. m must be present.
std::size_t basis_index(const std::vector<Monomial>& basis, const Monomial& m);

}  // namespace apolar
