#pragma once

#include "apolar/monomial.hpp"
#include "apolar/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace apolar {

/// Homogeneous polynomial of a fixed degree in n+1 variables, stored densely
/// over monomial_basis(n, degree).
class Form {
 public:
  Form() = default;
  Form(int n, int degree);
  Form(int n, int degree, Vector coefficients);

  static Form from_monomial(const Monomial& m, const Rational& c = 1);
  /// c0*v0 + ... + cn*vn.
  static Form linear(std::span<const Rational> coords);

  int n() const noexcept { return n_; }
  int degree() const noexcept { return degree_; }
  const Vector& coefficients() const noexcept { return coeffs_; }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);
  bool is_zero() const;

  /// Nonzero terms, largest monomial first.
  std::vector<std::pair<Monomial, Rational>> terms() const;

  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  Form operator*(const Rational& c) const;
  Form operator*(const Form& other) const;

  bool operator==(const Form& other) const;

 private:
  int n_ = 0;
  int degree_ = 0;
  std::vector<Monomial> basis_;
  Vector coeffs_;
};

/// Canonical text: terms in term order, e.g. "y0^3 + y1^3", "1/2*y0^2*y1".
std::string to_text(const Form& f, char variable = 'y');

/// Parses the polynomial grammar: terms joined by '+'/'-', each
/// `[coeff*]v0^a0*v1^a1*...` with rational coeff p/q. Whitespace (including
/// newlines) is insignificant. `n` defaults to the largest variable index seen.
/// Inhomogeneous input and malformed text throw ParseError.
Form parse_form(std::string_view text, char variable = 'y', std::optional<int> n = {});

}  // namespace apolar
