#pragma once

#include "apolar/form.hpp"
#include "apolar/matrix.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace apolar {

/// How monomial coefficients in socle text are read. Divided powers make
/// contraction a pure coefficient shift; ordinary input is rescaled by b!.
enum class PowerBasis { divided, ordinary };

/// A nonzero degree-d form in the dual variables y0..yn.
/// Coefficients are with respect to the divided-power monomials y^[b].
class Socle {
 public:
  explicit Socle(Form f);

  static Socle parse(std::string_view text, std::optional<int> n = {},
                     PowerBasis basis = PowerBasis::divided);

  int n() const noexcept { return form_.n(); }
  int d() const noexcept { return form_.degree(); }
  const Form& form() const noexcept { return form_; }
  Rational coefficient(const Monomial& m) const { return form_.coefficient(m); }

  bool operator==(const Socle& other) const = default;

 private:
  Form form_;
};

/// Rescales ordinary coefficients c*y^b to divided-power coefficients c*b!.
Form to_divided_powers(const Form& ordinary);
Form to_ordinary_powers(const Form& divided);

/// l^[d] for the linear form with the given coordinates: coefficient p^b on y^[b].
Form divided_power(std::span<const Rational> coords, int d);

/// x^a applied to g: the degree d-e form with coefficient g[c+a] on y^c.
Form contract(const Monomial& m, const Socle& g);
/// Linear extension of contract to a form in x of degree e <= d.
Form contract(const Form& f, const Socle& g);

/// Rows indexed by monomial_basis(n, d-e), columns by monomial_basis(n, e).
Matrix catalecticant(const Socle& g, int e);

using HilbertFunction = std::vector<int>;

HilbertFunction hilbert_function(const Socle& g);

/// Basis of I_e as coefficient vectors over monomial_basis(n, e).
std::vector<Vector> apolar_piece(const Socle& g, int e);
std::vector<Form> apolar_piece_forms(const Socle& g, int e);

bool annihilates(const Form& f, const Socle& g);

/// True iff every degree <= d element of the ideal generated by gens kills g.
/// gens should generate a saturated ideal up to degree d.
bool factors_through_ideal(const Socle& g, const std::vector<Form>& gens);

/// Sum of weights[i] * forms[i]^[d]. Forms must be linear and nonzero.
Socle synth_power_sum(const std::vector<Form>& forms, const Vector& weights, int d);

struct GorensteinDiagnostics {
  HilbertFunction h;
  bool top_is_one = false;
  bool palindromic = false;
  bool catalecticants_symmetric = false;

  bool ok() const { return top_is_one && palindromic && catalecticants_symmetric; }
};

GorensteinDiagnostics gorenstein_check(const Socle& g);

bool is_palindromic(const HilbertFunction& h);

}  // namespace apolar
