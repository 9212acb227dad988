#include "apolar/apolarity.hpp"

#include "apolar/errors.hpp"

#include <algorithm>

namespace apolar {

Socle::Socle(Form f) : form_(std::move(f)) {
  if (form_.is_zero()) throw DomainError("zero socle: the zero form is not a point of P(S_d)");
}

Socle Socle::parse(std::string_view text, std::optional<int> n, PowerBasis basis) {
  Form f = parse_form(text, 'y', n);
  if (basis == PowerBasis::ordinary) f = to_divided_powers(f);
  return Socle(std::move(f));
}

namespace {

Rational multi_factorial(const Monomial& m) {
  Integer out = 1;
  for (unsigned e : m.exponents()) out *= factorial(e);
  return Rational(out);
}

}  // namespace

Form to_divided_powers(const Form& ordinary) {
  Form out(ordinary.n(), ordinary.degree());
  for (const auto& [m, c] : ordinary.terms()) out.add_term(m, c * multi_factorial(m));
  return out;
}

Form to_ordinary_powers(const Form& divided) {
  Form out(divided.n(), divided.degree());
  for (const auto& [m, c] : divided.terms()) out.add_term(m, c / multi_factorial(m));
  return out;
}

Form divided_power(std::span<const Rational> coords, int d) {
  if (coords.empty()) throw DomainError("divided_power: no coordinates");
  if (d < 0) throw DomainError("divided_power: negative degree");
  const int n = static_cast<int>(coords.size()) - 1;
  Form out(n, d);
  for (const Monomial& m : monomial_basis(n, d)) {
    Rational c = 1;
    for (int i = 0; i <= n; ++i) {
      Rational p = coords[static_cast<std::size_t>(i)];
      for (unsigned k = 0; k < m[static_cast<std::size_t>(i)]; ++k) c *= p;
    }
    if (sgn(c) != 0) out.add_term(m, c);
  }
  return out;
}

Form contract(const Monomial& m, const Socle& g) {
  const int e = static_cast<int>(m.degree());
  if (m.num_vars() != g.n() + 1) throw DomainError("contract: variable count mismatch");
  if (e > g.d()) throw DomainError("contract: degree " + std::to_string(e) + " exceeds socle degree");
  Form out(g.n(), g.d() - e);
  for (const auto& [mono, c] : g.form().terms())
    if (m.divides(mono)) out.add_term(m.quotient_of(mono), c);
  return out;
}

Form contract(const Form& f, const Socle& g) {
  if (f.n() != g.n()) throw DomainError("contract: variable count mismatch");
  if (f.degree() > g.d()) throw DomainError("contract: degree exceeds socle degree");
  Form out(g.n(), g.d() - f.degree());
  for (const auto& [m, c] : f.terms()) out = out + contract(m, g) * c;
  return out;
}

Matrix catalecticant(const Socle& g, int e) {
  if (e < 0 || e > g.d()) throw DomainError("catalecticant: degree out of range");
  const auto rows = monomial_basis(g.n(), g.d() - e);
  const auto cols = monomial_basis(g.n(), e);
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = g.coefficient(rows[r] * cols[c]);
  return out;
}

HilbertFunction hilbert_function(const Socle& g) {
  HilbertFunction h(static_cast<std::size_t>(g.d()) + 1);
  // h is palindromic, so only the lower half needs a rank.
  for (int e = 0; 2 * e <= g.d(); ++e) {
    int r = static_cast<int>(rank(catalecticant(g, e)));
    h[static_cast<std::size_t>(e)] = r;
    h[static_cast<std::size_t>(g.d() - e)] = r;
  }
  return h;
}

std::vector<Vector> apolar_piece(const Socle& g, int e) {
  return kernel_basis(catalecticant(g, e));
}

std::vector<Form> apolar_piece_forms(const Socle& g, int e) {
  std::vector<Form> out;
  for (auto& v : apolar_piece(g, e)) out.emplace_back(g.n(), e, std::move(v));
  return out;
}

bool annihilates(const Form& f, const Socle& g) {
  if (f.n() == g.n() && f.degree() > g.d()) return true;
  return contract(f, g).is_zero();
}

bool factors_through_ideal(const Socle& g, const std::vector<Form>& gens) {
  for (const Form& f : gens) {
    if (f.n() != g.n()) throw DomainError("factors_through_ideal: variable count mismatch");
    if (f.degree() > g.d()) continue;
    // (m*f) applied to g is m applied to (f applied to g).
    if (f.is_zero()) continue;
    if (!annihilates(f, g)) return false;
  }
  return true;
}

Socle synth_power_sum(const std::vector<Form>& forms, const Vector& weights, int d) {
  if (forms.empty() || forms.size() != weights.size())
    throw DomainError("synth_power_sum: need equally many forms and weights");
  const int n = forms.front().n();
  Form sum(n, d);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Form& l = forms[i];
    if (l.degree() != 1 || l.n() != n) throw DomainError("synth_power_sum: forms must be linear in y0..yn");
    if (l.is_zero()) throw DomainError("synth_power_sum: zero linear form");
    if (sgn(weights[i]) == 0) throw DomainError("synth_power_sum: zero weight");
    Vector coords;
    for (int k = 0; k <= n; ++k) coords.push_back(l.coefficient(Monomial::variable(n, k)));
    sum = sum + divided_power(coords, d) * weights[i];
  }
  if (sum.is_zero()) throw DomainError("synth_power_sum: degenerate input, the power sum vanishes");
  return Socle(std::move(sum));
}

bool is_palindromic(const HilbertFunction& h) {
  return std::equal(h.begin(), h.end(), h.rbegin());
}

GorensteinDiagnostics gorenstein_check(const Socle& g) {
  GorensteinDiagnostics out;
  out.h.resize(static_cast<std::size_t>(g.d()) + 1);
  for (int e = 0; e <= g.d(); ++e) out.h[static_cast<std::size_t>(e)] = static_cast<int>(rank(catalecticant(g, e)));
  out.top_is_one = out.h.back() == 1 && out.h.front() == 1;
  out.palindromic = is_palindromic(out.h);
  out.catalecticants_symmetric = true;
  for (int e = 0; e <= g.d(); ++e)
    if (!(catalecticant(g, e) == catalecticant(g, g.d() - e).transpose()))
      out.catalecticants_symmetric = false;
  return out;
}

}  // namespace apolar
