#include "apolar/apolarity.hpp"
#include "apolar/errors.hpp"
#include "apolar/sampling.hpp"

#include <doctest.h>

using namespace apolar;

namespace {

// Ordinary partial derivative d/dy_i of an ordinary-power form.
Form differentiate(const Form& f, int i) {
  Form out(f.n(), f.degree() - 1);
  for (const auto& [m, c] : f.terms()) {
    const unsigned a = m[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    out.add_term(Monomial::variable(f.n(), i).quotient_of(m), c * a);
  }
  return out;
}

// h_e as the dimension of the span of all order-(d-e) partials of the
// ordinary polynomial. Independent of catalecticant().
HilbertFunction hf_by_derivatives(const Socle& g) {
  const int n = g.n(), d = g.d();
  std::vector<std::vector<Form>> layers{{to_ordinary_powers(g.form())}};
  for (int k = 1; k <= d; ++k) {
    std::vector<Form> next;
    for (const Form& f : layers.back())
      for (int i = 0; i <= n; ++i) next.push_back(differentiate(f, i));
    layers.push_back(next);
  }
  HilbertFunction h(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    std::vector<Vector> rows;
    for (const Form& f : layers[static_cast<std::size_t>(k)]) rows.push_back(f.coefficients());
    h[static_cast<std::size_t>(d - k)] = static_cast<int>(rank(Matrix::from_rows(rows)));
  }
  return h;
}

Vector coords(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("polynomial text round trip") {
  for (const char* text : {"y0^3 + y1^3", "1/2*y0^2*y1", "y0*y1*y2 - 3*y2^3", "-y1^4"}) {
    const Form f = parse_form(text);
    CHECK(to_text(f) == text);
    CHECK(parse_form(to_text(f)) == f);
  }
  CHECK(to_text(parse_form(" y1^2+\n y0 ^2 ")) == "y0^2 + y1^2");
  CHECK(parse_form("y0^2", 'y', 2).n() == 2);
  CHECK(to_text(parse_form("2*y0 + 3/4*y1")) == "2*y0 + 3/4*y1");
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Form f = random_form(1 + k % 3, 1 + k % 5, rng);
    CHECK(parse_form(to_text(f), 'y', f.n()) == f);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_form("y0^2 +\n y1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 1);
  }
  CHECK_THROWS_AS(parse_form("y0^2 + * y1^2"), ParseError);
  CHECK_THROWS_AS(parse_form("x0^2"), ParseError);
  CHECK_THROWS_AS(parse_form(""), ParseError);
  CHECK_THROWS_AS(parse_form("1/0*y0"), ParseError);
  CHECK_THROWS_AS(Socle::parse("0"), DomainError);
  CHECK_THROWS_AS(Socle::parse("y0 - y0"), DomainError);
}

TEST_CASE("divided and ordinary powers") {
  const Socle d = Socle::parse("y0^2*y1");
  const Socle o = Socle::parse("y0^2*y1", {}, PowerBasis::ordinary);
  CHECK(o.coefficient(Monomial({2, 1})) == 2);
  CHECK(d.coefficient(Monomial({2, 1})) == 1);
  CHECK(to_ordinary_powers(to_divided_powers(d.form())) == d.form());

  const Form l2 = divided_power(coords({1, 2}), 2);
  CHECK(l2.coefficient(Monomial({2, 0})) == 1);
  CHECK(l2.coefficient(Monomial({1, 1})) == 2);
  CHECK(l2.coefficient(Monomial({0, 2})) == 4);
  // l^[d] is l^d / d! in ordinary terms
  const Form ord = to_ordinary_powers(divided_power(coords({1, 1, 1}), 3));
  CHECK(ord * Rational(6) == Form::linear(coords({1, 1, 1})) * Form::linear(coords({1, 1, 1})) *
                                 Form::linear(coords({1, 1, 1})));
}

TEST_CASE("contraction shifts coefficients") {
  const Socle g = Socle::parse("y0^3 + y1^3");
  CHECK(to_text(contract(Monomial({1, 0}), g)) == "y0^2");
  CHECK(contract(Monomial({1, 1}), g).is_zero());
  CHECK(to_text(contract(Monomial({3, 0}), g)) == "1");
  CHECK(annihilates(parse_form("x0*x1", 'x'), g));
  CHECK_FALSE(annihilates(parse_form("x0^2", 'x', 1), g));
}

TEST_CASE("hilbert function agrees with the derivative oracle") {
  Rng rng(17);
  for (int k = 0; k < 120; ++k) {
    const int n = 1 + k % 3;
    const int d = 1 + (k / 3) % 5;
    const Socle g(random_form(n, d, rng, -2, 2));
    const HilbertFunction h = hilbert_function(g);
    CHECK(h == hf_by_derivatives(g));
    CHECK(h.front() == 1);
    CHECK(h.back() == 1);
    CHECK(is_palindromic(h));
    for (int e = 0; e <= d; ++e) {
      const auto dim = static_cast<int>(monomial_basis(n, e).size());
      CHECK(static_cast<int>(apolar_piece(g, e).size()) == dim - h[static_cast<std::size_t>(e)]);
      for (const Form& f : apolar_piece_forms(g, e)) CHECK(annihilates(f, g));
      CHECK(catalecticant(g, e).transpose() == catalecticant(g, d - e));
    }
  }
}

TEST_CASE("coordinate power sums") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      for (int d = 2; d <= 5; ++d) {
        std::vector<Form> forms;
        for (int i = 0; i < k; ++i) forms.push_back(Form::from_monomial(Monomial::variable(n, i)));
        const Socle g = synth_power_sum(forms, Vector(static_cast<std::size_t>(k), Rational(1)), d);
        HilbertFunction expected(static_cast<std::size_t>(d + 1), k);
        expected.front() = expected.back() = 1;
        CHECK(hilbert_function(g) == expected);
      }
    }
  }
  CHECK_THROWS_AS(synth_power_sum({Form::linear(coords({1, 0})), Form::linear(coords({1, 0}))},
                                  {Rational(1), Rational(-1)}, 3),
                  DomainError);
}

TEST_CASE("hilbert function is invariant under linear substitution") {
  Rng rng(29);
  for (int k = 0; k < 60; ++k) {
    const int n = 1 + k % 3;
    const int d = 2 + k % 3;
    const Socle g(random_form(n, d, rng, -3, 3));
    const Socle h(substitute_linear(g.form(), random_invertible(n + 1, rng)));
    CHECK(hilbert_function(g) == hilbert_function(h));
  }
}

TEST_CASE("gorenstein diagnostics") {
  const auto diag = gorenstein_check(Socle::parse("y0^2*y1 + y2^3"));
  CHECK(diag.ok());
  CHECK(diag.h == HilbertFunction{1, 3, 3, 1});
  CHECK_FALSE(is_palindromic({1, 2, 1, 1}));
}

TEST_CASE("factorization through an ideal") {
  // y0^3 + y1^3 is killed by x0*x1
  const Socle g = Socle::parse("y0^3 + y1^3");
  CHECK(factors_through_ideal(g, {parse_form("x0*x1", 'x')}));
  CHECK_FALSE(factors_through_ideal(g, {parse_form("x0^2", 'x', 1)}));
}
