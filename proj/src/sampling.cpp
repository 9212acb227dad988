#include "apolar/sampling.hpp"

#include "apolar/apolarity.hpp"
#include "apolar/errors.hpp"
#include "apolar/matrix.hpp"

namespace apolar {

long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Form random_form(int n, int d, Rng& rng, long lo, long hi) {
  for (;;) {
    Form f(n, d);
    for (const auto& m : f.basis()) {
      long c = uniform_int(rng, lo, hi);
      if (c != 0) f.add_term(m, c);
    }
    if (!f.is_zero()) return f;
  }
}

std::vector<Rational> random_point(int n, Rng& rng, long bound) {
  for (;;) {
    std::vector<Rational> p;
    bool nonzero = false;
    for (int i = 0; i <= n; ++i) {
      long num = uniform_int(rng, -bound, bound);
      nonzero = nonzero || num != 0;
      p.push_back(make_rational(num, uniform_int(rng, 1, 3)));
    }
    if (nonzero) return p;
  }
}

std::vector<std::vector<Rational>> random_distinct_points_p1(int count, Rng& rng, long bound) {
  std::vector<std::vector<Rational>> out;
  while (static_cast<int>(out.size()) < count) {
    auto p = random_point(1, rng, bound);
    bool fresh = true;
    for (const auto& q : out)
      if (p[0] * q[1] == p[1] * q[0]) fresh = false;
    if (fresh) out.push_back(std::move(p));
  }
  return out;
}

Rational random_weight(Rng& rng, long bound) {
  for (;;) {
    long num = uniform_int(rng, -bound, bound);
    if (num != 0) return make_rational(num, uniform_int(rng, 1, 4));
  }
}

Form substitute_linear(const Form& f, const std::vector<std::vector<Rational>>& m) {
  // Expand through ordinary powers, where substitution is multiplicative.
  const int n = f.n();
  if (static_cast<int>(m.size()) != n + 1) throw DomainError("substitute_linear: matrix size mismatch");
  std::vector<Form> images;
  for (int i = 0; i <= n; ++i) {
    Vector col;
    for (int k = 0; k <= n; ++k) col.push_back(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
    images.push_back(Form::linear(col));
  }
  Form out(n, f.degree());
  for (const auto& [mono, c] : to_ordinary_powers(f).terms()) {
    Form term = Form::from_monomial(Monomial::one(n), c);
    for (int i = 0; i <= n; ++i)
      for (unsigned k = 0; k < mono[static_cast<std::size_t>(i)]; ++k) term = term * images[static_cast<std::size_t>(i)];
    out = out + term;
  }
  return to_divided_powers(out);
}

std::vector<std::vector<Rational>> random_invertible(int size, Rng& rng) {
  for (;;) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    std::vector<Vector> rows;
    for (auto& row : m) {
      for (auto& x : row) x = uniform_int(rng, -3, 3);
      rows.push_back(row);
    }
    if (rank(Matrix::from_rows(rows)) == static_cast<std::size_t>(size)) return m;
  }
}

}  // namespace apolar
