#include "apolar/errors.hpp"
#include "apolar/matrix.hpp"
#include "apolar/monomial.hpp"
#include "apolar/sampling.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace apolar;

namespace {

// Cofactor expansion; independent of the elimination code.
Rational det(const std::vector<Vector>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Vector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const Rational term = a[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<Vector> sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          Vector row;
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) row.push_back(m(r, c));
          sub.push_back(row);
        }
        if (det(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long lo, long hi) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = make_rational(uniform_int(rng, lo, hi), uniform_int(rng, 1, 3));
  return m;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(parse_rational("-7/21") == make_rational(-1, 3));
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(3, -1) == 0);
  CHECK(factorial(6) == 720);
  CHECK(gen_binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
  const auto v = primitive_integer_vector({make_rational(-1, 2), make_rational(3, 4), 0});
  CHECK(v == std::vector<Integer>{2, -3, 0});
}

TEST_CASE("monomial basis is grevlex and complete") {
  for (int n = 0; n <= 3; ++n) {
    for (int e = 0; e <= 5; ++e) {
      const auto basis = monomial_basis(n, e);
      CHECK(static_cast<long>(basis.size()) == binomial(n + e, n).get_si());
      for (std::size_t k = 0; k + 1 < basis.size(); ++k) {
        // grevlex: the last differing exponent is smaller in the larger monomial
        const auto& a = basis[k].exponents();
        const auto& b = basis[k + 1].exponents();
        int last = n;
        while (last >= 0 && a[last] == b[last]) --last;
        REQUIRE(last >= 0);
        CHECK(a[last] < b[last]);
        CHECK(basis[k] > basis[k + 1]);
      }
      for (std::size_t k = 0; k < basis.size(); ++k) CHECK(basis_index(basis, basis[k]) == k);
    }
  }
  const Monomial m({1, 2, 0});
  CHECK(Monomial::variable(2, 1).divides(m));
  CHECK(Monomial::variable(2, 1).quotient_of(m) == Monomial({1, 1, 0}));
  CHECK(m * Monomial::one(2) == m);
}

TEST_CASE("rank agrees with minors on seeded matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = uniform_int(rng, 1, 4), cols = uniform_int(rng, 1, 4);
    // low-rank products make deficient ranks common
    const std::size_t inner = uniform_int(rng, 1, 4);
    const Matrix m = random_matrix(rows, inner, rng, -3, 3) * random_matrix(inner, cols, rng, -3, 3);
    CHECK(rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("echelon form, kernel and solve") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = uniform_int(rng, 1, 5), cols = uniform_int(rng, 1, 6);
    const Matrix m = trial % 2 == 0
                         ? random_matrix(rows, 2, rng, -4, 4) * random_matrix(2, cols, rng, -4, 4)
                         : random_matrix(rows, cols, rng, -2, 2);
    const EchelonForm ef = reduced_echelon(m);
    CHECK(ef.pivots.size() == rank(m));
    CHECK(reduced_echelon(ef.reduced).reduced == ef.reduced);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
      CHECK(ef.reduced(r, ef.pivots[r]) == 1);
      for (std::size_t s = 0; s < ef.pivots.size(); ++s)
        if (s != r) CHECK(ef.reduced(s, ef.pivots[r]) == 0);
    }
    const auto kernel = kernel_basis(m);
    CHECK(kernel.size() == cols - rank(m));
    for (const Vector& v : kernel) {
      for (const Rational& x : m.apply(v)) CHECK(x == 0);
      const auto prim = primitive_integer_vector(v);
      for (std::size_t k = 0; k < v.size(); ++k) CHECK(Rational(prim[k]) == v[k]);
    }
    Vector x(cols);
    for (auto& c : x) c = make_rational(uniform_int(rng, -5, 5), uniform_int(rng, 1, 4));
    const Vector b = m.apply(x);
    const auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
  }
}

TEST_CASE("inconsistent systems") {
  const Matrix m = Matrix::from_rows({{1, 1}, {2, 2}});
  const Vector b{1, 3};
  CHECK_FALSE(solve(m, b).has_value());
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(Matrix::identity(3).transpose() == Matrix::identity(3));
  CHECK(Matrix(2, 3).is_zero());
}
