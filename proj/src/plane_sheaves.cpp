#include "apolar/plane_sheaves.hpp"

#include "apolar/errors.hpp"

namespace apolar {

namespace {

Rational exceptional_delta(long r) {
  Rational rr(r);
  return (1 - 1 / (rr * rr)) / 2;
}

void refine(const ExceptionalSlope& a, const ExceptionalSlope& b, long bound,
            std::vector<ExceptionalSlope>& out) {
  const Rational gap = 3 + a.slope - b.slope;
  const Rational r = Rational(a.rank) * b.rank * gap;
  if (r.get_den() != 1) throw DomainError("exceptional_slopes: non-integral mutation rank");
  if (r > bound) return;
  ExceptionalSlope c{(a.slope + b.slope) / 2 + (b.delta - a.delta) / gap, r.get_num().get_si(),
                     exceptional_delta(r.get_num().get_si())};
  refine(a, c, bound, out);
  out.push_back(c);
  refine(c, b, bound, out);
}

Rational floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Rational ch1_of(long r, const Rational& chi_prime) {
  Rational ch1 = chi_prime - make_rational(3 * r, 2);
  if (ch1.get_den() != 1)
    throw DomainError("m_r: chi' - 3r/2 must be an integer (r = " + std::to_string(r) +
                      ", chi' = " + to_string(chi_prime) + ")");
  return ch1;
}

// Largest ch2 in ch1^2/2 + Z with ch1^2 - 2 r ch2 >= 0.
Rational max_ch2(long r, const Rational& ch1) {
  const Rational base = ch1 * ch1 / 2;
  const Rational excess = base - ch1 * ch1 / (2 * Rational(r));
  Integer k;
  mpz_cdiv_q(k.get_mpz_t(), excess.get_num_mpz_t(), excess.get_den_mpz_t());
  return base - Rational(k);
}

}  // namespace

std::vector<ExceptionalSlope> exceptional_slopes(long rank_bound) {
  const ExceptionalSlope lo{0, 1, 0}, hi{1, 1, 0};
  std::vector<ExceptionalSlope> out{lo};
  refine(lo, hi, rank_bound, out);
  out.push_back(hi);
  return out;
}

bool semistable_exists(long r, const Rational& mu, const Rational& delta, long rank_bound) {
  if (r < 1) throw DomainError("semistable_exists: rank must be positive");
  const auto slopes = exceptional_slopes(rank_bound);
  const Rational base = floor_of(mu);
  for (int k = -1; k <= 1; ++k)
    for (const auto& ex : slopes) {
      const Rational alpha = ex.slope + base + k;
      const Rational u = abs(mu - alpha);
      if (sgn(u) == 0 && delta == ex.delta && r % ex.rank == 0) return true;
      const Rational w = 3 - 2 * u;
      if (sgn(w) <= 0 || w * w <= 5 + 8 * ex.delta) continue;
      // mu lies in the interval around alpha; the boundary is P(-u) - delta_alpha.
      const Rational bound = u * u / 2 - Rational(3, 2) * u + 1 - ex.delta;
      return delta >= bound;
    }
  throw BoundaryError("no exceptional interval contains slope " + to_string(mu) +
                      " (rank bound " + std::to_string(rank_bound) + ")");
}

bool chi_prime_admissible(long r, const Rational& chi_prime) {
  return Rational(chi_prime - make_rational(3 * r, 2)).get_den() == 1;
}

Rational m_r_naive(long r, const Rational& chi_prime) {
  if (r < 1) throw DomainError("m_r: rank must be positive");
  const Rational ch1 = ch1_of(r, chi_prime);
  return Rational(r) + Rational(3, 2) * ch1 + max_ch2(r, ch1);
}

Rational m_r_dlp(long r, const Rational& chi_prime, long rank_bound) {
  if (r < 1) throw DomainError("m_r: rank must be positive");
  const Rational ch1 = ch1_of(r, chi_prime);
  const Rational mu = ch1 / r;
  Rational ch2 = max_ch2(r, ch1);
  for (;;) {
    const Rational delta = mu * mu / 2 - ch2 / r;
    if (semistable_exists(r, mu, delta, rank_bound)) break;
    ch2 -= 1;
  }
  return Rational(r) + Rational(3, 2) * ch1 + ch2;
}

const MrCell* MrTable::find(long r, const Rational& chi_prime) const {
  for (const auto& c : cells)
    if (c.r == r && c.chi_prime == chi_prime) return &c;
  return nullptr;
}

MrTable mr_table() {
  MrTable t;
  for (long k = 1; k <= 9; ++k) t.columns.push_back(make_rational(k, 2));
  t.rows = {1, 2, 3};
  for (long r : t.rows)
    for (const auto& x : t.columns) {
      if (!chi_prime_admissible(r, x)) continue;
      if (x - make_rational(3 * r, 2) < -1) continue;
      t.cells.push_back({r, x, m_r_naive(r, x), m_r_dlp(r, x)});
    }
  return t;
}

}  // namespace apolar
