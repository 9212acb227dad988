#include "apolar/resolution.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <sstream>

namespace apolar {

namespace {

QuotientPiece make_piece(const Socle& g, int e) {
  const auto basis = monomial_basis(g.n(), e);
  const auto ideal = apolar_piece(g, e);
  QuotientPiece piece;
  EchelonForm ech;
  if (!ideal.empty()) ech = reduced_echelon(Matrix::from_rows(ideal));
  std::vector<bool> is_pivot(basis.size(), false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < basis.size(); ++c)
    if (!is_pivot[c]) {
      free_cols.push_back(c);
      piece.standard.push_back(basis[c]);
    }
  piece.projector = Matrix(free_cols.size(), basis.size());
  for (std::size_t s = 0; s < free_cols.size(); ++s) piece.projector(s, free_cols[s]) = 1;
  for (std::size_t k = 0; k < ech.pivots.size(); ++k)
    for (std::size_t s = 0; s < free_cols.size(); ++s)
      piece.projector(s, ech.pivots[k]) = -ech.reduced(k, free_cols[s]);
  return piece;
}

std::vector<std::vector<int>> subsets(int size, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < size; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  if (k >= 0 && k <= size) rec(rec, 0);
  return out;
}

}  // namespace

Vector QuotientBasis::normal_form(const Form& f) const {
  const int e = f.degree();
  if (e < 0 || e > d) return {};
  return pieces[static_cast<std::size_t>(e)].projector.apply(f.coefficients());
}

QuotientBasis quotient_bases(const Socle& g) {
  QuotientBasis q;
  q.n = g.n();
  q.d = g.d();
  for (int e = 0; e <= g.d(); ++e) q.pieces.push_back(make_piece(g, e));
  return q;
}

Matrix koszul_differential(const QuotientBasis& q, int i, int k, KoszulSign sign) {
  const int vars = q.n + 1;
  auto dim = [&](int e) -> std::size_t {
    return e >= 0 && e <= q.d ? q.pieces[static_cast<std::size_t>(e)].standard.size() : 0;
  };
  const auto src = subsets(vars, i);
  const auto dst = subsets(vars, i - 1);
  const std::size_t hs = dim(k), ht = dim(k + 1);
  Matrix out(dst.size() * ht, src.size() * hs);
  if (hs == 0 || ht == 0 || src.empty() || dst.empty()) return out;
  const auto basis_next = monomial_basis(q.n, k + 1);
  const Matrix& proj = q.pieces[static_cast<std::size_t>(k + 1)].projector;
  const auto& standard = q.pieces[static_cast<std::size_t>(k)].standard;
  for (std::size_t a = 0; a < src.size(); ++a) {
    const auto& t = src[a];
    for (int p = 0; p < i; ++p) {
      std::vector<int> rest(t);
      rest.erase(rest.begin() + p);
      const std::size_t b = static_cast<std::size_t>(std::lower_bound(dst.begin(), dst.end(), rest) - dst.begin());
      const int exponent = sign == KoszulSign::standard ? p : i - 1 - p;
      const int s = exponent % 2 == 0 ? 1 : -1;
      const Monomial x = Monomial::variable(q.n, t[static_cast<std::size_t>(p)]);
      for (std::size_t r = 0; r < hs; ++r) {
        const std::size_t col = basis_index(basis_next, x * standard[r]);
        for (std::size_t u = 0; u < ht; ++u) {
          const Rational& v = proj(u, col);
          if (sgn(v) != 0) out(b * ht + u, a * hs + r) += s * v;
        }
      }
    }
  }
  return out;
}

int BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, int b) {
  if (b < 0) throw DomainError("BettiTable: negative entry");
  if (b == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = b;
}

std::vector<std::vector<int>> BettiTable::grid() const {
  std::vector<std::vector<int>> g(static_cast<std::size_t>(d_) + 1,
                                  std::vector<int>(static_cast<std::size_t>(n_) + 2, 0));
  for (int r = 0; r <= d_; ++r)
    for (int i = 0; i <= n_ + 1; ++i) g[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = at(i, i + r);
  return g;
}

BettiTable koszul_betti(const Socle& g, KoszulSign sign) {
  if (g.n() > kMaxBettiN || g.d() > kMaxBettiD)
    throw EnvelopeError("koszul_betti supports n <= " + std::to_string(kMaxBettiN) + " and d <= " +
                        std::to_string(kMaxBettiD) + ", got n = " + std::to_string(g.n()) +
                        ", d = " + std::to_string(g.d()));
  const QuotientBasis q = quotient_bases(g);
  const int n = g.n(), d = g.d();
  // ranks[i][k] = rank of the differential leaving Lambda^i (x) R_k.
  std::vector<std::vector<long>> ranks(static_cast<std::size_t>(n) + 3,
                                       std::vector<long>(static_cast<std::size_t>(d) + 2, 0));
  for (int i = 1; i <= n + 1; ++i)
    for (int k = 0; k < d; ++k)
      ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          static_cast<long>(rank(koszul_differential(q, i, k, sign)));
  BettiTable t(n, d);
  for (int i = 0; i <= n + 1; ++i)
    for (int k = 0; k <= d; ++k) {
      long dim = binomial(n + 1, i).get_si() * static_cast<long>(q.pieces[static_cast<std::size_t>(k)].standard.size());
      long out_rank = ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      long in_rank = k > 0 ? ranks[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(k) - 1] : 0;
      t.set(i, i + k, static_cast<int>(dim - out_rank - in_rank));
    }
  return t;
}

bool check_duality(const BettiTable& t) {
  const int n = t.n(), d = t.d();
  for (const auto& [key, b] : t.entries())
    if (t.at(n + 1 - key.first, n + 1 + d - key.second) != b) return false;
  return true;
}

bool check_euler(const BettiTable& t) {
  for (int e = 0; e <= t.n(); ++e) {
    Integer sum = 0;
    for (const auto& [key, b] : t.entries()) {
      Integer term = b;
      for (int k = 0; k < e; ++k) term *= key.second;
      sum += key.first % 2 == 0 ? term : Integer(-term);
    }
    if (sum != 0) return false;
  }
  return true;
}

HilbertFunction hf_from_betti(const BettiTable& t) {
  HilbertFunction h;
  for (int e = 0; e <= t.d(); ++e) {
    Integer sum = 0;
    for (const auto& [key, b] : t.entries()) {
      if (e < key.second) continue;
      Integer term = binomial(t.n() + e - key.second, t.n()) * b;
      sum += key.first % 2 == 0 ? term : Integer(-term);
    }
    h.push_back(static_cast<int>(sum.get_si()));
  }
  return h;
}

std::vector<std::pair<int, int>> interior_square(const BettiTable& t) {
  if (t.n() != 2) throw DomainError("interior_square: requires n = 2");
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r <= t.d(); ++r) out.emplace_back(t.at(1, 1 + r), t.at(2, 2 + r));
  return out;
}

std::string to_text(const BettiTable& t) {
  const auto g = t.grid();
  std::size_t width = 1;
  for (const auto& row : g)
    for (int b : row) width = std::max(width, std::to_string(b).size());
  std::ostringstream out;
  for (const auto& row : g) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string cell = std::to_string(row[i]);
      if (i > 0) out << ' ';
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace apolar
