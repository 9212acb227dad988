#pragma once

#include "apolar/apolarity.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace apolar {

/// Coordinates on R_e = S_e / I_e by standard monomials.
struct QuotientPiece {
  std::vector<Monomial> standard;  ///< non-pivot columns of the echelon form of I_e
  Matrix projector;                ///< h_e x dim S_e normal-form map
};

struct QuotientBasis {
  int n = 0;
  int d = 0;
  std::vector<QuotientPiece> pieces;  ///< degrees 0..d

  /// Coordinates of f in R_e; zero for e outside [0, d].
  Vector normal_form(const Form& f) const;
};

QuotientBasis quotient_bases(const Socle& g);

/// Largest supported (n, d) for Koszul homology.
inline constexpr int kMaxBettiN = 3;
inline constexpr int kMaxBettiD = 6;

/// Alternating sign of the Koszul differential: (-1)^p for the p-th wedge factor,
/// or the mirrored (-1)^(i-1-p). Both give the same homology.
enum class KoszulSign { standard, mirrored };

/// Matrix of Lambda^i V (x) R_k -> Lambda^(i-1) V (x) R_(k+1).
/// Columns are ordered by (subset, standard monomial), subsets in lex order.
Matrix koszul_differential(const QuotientBasis& q, int i, int k,
                           KoszulSign sign = KoszulSign::standard);

class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int n, int d) : n_(n), d_(d) {}

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int at(int i, int j) const;
  void set(int i, int j, int b);
  /// Nonzero entries keyed by (i, j).
  const std::map<std::pair<int, int>, int>& entries() const noexcept { return entries_; }

  /// rows r = j - i in 0..d, columns i in 0..n+1.
  std::vector<std::vector<int>> grid() const;

  bool operator==(const BettiTable& other) const = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::map<std::pair<int, int>, int> entries_;
};

/// Throws EnvelopeError outside n <= 3, d <= 6.
BettiTable koszul_betti(const Socle& g, KoszulSign sign = KoszulSign::standard);

bool check_duality(const BettiTable& t);
bool check_euler(const BettiTable& t);
HilbertFunction hf_from_betti(const BettiTable& t);

/// Columns i = 1, 2 of rows r = 0..d. Requires n = 2.
std::vector<std::pair<int, int>> interior_square(const BettiTable& t);

/// Fixed-width grid, one line per row r = j - i.
std::string to_text(const BettiTable& t);

}  // namespace apolar
