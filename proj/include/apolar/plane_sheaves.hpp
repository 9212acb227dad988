#pragma once

#include "apolar/rational.hpp"

#include <optional>
#include <vector>

namespace apolar {

/// An exceptional bundle on the plane: slope, rank and normalized
/// discriminant (1 - 1/r^2) / 2.
struct ExceptionalSlope {
  Rational slope;
  long rank = 1;
  Rational delta;
};

inline constexpr long kDefaultExceptionalRankBound = 13;

/// Exceptional slopes in [0, 1] with rank <= bound, increasing, built by mutation
/// from O and O(1).
std::vector<ExceptionalSlope> exceptional_slopes(long rank_bound = kDefaultExceptionalRankBound);

/// Whether a semistable sheaf with rank r, slope mu and normalized discriminant
/// delta = mu^2/2 - ch2/r exists. Throws BoundaryError when mu lies in no
/// interval of the generated exceptional slopes.
bool semistable_exists(long r, const Rational& mu, const Rational& delta,
                       long rank_bound = kDefaultExceptionalRankBound);

/// max chi over ch2 in ch1^2/2 + Z with discriminant >= 0, ch1 = chi' - 3r/2.
Rational m_r_naive(long r, const Rational& chi_prime);

/// As m_r_naive, additionally requiring a semistable sheaf to exist.
Rational m_r_dlp(long r, const Rational& chi_prime,
                 long rank_bound = kDefaultExceptionalRankBound);

/// Whether chi' - 3r/2 is an integer.
bool chi_prime_admissible(long r, const Rational& chi_prime);

struct MrCell {
  long r = 0;
  Rational chi_prime;
  Rational naive;
  Rational dlp;
};

/// Rows r = 1..3 and columns chi' = 1/2, 1, ..., 9/2; a cell is present when
/// ch1 is an integer >= -1.
struct MrTable {
  std::vector<Rational> columns;
  std::vector<long> rows;
  std::vector<MrCell> cells;

  const MrCell* find(long r, const Rational& chi_prime) const;
};

MrTable mr_table();

}  // namespace apolar
