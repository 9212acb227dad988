#include "apolar/matrix.hpp"

#include "apolar/errors.hpp"

#include <utility>

namespace apolar {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t size) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DomainError("from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DomainError("apply: dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix product: dimension mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& q : data_)
    if (sgn(q) != 0) return false;
  return true;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows integer_rows(const Matrix& m) {
  IntRows rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector v = m.row(r);
    Integer lcm = 1;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    rows[r].reserve(v.size());
    for (const auto& q : v) rows[r].push_back(q.get_num() * (lcm / q.get_den()));
  }
  return rows;
}

// Bareiss forward elimination. On return the first pivots.size() rows are in
// echelon form; every entry is a minor of the (row-permuted) input, so the
// division by the previous pivot is exact.
std::vector<std::size_t> bareiss(IntRows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntRows a = integer_rows(m);
  return bareiss(a, m.cols()).size();
}

EchelonForm reduced_echelon(const Matrix& m) {
  EchelonForm out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.reduced = Matrix(0, m.cols());
    return out;
  }
  IntRows a = integer_rows(m);
  out.pivots = bareiss(a, m.cols());
  const std::size_t r = out.pivots.size();
  Matrix red(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& piv = a[i][out.pivots[i]];
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (a[i][j] != 0) red(i, j) = make_rational(a[i][j], piv);
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = out.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      Rational f = red(k, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t j = pc; j < m.cols(); ++j)
        if (sgn(red(i, j)) != 0) red(k, j) -= f * red(i, j);
    }
  }
  out.reduced = std::move(red);
  return out;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  EchelonForm ef = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < ef.pivots.size(); ++k) v[ef.pivots[k]] = -ef.reduced(k, f);
    Vector scaled;
    scaled.reserve(v.size());
    for (auto& x : primitive_integer_vector(v)) scaled.emplace_back(x);
    basis.push_back(std::move(scaled));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw DomainError("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  EchelonForm ef = reduced_echelon(aug);
  Vector x(m.cols());
  for (std::size_t k = 0; k < ef.pivots.size(); ++k) {
    if (ef.pivots[k] == m.cols()) return std::nullopt;
    x[ef.pivots[k]] = ef.reduced(k, m.cols());
  }
  return x;
}

}  // namespace apolar
