#pragma once

#include "apolar/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace apolar {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t size);
  /// All rows must have the same length.
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Matrix transpose() const;
  Vector apply(std::span<const Rational> v) const;
  Matrix operator*(const Matrix& other) const;
  bool is_zero() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  Matrix reduced;                   ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  ///< pivot column of each row of `reduced`
};

/// Reduced row echelon form. Elimination runs fraction-free on integer rows.
EchelonForm reduced_echelon(const Matrix& m);

/// Exact rank over the rationals.
std::size_t rank(const Matrix& m);

/// Basis of the right kernel, one vector per free column (in column order).
/// Each vector has coprime integer entries with first nonzero entry positive.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some solution x of m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

}  // namespace apolar
