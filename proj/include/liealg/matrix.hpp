#ifndef LIEALG_MATRIX_HPP
#define LIEALG_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "liealg/rational.hpp"

namespace liealg {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Integer literal rows, e.g. Matrix{{1, 2}, {0, 1}}. All rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(std::size_t n);
  /// Stacks the vectors as rows; `cols` is used when the list is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector col_vector(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  const std::vector<Rational>& entries() const { return entries_; }

  Matrix transpose() const;
  /// Matrix-vector product m·v.
  Vector apply(const Vector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  Matrix reduced;                   ///< reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;  ///< strictly increasing pivot columns
};

/// Gauss-Jordan elimination with leading-1 normalization.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m·v = 0}, one vector per row, in RREF.
Matrix kernel(const Matrix& m);

/// Throws std::invalid_argument when cols(a) != rows(b).
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Throws std::invalid_argument for non-square input.
Rational trace(const Matrix& m);

/// tr(a·b) without forming the product.
Rational trace_of_product(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Stacks a on top of b (equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace liealg

#endif  // LIEALG_MATRIX_HPP
