#pragma once

// Dense exact linear algebra over a prime field GF(p).
//
// Every basis returned here is canonical: kernel and image bases are read off
// reduced row echelon forms, so equal subspaces always produce identical
// matrices. Downstream set computations (submodule dedupe, subcategory keys)
// rely on this.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ietilt {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

class Field {
 public:
  /// Throws InvalidInput unless `p` is prime.
  explicit Field(Scalar p = 2);

  Scalar p() const { return p_; }

  Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>((std::uint64_t{a} + b) % p_); }
  Scalar sub(Scalar a, Scalar b) const { return static_cast<Scalar>((std::uint64_t{a} + p_ - b) % p_); }
  Scalar mul(Scalar a, Scalar b) const { return static_cast<Scalar>((std::uint64_t{a} * b) % p_); }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar inv(Scalar a) const;
  Scalar reduce(std::int64_t a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Scalar p_;
};

bool is_prime(std::uint64_t n);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Row-major entries; each entry is reduced mod p.
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = v % field_.p(); }
  const std::vector<Scalar>& entries() const { return data_; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Scalar s) const;

  /// Places `rhs` to the right of this matrix.
  Matrix hconcat(const Matrix& rhs) const;
  /// Places `rhs` below this matrix.
  Matrix vconcat(const Matrix& rhs) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of {x : a x = 0}; one vector per free column, with a 1 in that column.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Echelon-canonical particular solution of a x = b (free variables set to 0).
/// Throws InvalidInput when b has the wrong length.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Canonical basis of the column space: the nonzero rows of rref(aᵀ).
std::vector<Vector> image_basis(const Matrix& a);

/// Kernel and image bases packed as the columns of a matrix with `a.rows()`
/// (image) or `a.cols()` (kernel) rows.
Matrix kernel_matrix(const Matrix& a);
Matrix image_matrix(const Matrix& a);

/// Columns form the canonical basis of the span of the columns of `a`.
Matrix canonical_span(const Matrix& a);

bool is_invertible(const Matrix& a);

/// X with a X = I for a full-row-rank `a`.
Matrix right_inverse(const Matrix& a);

/// Coordinates of each column of `target` in the (independent) columns of `basis`.
/// Throws InvalidInput if some column is outside the span.
Matrix coordinates(const Matrix& basis, const Matrix& target);

}  // namespace ietilt
