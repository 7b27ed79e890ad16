#pragma once

// Exact integer matrices and the lattice algorithms the topology modules need:
// rank, determinant, saturated kernels, cokernel representatives and Smith
// normal form. Everything is int64 with overflow-checked arithmetic.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace geographer {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Non-negative gcd of all entries; 0 for an empty or zero vector.
Int content(std::span<const Int> v);

/// A vector is primitive when the gcd of its entries is 1.
bool is_primitive(std::span<const Int> v);

/// Dense row-major integer matrix with value semantics.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  /// Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_skew_symmetric() const;

  void swap_columns(std::size_t i, std::size_t j);
  /// column j += factor * column i
  void add_column_multiple(std::size_t j, std::size_t i, Int factor);
  void negate_column(std::size_t j);
  void swap_rows(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t j, std::size_t i, Int factor);
  void negate_row(std::size_t j);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const Int> v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix scaled(const IntMatrix& a, Int factor);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix& a);

/// Bareiss determinant of a square matrix.
Int determinant(const IntMatrix& a);

/// Result of unimodular column reduction: `input * transform == reduced`,
/// where the first `rank` columns of `reduced` are in column Hermite form
/// (pivot rows strictly increasing, positive pivots, entries left of a pivot
/// reduced modulo it) and the remaining columns are zero.
struct ColumnEchelon {
  IntMatrix reduced;
  IntMatrix transform;
  std::size_t rank = 0;
};

ColumnEchelon column_echelon(const IntMatrix& a);

/// Rows of `b` replaced by the canonical Hermite basis of the lattice they span.
/// Zero rows are dropped.
IntMatrix row_hermite_basis(const IntMatrix& b);

/// Columns form a basis of ker(a) ∩ Z^n. The lattice is saturated and the
/// basis is canonical (row Hermite form of its transpose).
IntMatrix kernel_basis(const IntMatrix& a);

/// Columns are representatives in Z^m of a basis of the free part of
/// Z^m / im(a), i.e. of Z^m / sat(im a). Standard basis vectors are
/// preferred (greedily, in index order) whenever they form such a basis.
IntMatrix cokernel_free_basis(const IntMatrix& a);

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
std::vector<Int> elementary_divisors(const IntMatrix& a);

}  // namespace geographer
