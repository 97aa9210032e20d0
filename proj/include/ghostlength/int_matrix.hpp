#pragma once

// Dense matrices of arbitrary-precision integers.
//
// Column j of a matrix is the image of the j-th source basis vector, so a
// matrix with `rows` rows and `cols` columns represents a homomorphism
// Z^cols -> Z^rows. Storage is row-major.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace ghostlength {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  // All rows must share one length; `cols` fixes the width when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, const IntVector& v);

  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

  // Largest absolute value of any entry; zero for an empty matrix.
  Integer max_abs() const;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_columns(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  // rows (i, j) <- (a*ri + b*rj, c*ri + d*rj)
  void combine_rows(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                    const Integer& c, const Integer& d);
  // columns (i, j) <- (a*ci + b*cj, c*ci + d*cj)
  void combine_columns(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                       const Integer& c, const Integer& d);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& s, const IntMatrix& a);
IntVector operator*(const IntMatrix& a, const IntVector& x);

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
// [[a, b], [c, d]]; blocks must agree in their shared dimensions.
IntMatrix block2x2(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                   const IntMatrix& d);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

// Entries reduced into [0, m). m == 0 leaves the matrix unchanged.
IntMatrix reduce_mod(const IntMatrix& a, const Integer& m);

bool is_zero(const IntVector& v);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace ghostlength
