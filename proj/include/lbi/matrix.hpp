#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbi/integer.hpp"

namespace lbi {

/// Dense row-major matrix of arbitrary precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Throws MalformedInput when the rows are ragged.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs) = default;

  // Elementary operations, used by the normal form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix& m);

/// Determinant of a square matrix.
Int determinant(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... and all
/// d_k >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal of D, length min(rows, cols).
  std::vector<Int> elementary_divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: U * M = H with U unimodular, H in row
/// echelon form with positive pivots and entries above each pivot reduced into
/// [0, pivot).
struct HermiteForm {
  IntMatrix U;
  IntMatrix H;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

/// The n x 2 input matrix B of a codimension two lattice basis ideal.
class BMatrix {
 public:
  /// Throws MalformedInput unless the matrix has two columns and at least two
  /// rows, RankDeficient unless its rank is 2.
  explicit BMatrix(IntMatrix entries);

  std::size_t n() const noexcept { return entries_.rows(); }
  const Int& operator()(std::size_t k, std::size_t col) const { return entries_(k, col); }
  const IntMatrix& matrix() const noexcept { return entries_; }

 private:
  IntMatrix entries_;
};

/// An (n-2) x n grading matrix with A * B = 0 whose columns span Z^{n-2}.
class AMatrix {
 public:
  /// Throws InvalidA when the invariants fail for the given B.
  AMatrix(IntMatrix entries, const BMatrix& b);

  const IntMatrix& matrix() const noexcept { return entries_; }
  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }

 private:
  IntMatrix entries_;
};

/// Checks both grading invariants without throwing.
bool is_valid_grading(const IntMatrix& a, const BMatrix& b);

/// Parses whitespace separated integer rows, or {"rows": [[..], ..]}.
/// Throws MalformedInput on syntax errors or ragged rows.
IntMatrix parse_int_matrix(std::string_view text);

/// parse_int_matrix plus the BMatrix checks (two columns, rank 2).
BMatrix parse_matrix(std::string_view text);

/// Grading matrix built from the Smith form of B: the trailing n-2 rows of
/// the left transform, brought to Hermite normal form. For n = 2 the result is
/// the empty 0 x 2 matrix.
AMatrix cokernel(const BMatrix& b);

struct PairAnalysis {
  std::size_t i = 0;  // 0-based, i < j
  std::size_t j = 0;
  bool opposite_open_quadrants = false;
  bool dependent = false;
  std::optional<Rat> lambda;  // -b_{j1}/b_{i1}, only for dependent opposite pairs
  std::optional<Int> d;       // gcd(|b_{i1}|, |b_{i2}|), same condition
};

/// One entry per unordered pair of rows, in lexicographic order.
std::vector<PairAnalysis> analyze_pairs(const BMatrix& b);

/// Whether some nonzero rational combination of the columns of B is
/// coordinatewise nonnegative. Decided exactly through the 2n candidate rays
/// +-(b_{k2}, -b_{k1}).
bool has_nonneg_column_span_direction(const BMatrix& b);

/// Whether the cone spanned by the columns of any grading matrix A for B
/// contains no line. Differs from !has_nonneg_column_span_direction only when
/// some A has a zero column, which happens exactly when a unit vector lies in
/// the column span of B.
bool grading_cone_is_pointed(const BMatrix& b);

}  // namespace lbi
