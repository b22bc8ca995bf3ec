#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace fishlab {

/// A square upper-triangular matrix of nonnegative integers. Rows and columns
/// are 1-based, row 1 on top and column 1 on the left. Zero rows and columns
/// are representable; class membership is decided by classify().
class TriMatrix {
public:
  /// The m x m zero matrix. Throws InputError for m < 1.
  explicit TriMatrix(int dim);

  /// Throws InputError unless rows is square, nonnegative and upper triangular.
  static TriMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int dim() const { return dim_; }
  int operator()(int row, int col) const { return cells_[index(row, col)]; }
  int& operator()(int row, int col) { return cells_[index(row, col)]; }

  std::vector<std::vector<int>> rows() const;
  /// Row-major cell values, including structural zeros.
  const std::vector<int>& cells() const { return cells_; }

  /// Sum of all entries.
  long weight() const;
  /// A[k], the leading k x k block.
  TriMatrix leading(int k) const;
  bool zero_row(int row) const;
  bool zero_column(int col) const;

  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;
  /// Dimension first, then row-major lexicographic.
  friend std::strong_ordering operator<=>(const TriMatrix& a, const TriMatrix& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * dim_ + (col - 1);
  }

  int dim_;
  std::vector<int> cells_;
};

struct ColumnExtremes {
  int rmin;
  int rmax;
  friend bool operator==(const ColumnExtremes&, const ColumnExtremes&) = default;
};

/// Smallest and largest rows with a positive entry in column j.
/// Throws DomainError for a zero column.
ColumnExtremes column_extremes(const TriMatrix& a, int j);

struct MatrixClass {
  bool fishburn = false;           ///< no zero row, no zero column
  bool column_restricted = false;  ///< no zero column, rmax_{j+1} > rmin_j
};

MatrixClass classify(const TriMatrix& a);

/// Smallest row that is zero outside the last column. Fishburn input only.
int index_row(const TriMatrix& a);

/// With i = rmax_m(A): identity when i = m; otherwise A[m-1] gets a zero row
/// and column inserted at position i, the new column takes the top i-1
/// entries of the last column, and the top i entries of the last column are
/// restored from A. Requires A[m-1] Fishburn and rmin_{m-1}(A) < rmax_m(A).
TriMatrix alpha(const TriMatrix& a);

/// Inverse of alpha for Fishburn input, driven by i = index(A).
TriMatrix beta(const TriMatrix& a);

/// Variant of alpha: after the insertion, the top i rows of the columns
/// c_1 < ... < c_l right of i that have a positive entry above row i are
/// shifted one step left along c_0 = i, c_1, ..., c_l.
TriMatrix alpha_prime(const TriMatrix& a);

enum class Transform { alpha, beta, alpha_prime };

/// Applies the transformation to the leading k x k block only.
TriMatrix apply_leading(const TriMatrix& a, int k, Transform t);

/// alpha_m o ... o alpha_1. Requires a column-restricted matrix.
TriMatrix theta(const TriMatrix& a);

/// The stages A^(0) = A, A^(i) = alpha_i(A^(i-1)), ..., A^(m) = theta(A).
std::vector<TriMatrix> theta_stages(const TriMatrix& a);

/// beta_1 o ... o beta_m. Requires a Fishburn matrix.
TriMatrix theta_inv(const TriMatrix& b);

/// alpha'_m o ... o alpha'_1. Requires a column-restricted matrix.
TriMatrix theta_bar(const TriMatrix& a);

/// All Fishburn matrices of weight n, by dimension then row-major order.
std::vector<TriMatrix> enumerate_fishburn(int n);

/// All column-restricted matrices of weight n, same order.
std::vector<TriMatrix> enumerate_column_restricted(int n);

} // namespace fishlab
