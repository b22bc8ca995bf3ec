#include "fishlab/matrices.hpp"

#include "fishlab/error.hpp"
#include "fishlab/parallel.hpp"

#include <string>

namespace fishlab {
namespace {

std::string str(int v) { return std::to_string(v); }

// The (m+1) x (m+1) matrix with a zero row and column inserted so that they
// become row/column `at`; at = m+1 appends them.
TriMatrix insert_zero_line(const TriMatrix& a, int at) {
  const int m = a.dim();
  TriMatrix out(m + 1);
  auto shift = [at](int x) { return x < at ? x : x + 1; };
  for (int r = 1; r <= m; ++r)
    for (int c = r; c <= m; ++c) out(shift(r), shift(c)) = a(r, c);
  return out;
}

// Drops row and column `at` and pads a zero row and column at the end.
TriMatrix delete_line_and_pad(const TriMatrix& a, int at) {
  const int m = a.dim();
  TriMatrix out(m);
  auto shift = [at](int x) { return x < at ? x : x - 1; };
  for (int r = 1; r <= m; ++r)
    for (int c = r; c <= m; ++c)
      if (r != at && c != at) out(shift(r), shift(c)) = a(r, c);
  return out;
}

// Hypotheses shared by alpha and alpha_prime. Returns rmax_m(A).
int check_alpha_input(const TriMatrix& a, const char* name) {
  const int m = a.dim();
  if (a.zero_column(m))
    throw DomainError(std::string(name) + ": last column is zero");
  const int i = column_extremes(a, m).rmax;
  if (m == 1) return i;
  if (!classify(a.leading(m - 1)).fishburn)
    throw DomainError(std::string(name) + ": leading block A[" + str(m - 1) +
                      "] is not a Fishburn matrix");
  if (column_extremes(a, m - 1).rmin >= i)
    throw DomainError(std::string(name) + ": rmin_" + str(m - 1) + " >= rmax_" + str(m));
  return i;
}

void require_fishburn(const TriMatrix& a, const char* name) {
  if (!classify(a).fishburn) throw DomainError(std::string(name) + ": not a Fishburn matrix");
}

void require_column_restricted(const TriMatrix& a, const char* name) {
  if (!classify(a).column_restricted)
    throw DomainError(std::string(name) + ": matrix is not column-restricted");
}

TriMatrix transform(const TriMatrix& a, Transform t) {
  switch (t) {
  case Transform::alpha: return alpha(a);
  case Transform::beta: return beta(a);
  case Transform::alpha_prime: return alpha_prime(a);
  }
  throw InputError("unknown transformation");
}

// Upper-triangular cells in row-major order, filled depth first with values
// in ascending order so that matrices come out in lexicographic order.
class WeightDistributor {
public:
  WeightDistributor(int dim, int weight, bool fishburn)
      : current_(dim), weight_(weight), fishburn_(fishburn) {}

  std::vector<TriMatrix> run() {
    fill(1, 1, weight_);
    return std::move(found_);
  }

private:
  void fill(int row, int col, int remaining) {
    const int m = current_.dim();
    if (row > m) {
      if (remaining == 0) found_.push_back(current_);
      return;
    }
    const int next_row = col == m ? row + 1 : row;
    const int next_col = col == m ? next_row : col + 1;
    for (int v = 0; v <= remaining; ++v) {
      current_(row, col) = v;
      if (accept(row, col, remaining - v)) fill(next_row, next_col, remaining - v);
    }
    current_(row, col) = 0;
  }

  // Checks that become decidable once (row, col) is assigned.
  bool accept(int row, int col, int remaining) const {
    const int m = current_.dim();
    if (col == row) {
      // Column `row` is complete.
      if (current_.zero_column(row)) return false;
      if (!fishburn_ && row >= 2 &&
          column_extremes(current_, row).rmax <= column_extremes(current_, row - 1).rmin)
        return false;
      if (!fishburn_) {
        int empty = 0;
        for (int j = row + 1; j <= m; ++j) empty += current_.zero_column(j) ? 1 : 0;
        if (remaining < empty) return false;
      }
    }
    if (col == m && fishburn_) {
      if (current_.zero_row(row)) return false;
      if (remaining < m - row) return false;
    }
    return true;
  }

  TriMatrix current_;
  int weight_;
  bool fishburn_;
  std::vector<TriMatrix> found_;
};

std::vector<TriMatrix> enumerate(int n, bool fishburn) {
  if (n < 1) throw InputError("weight must be positive, got " + str(n));
  return ordered_parallel_concat(static_cast<std::size_t>(n), [&](std::size_t k) {
    return WeightDistributor(static_cast<int>(k) + 1, n, fishburn).run();
  });
}

} // namespace

TriMatrix::TriMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw InputError("matrix dimension must be positive, got " + str(dim));
  cells_.assign(static_cast<std::size_t>(dim) * dim, 0);
}

TriMatrix TriMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int m = static_cast<int>(rows.size());
  TriMatrix out(m);
  for (int r = 1; r <= m; ++r) {
    const auto& row = rows[r - 1];
    if (static_cast<int>(row.size()) != m)
      throw InputError("row " + str(r) + " has " + str(static_cast<int>(row.size())) +
                       " entries, expected " + str(m));
    for (int c = 1; c <= m; ++c) {
      const int v = row[c - 1];
      if (v < 0) throw InputError("negative entry at (" + str(r) + ", " + str(c) + ")");
      if (c < r && v != 0)
        throw InputError("entry below the diagonal at (" + str(r) + ", " + str(c) + ")");
      out(r, c) = v;
    }
  }
  return out;
}

std::vector<std::vector<int>> TriMatrix::rows() const {
  std::vector<std::vector<int>> out(dim_);
  for (int r = 1; r <= dim_; ++r)
    out[r - 1].assign(cells_.begin() + (r - 1) * dim_, cells_.begin() + r * dim_);
  return out;
}

long TriMatrix::weight() const {
  long total = 0;
  for (int v : cells_) total += v;
  return total;
}

TriMatrix TriMatrix::leading(int k) const {
  if (k < 1 || k > dim_) throw InputError("leading block size " + str(k) + " out of range");
  TriMatrix out(k);
  for (int r = 1; r <= k; ++r)
    for (int c = r; c <= k; ++c) out(r, c) = (*this)(r, c);
  return out;
}

bool TriMatrix::zero_row(int row) const {
  for (int c = row; c <= dim_; ++c)
    if ((*this)(row, c) != 0) return false;
  return true;
}

bool TriMatrix::zero_column(int col) const {
  for (int r = 1; r <= col; ++r)
    if ((*this)(r, col) != 0) return false;
  return true;
}

ColumnExtremes column_extremes(const TriMatrix& a, int j) {
  if (j < 1 || j > a.dim()) throw InputError("column " + str(j) + " out of range");
  ColumnExtremes e{0, 0};
  for (int r = 1; r <= j; ++r) {
    if (a(r, j) > 0) {
      if (e.rmin == 0) e.rmin = r;
      e.rmax = r;
    }
  }
  if (e.rmin == 0) throw DomainError("column " + str(j) + " is zero");
  return e;
}

MatrixClass classify(const TriMatrix& a) {
  const int m = a.dim();
  bool zero_col = false, zero_row = false;
  for (int j = 1; j <= m; ++j) {
    zero_col = zero_col || a.zero_column(j);
    zero_row = zero_row || a.zero_row(j);
  }
  MatrixClass out;
  out.fishburn = !zero_col && !zero_row;
  if (!zero_col) {
    out.column_restricted = true;
    for (int j = 1; j < m && out.column_restricted; ++j)
      out.column_restricted = column_extremes(a, j + 1).rmax > column_extremes(a, j).rmin;
  }
  return out;
}

int index_row(const TriMatrix& a) {
  require_fishburn(a, "index");
  const int m = a.dim();
  for (int r = 1; r <= m; ++r) {
    bool only_last = true;
    for (int c = r; c < m && only_last; ++c) only_last = a(r, c) == 0;
    if (only_last) return r;
  }
  return m;
}

TriMatrix alpha(const TriMatrix& a) {
  const int m = a.dim();
  const int i = check_alpha_input(a, "alpha");
  if (i == m) return a;
  TriMatrix out = insert_zero_line(a.leading(m - 1), i);
  for (int r = 1; r < i; ++r) out(r, i) = out(r, m);
  for (int r = 1; r <= i; ++r) out(r, m) = a(r, m);
  return out;
}

TriMatrix beta(const TriMatrix& a) {
  require_fishburn(a, "beta");
  const int m = a.dim();
  const int i = index_row(a);
  if (i == m) return a;
  TriMatrix b = a;
  for (int r = 1; r <= i; ++r) b(r, m) = a(r, i);
  TriMatrix out = delete_line_and_pad(b, i);
  for (int r = 1; r <= i; ++r) out(r, m) = a(r, m);
  return out;
}

TriMatrix alpha_prime(const TriMatrix& a) {
  const int m = a.dim();
  const int i = check_alpha_input(a, "alpha'");
  if (i == m) return a;
  TriMatrix out = insert_zero_line(a.leading(m - 1), i);
  std::vector<int> chain{i};
  for (int j = i + 1; j <= m; ++j) {
    for (int r = 1; r < i; ++r) {
      if (out(r, j) != 0) {
        chain.push_back(j);
        break;
      }
    }
  }
  const TriMatrix before = out;
  for (std::size_t b = 1; b < chain.size(); ++b)
    for (int r = 1; r <= i; ++r) out(r, chain[b - 1]) = before(r, chain[b]);
  for (int r = 1; r <= i; ++r) out(r, m) = a(r, m);
  return out;
}

TriMatrix apply_leading(const TriMatrix& a, int k, Transform t) {
  if (k < 1 || k > a.dim()) throw InputError("block size " + str(k) + " out of range");
  TriMatrix block = a.leading(k);
  try {
    block = transform(block, t);
  } catch (const DomainError& e) {
    throw DomainError(std::string(e.what()) + " (in leading block k = " + str(k) + ")");
  }
  TriMatrix out = a;
  for (int r = 1; r <= k; ++r)
    for (int c = r; c <= k; ++c) out(r, c) = block(r, c);
  return out;
}

std::vector<TriMatrix> theta_stages(const TriMatrix& a) {
  require_column_restricted(a, "theta");
  std::vector<TriMatrix> stages{a};
  for (int k = 1; k <= a.dim(); ++k)
    stages.push_back(apply_leading(stages.back(), k, Transform::alpha));
  return stages;
}

TriMatrix theta(const TriMatrix& a) { return theta_stages(a).back(); }

TriMatrix theta_inv(const TriMatrix& b) {
  require_fishburn(b, "theta'");
  TriMatrix out = b;
  for (int k = b.dim(); k >= 1; --k) out = apply_leading(out, k, Transform::beta);
  if (!classify(out).column_restricted)
    throw DomainError("theta': preimage is not column-restricted");
  return out;
}

TriMatrix theta_bar(const TriMatrix& a) {
  require_column_restricted(a, "theta-bar");
  TriMatrix out = a;
  for (int k = 1; k <= a.dim(); ++k) out = apply_leading(out, k, Transform::alpha_prime);
  return out;
}

std::vector<TriMatrix> enumerate_fishburn(int n) { return enumerate(n, true); }

std::vector<TriMatrix> enumerate_column_restricted(int n) { return enumerate(n, false); }

} // namespace fishlab
