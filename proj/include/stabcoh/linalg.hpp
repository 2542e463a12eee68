#pragma once

// Exact linear algebra over Q: sparse vectors and matrices with rational
// entries, Gauss-Jordan elimination, rank, kernel, image and solve.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stabcoh {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonicalizes the result of every arithmetic operation).
using Rational = mpq_class;

/// Builds a canonical rational num/den. Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

class VectorQ {
 public:
  VectorQ() = default;
  explicit VectorQ(std::size_t dim) : dim_(dim) {}
  VectorQ(std::size_t dim, std::map<std::size_t, Rational> entries);

  static VectorQ unit(std::size_t dim, std::size_t index);
  static VectorQ from_dense(std::span<const Rational> values);

  std::size_t dim() const { return dim_; }
  const std::map<std::size_t, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Rational operator[](std::size_t i) const;
  std::vector<Rational> to_dense() const;

  /// Adds `value` at index i; drops the entry if it cancels to zero.
  void add(std::size_t i, const Rational& value);

  VectorQ operator+(const VectorQ& other) const;
  VectorQ operator-(const VectorQ& other) const;
  VectorQ operator*(const Rational& scalar) const;
  bool operator==(const VectorQ& other) const;

 private:
  std::size_t dim_ = 0;
  std::map<std::size_t, Rational> entries_;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Row-compressed sparse matrix. Rows hold (column, value) pairs sorted by
/// column; no stored value is zero.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  /// Duplicate (row, col) triplets are summed. Throws std::out_of_range on
  /// an index outside the shape.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static SparseMatrix from_columns(std::size_t rows, const std::vector<VectorQ>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const Row& row(std::size_t r) const { return data_[r]; }
  Rational at(std::size_t r, std::size_t c) const;
  VectorQ column(std::size_t c) const;
  std::vector<VectorQ> columns() const;

  VectorQ apply(const VectorQ& x) const;
  SparseMatrix transpose() const;
  /// Stacks the blocks vertically; all must share the same column count.
  static SparseMatrix vstack(const std::vector<SparseMatrix>& blocks, std::size_t cols);

  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator+(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  SparseMatrix operator*(const Rational& scalar) const;
  bool operator==(const SparseMatrix& rhs) const;

  std::vector<std::vector<Rational>> to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

struct EliminationOptions {
  /// Matrices with both dimensions at or below this size are reduced densely.
  std::size_t dense_threshold = 64;
};

/// Reduced row echelon form. Each pivot row has a 1 in its pivot column and
/// zeros in every other pivot column. Pivot rows are sorted by pivot column.
struct RowEchelon {
  std::size_t cols = 0;
  std::vector<std::size_t> pivot_cols;
  std::vector<SparseMatrix::Row> pivot_rows;
  /// Rows that reduced to zero in the first `cols` columns but are nonzero
  /// beyond them (only possible when a pivot limit is used).
  std::vector<SparseMatrix::Row> residual_rows;

  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination. Only columns below `pivot_limit` (default: all)
/// may be chosen as pivots. Sparse path picks the sparsest column and, inside
/// it, the shortest row.
RowEchelon row_echelon(const SparseMatrix& m, std::optional<std::size_t> pivot_limit = {},
                       const EliminationOptions& options = {});

std::size_t rank(const SparseMatrix& m, const EliminationOptions& options = {});
std::vector<VectorQ> kernel_basis(const SparseMatrix& m, const EliminationOptions& options = {});
std::vector<VectorQ> column_space_basis(const SparseMatrix& m,
                                        const EliminationOptions& options = {});

/// Some x with m x = b, or nullopt when b is outside the column space.
/// Throws std::invalid_argument when b.dim() != m.rows().
std::optional<VectorQ> solve(const SparseMatrix& m, const VectorQ& b,
                             const EliminationOptions& options = {});
/// Solves against several right-hand sides with a single elimination.
std::vector<std::optional<VectorQ>> solve_many(const SparseMatrix& m,
                                               const std::vector<VectorQ>& rhs,
                                               const EliminationOptions& options = {});

std::optional<SparseMatrix> inverse(const SparseMatrix& m);

}  // namespace stabcoh
