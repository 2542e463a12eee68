#include "stabcoh/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stabcoh {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- VectorQ

VectorQ::VectorQ(std::size_t dim, std::map<std::size_t, Rational> entries)
    : dim_(dim), entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->first >= dim_) throw std::out_of_range("vector index out of range");
    if (it->second == 0)
      it = entries_.erase(it);
    else
      ++it;
  }
}

VectorQ VectorQ::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("unit vector index out of range");
  VectorQ v(dim);
  v.entries_.emplace(index, Rational(1));
  return v;
}

VectorQ VectorQ::from_dense(std::span<const Rational> values) {
  VectorQ v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) v.entries_.emplace(i, values[i]);
  return v;
}

Rational VectorQ::operator[](std::size_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<Rational> VectorQ::to_dense() const {
  std::vector<Rational> out(dim_);
  for (const auto& [i, v] : entries_) out[i] = v;
  return out;
}

void VectorQ::add(std::size_t i, const Rational& value) {
  if (i >= dim_) throw std::out_of_range("vector index out of range");
  if (value == 0) return;
  auto [it, inserted] = entries_.emplace(i, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

VectorQ VectorQ::operator+(const VectorQ& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("vector dimension mismatch");
  VectorQ out = *this;
  for (const auto& [i, v] : other.entries_) out.add(i, v);
  return out;
}

VectorQ VectorQ::operator-(const VectorQ& other) const { return *this + other * Rational(-1); }

VectorQ VectorQ::operator*(const Rational& scalar) const {
  VectorQ out(dim_);
  if (scalar == 0) return out;
  for (const auto& [i, v] : entries_) out.entries_.emplace(i, v * scalar);
  return out;
}

bool VectorQ::operator==(const VectorQ& other) const {
  return dim_ == other.dim_ && entries_ == other.entries_;
}

// ----------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets)
    : SparseMatrix(rows, cols) {
  for (const auto& t : triplets)
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("matrix index out of range");
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& t : triplets) {
    Row& r = data_[t.row];
    if (!r.empty() && r.back().first == t.col)
      r.back().second += t.value;
    else
      r.emplace_back(t.col, std::move(t.value));
  }
  for (Row& r : data_)
    std::erase_if(r, [](const Entry& e) { return e.second == 0; });
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.data_[r].emplace_back(c, rows[r][c]);
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<VectorQ>& columns) {
  SparseMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != rows) throw std::invalid_argument("column dimension mismatch");
    for (const auto& [r, v] : columns[c].entries()) m.data_[r].emplace_back(c, v);
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const Row& r : data_) n += r.size();
  return n;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  const Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : Rational(0);
}

VectorQ SparseMatrix::column(std::size_t c) const {
  VectorQ v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational x = at(r, c);
    if (x != 0) v.add(r, x);
  }
  return v;
}

std::vector<VectorQ> SparseMatrix::columns() const {
  std::vector<VectorQ> out(cols_, VectorQ(rows_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[c].add(r, v);
  return out;
}

VectorQ SparseMatrix::apply(const VectorQ& x) const {
  if (x.dim() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  VectorQ y(rows_);
  if (x.is_zero()) return y;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (const auto& [c, v] : data_[r]) {
      auto it = x.entries().find(c);
      if (it != x.entries().end()) acc += v * it->second;
    }
    y.add(r, acc);
  }
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;
}

SparseMatrix SparseMatrix::vstack(const std::vector<SparseMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols_ != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows_;
  }
  SparseMatrix m(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + static_cast<long>(offset));
    offset += b.rows_;
  }
  return m;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  std::map<std::size_t, Rational> acc;
  for (std::size_t r = 0; r < rows_; ++r) {
    acc.clear();
    for (const auto& [k, a] : data_[r])
      for (const auto& [c, b] : rhs.data_[k]) acc[c] += a * b;
    for (auto& [c, v] : acc)
      if (v != 0) out.data_[r].emplace_back(c, std::move(v));
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  std::vector<Triplet> triplets;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) triplets.push_back({r, c, v});
    for (const auto& [c, v] : rhs.data_[r]) triplets.push_back({r, c, v});
  }
  return SparseMatrix(rows_, cols_, std::move(triplets));
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
  return *this + rhs * Rational(-1);
}

SparseMatrix SparseMatrix::operator*(const Rational& scalar) const {
  SparseMatrix out(rows_, cols_);
  if (scalar == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.data_[r].emplace_back(c, v * scalar);
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

// ------------------------------------------------------------ elimination

namespace {

using Row = SparseMatrix::Row;

Rational coefficient(const Row& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseMatrix::Entry& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : Rational(0);
}

// target -= factor * source
void subtract_multiple(Row& target, const Rational& factor, const Row& source) {
  Row out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

void normalize(Row& row, std::size_t pivot_col) {
  const Rational inv = 1 / coefficient(row, pivot_col);
  for (auto& e : row) e.second *= inv;
}

RowEchelon finish(std::size_t cols, std::vector<std::pair<std::size_t, Row>> pivots,
                  std::vector<Row> residual) {
  std::sort(pivots.begin(), pivots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RowEchelon out;
  out.cols = cols;
  for (auto& [c, r] : pivots) {
    out.pivot_cols.push_back(c);
    out.pivot_rows.push_back(std::move(r));
  }
  out.residual_rows = std::move(residual);
  return out;
}

RowEchelon sparse_gauss_jordan(const SparseMatrix& m, std::size_t limit) {
  std::vector<Row> active;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) active.push_back(m.row(r));

  std::vector<std::pair<std::size_t, Row>> pivots;
  std::vector<std::size_t> count(limit);
  while (true) {
    std::fill(count.begin(), count.end(), 0);
    for (const Row& r : active)
      for (const auto& e : r)
        if (e.first < limit) ++count[e.first];
    std::size_t best_col = limit;
    for (std::size_t c = 0; c < limit; ++c)
      if (count[c] > 0 && (best_col == limit || count[c] < count[best_col])) best_col = c;
    if (best_col == limit) break;

    std::size_t best_row = active.size();
    for (std::size_t i = 0; i < active.size(); ++i)
      if (coefficient(active[i], best_col) != 0 &&
          (best_row == active.size() || active[i].size() < active[best_row].size()))
        best_row = i;

    Row pivot = std::move(active[best_row]);
    active.erase(active.begin() + static_cast<long>(best_row));
    normalize(pivot, best_col);

    for (Row& r : active) {
      Rational f = coefficient(r, best_col);
      if (f != 0) subtract_multiple(r, f, pivot);
    }
    for (auto& [c, r] : pivots) {
      Rational f = coefficient(r, best_col);
      if (f != 0) subtract_multiple(r, f, pivot);
    }
    std::erase_if(active, [](const Row& r) { return r.empty(); });
    pivots.emplace_back(best_col, std::move(pivot));
  }
  return finish(m.cols(), std::move(pivots), std::move(active));
}

RowEchelon dense_gauss_jordan(const SparseMatrix& m, std::size_t limit) {
  auto a = m.to_dense();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < limit && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[lead]);
    const Rational inv = 1 / a[lead][c];
    for (std::size_t j = c; j < cols; ++j) a[lead][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[lead][j];
    }
    pivot_cols.push_back(c);
    ++lead;
  }
  auto to_row = [&](const std::vector<Rational>& dense) {
    Row r;
    for (std::size_t j = 0; j < cols; ++j)
      if (dense[j] != 0) r.emplace_back(j, dense[j]);
    return r;
  };
  std::vector<std::pair<std::size_t, Row>> pivots;
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) pivots.emplace_back(pivot_cols[i], to_row(a[i]));
  std::vector<Row> residual;
  for (std::size_t i = pivot_cols.size(); i < rows; ++i) {
    Row r = to_row(a[i]);
    if (!r.empty()) residual.push_back(std::move(r));
  }
  return finish(cols, std::move(pivots), std::move(residual));
}

}  // namespace

RowEchelon row_echelon(const SparseMatrix& m, std::optional<std::size_t> pivot_limit,
                       const EliminationOptions& options) {
  const std::size_t limit = std::min(pivot_limit.value_or(m.cols()), m.cols());
  if (m.rows() <= options.dense_threshold && m.cols() <= options.dense_threshold)
    return dense_gauss_jordan(m, limit);
  return sparse_gauss_jordan(m, limit);
}

std::size_t rank(const SparseMatrix& m, const EliminationOptions& options) {
  return row_echelon(m, {}, options).rank();
}

std::vector<VectorQ> kernel_basis(const SparseMatrix& m, const EliminationOptions& options) {
  const RowEchelon e = row_echelon(m, {}, options);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<VectorQ> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    VectorQ v = VectorQ::unit(m.cols(), f);
    for (std::size_t p = 0; p < e.rank(); ++p) {
      Rational x = coefficient(e.pivot_rows[p], f);
      if (x != 0) v.add(e.pivot_cols[p], -x);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<VectorQ> column_space_basis(const SparseMatrix& m, const EliminationOptions& options) {
  const RowEchelon e = row_echelon(m, {}, options);
  const auto cols = m.columns();
  std::vector<VectorQ> basis;
  for (std::size_t c : e.pivot_cols) basis.push_back(cols[c]);
  return basis;
}

std::vector<std::optional<VectorQ>> solve_many(const SparseMatrix& m,
                                               const std::vector<VectorQ>& rhs,
                                               const EliminationOptions& options) {
  std::vector<Triplet> triplets;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) triplets.push_back({r, c, v});
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (rhs[k].dim() != m.rows()) throw std::invalid_argument("solve: rhs dimension mismatch");
    for (const auto& [r, v] : rhs[k].entries()) triplets.push_back({r, m.cols() + k, v});
  }
  const SparseMatrix augmented(m.rows(), m.cols() + rhs.size(), std::move(triplets));
  const RowEchelon e = row_echelon(augmented, m.cols(), options);

  std::vector<std::optional<VectorQ>> out;
  out.reserve(rhs.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    const std::size_t col = m.cols() + k;
    bool consistent = true;
    for (const Row& r : e.residual_rows)
      if (coefficient(r, col) != 0) consistent = false;
    if (!consistent) {
      out.emplace_back(std::nullopt);
      continue;
    }
    VectorQ x(m.cols());
    for (std::size_t p = 0; p < e.rank(); ++p) x.add(e.pivot_cols[p], coefficient(e.pivot_rows[p], col));
    out.emplace_back(std::move(x));
  }
  return out;
}

std::optional<VectorQ> solve(const SparseMatrix& m, const VectorQ& b,
                             const EliminationOptions& options) {
  return solve_many(m, {b}, options).front();
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::vector<VectorQ> units;
  for (std::size_t i = 0; i < m.rows(); ++i) units.push_back(VectorQ::unit(m.rows(), i));
  if (rank(m) != m.rows()) return std::nullopt;
  auto cols = solve_many(m, units);
  std::vector<VectorQ> columns;
  for (auto& c : cols) columns.push_back(std::move(*c));
  return SparseMatrix::from_columns(m.rows(), columns);
}

}  // namespace stabcoh
