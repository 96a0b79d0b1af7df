#include "tatekit/linalg.hpp"

#include <algorithm>

#include "tatekit/errors.hpp"

namespace kt {

namespace {
std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}
}  // namespace

Vec RowSpan::reduce(Vec v) const {
  if (v.size() != width_) throw SpecError("row width mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    Scalar c = v[p];
    for (std::size_t j = p; j < width_; ++j) v[j] = v[j] - c * rows_[r][j];
  }
  return v;
}

bool RowSpan::contains(const Vec& v) const { return first_nonzero(reduce(v)) == width_; }

bool RowSpan::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = first_nonzero(v);
  if (p == width_) return false;
  Scalar inv = v[p].inv();
  for (std::size_t j = p; j < width_; ++j) v[j] = v[j] * inv;
  // clear the new pivot column from existing rows to stay fully reduced
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][p].is_zero()) continue;
    Scalar c = rows_[r][p];
    for (std::size_t j = 0; j < width_; ++j) rows_[r][j] = rows_[r][j] - c * v[j];
  }
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  rows_.insert(rows_.begin() + static_cast<long>(at), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<long>(at), p);
  return true;
}

std::optional<Vec> solve_linear(const std::vector<Vec>& cols, const Vec& b, const Field& f) {
  std::size_t h = b.size();
  for (const Vec& c : cols)
    if (c.size() != h) throw SpecError("column height mismatch");
  // Gaussian elimination on the augmented matrix, eliminating columns in
  // the given order so the particular solution is canonical.
  std::size_t n = cols.size();
  std::vector<Vec> m(h, Vec());
  for (std::size_t r = 0; r < h; ++r) {
    m[r].reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) m[r].push_back(cols[j][r]);
    m[r].push_back(b[r]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < h; ++col) {
    std::size_t sel = h;
    for (std::size_t r = row; r < h; ++r)
      if (!m[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel == h) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = m[row][col].inv();
    for (std::size_t j = col; j <= n; ++j) m[row][j] = m[row][j] * inv;
    for (std::size_t r = 0; r < h; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar c = m[r][col];
      for (std::size_t j = col; j <= n; ++j) m[r][j] = m[r][j] - c * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < h; ++r)
    if (!m[r][n].is_zero()) return std::nullopt;
  Vec x(n, Scalar::zero(f));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][n];
  return x;
}

std::size_t matrix_rank(const std::vector<Vec>& cols, const Field& f) {
  if (cols.empty()) return 0;
  RowSpan span(cols[0].size(), f);
  std::size_t rank = 0;
  for (const Vec& c : cols)
    if (span.insert(c)) ++rank;
  return rank;
}

std::vector<Vec> null_space(const std::vector<Vec>& cols, const Field& f) {
  std::size_t n = cols.size();
  std::size_t h = cols.empty() ? 0 : cols[0].size();
  for (const Vec& c : cols)
    if (c.size() != h) throw SpecError("column height mismatch");
  // row-reduce the h x n matrix, tracking pivot columns
  std::vector<Vec> m(h, Vec());
  for (std::size_t r = 0; r < h; ++r) {
    m[r].reserve(n);
    for (std::size_t j = 0; j < n; ++j) m[r].push_back(cols[j][r]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < h; ++col) {
    std::size_t sel = h;
    for (std::size_t r = row; r < h; ++r)
      if (!m[r][col].is_zero()) {
        sel = r;
        break;
      }
    if (sel == h) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = m[row][col].inv();
    for (std::size_t j = col; j < n; ++j) m[row][j] = m[row][j] * inv;
    for (std::size_t r = 0; r < h; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar c = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] = m[r][j] - c * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<Vec> basis;
  std::size_t next_pivot = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    Vec v(n, Scalar::zero(f));
    v[col] = Scalar::one(f);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace kt
