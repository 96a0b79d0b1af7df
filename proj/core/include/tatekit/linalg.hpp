#ifndef TATEKIT_LINALG_HPP
#define TATEKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "tatekit/field.hpp"

namespace kt {

using Vec = std::vector<Scalar>;

// Incremental row-reduction over a field: rows are inserted one at a time
// and kept in reduced echelon form.  Pivot columns are always the leftmost
// nonzero entry, so reduce() against the accumulated rows is canonical for
// a fixed column order.
class RowSpan {
 public:
  explicit RowSpan(std::size_t width, const Field& f) : width_(width), f_(f) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  // Fully reduces v against the stored rows.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  // Reduces, then stores the row (normalized to pivot 1) if nonzero.
  // Returns true when the row enlarged the span.
  bool insert(Vec v);

  const std::vector<Vec>& rows() const { return rows_; }

 private:
  std::size_t width_;
  Field f_;
  std::vector<Vec> rows_;           // reduced echelon, sorted by pivot
  std::vector<std::size_t> pivots_;  // pivot column per row
};

// Solves A x = b for the matrix whose columns are cols (each of height h).
// Returns the canonical solution with all free coordinates zero (echelon
// back-substitution in the given column order), or nullopt if inconsistent.
std::optional<Vec> solve_linear(const std::vector<Vec>& cols, const Vec& b, const Field& f);

std::size_t matrix_rank(const std::vector<Vec>& cols, const Field& f);

// Canonical basis of { x : sum_j x_j cols[j] = 0 }: one vector per free
// column of the echelon form, that coordinate set to 1 (deterministic).
std::vector<Vec> null_space(const std::vector<Vec>& cols, const Field& f);

}  // namespace kt

#endif
