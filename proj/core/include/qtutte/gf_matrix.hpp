#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qtutte/finite_field.hpp"

namespace qtutte {

// Dense row-major matrix over a FiniteField. The field itself is not stored;
// every operation takes it explicitly.
class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  GfMatrix(int rows, int cols, std::vector<Elem> data);
  // Rows of possibly different lengths are rejected with kDimensionMismatch.
  GfMatrix(std::initializer_list<std::initializer_list<int>> rows);
  static GfMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Elem& at(int r, int c) noexcept { return data_[r * cols_ + c]; }
  Elem at(int r, int c) const noexcept { return data_[r * cols_ + c]; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  // Appends the rows of `other`; column counts must agree.
  void append_rows(const GfMatrix& other);

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

// Canonical reduced row-echelon form with zero rows removed: every pivot is 1
// and is the only nonzero entry in its column. Two matrices have the same
// row space iff their reductions are equal.
GfMatrix reduce_rows(const FiniteField& field, GfMatrix m);

// Checks every entry lies in 0..q-1.
void check_entries(const FiniteField& field, const GfMatrix& m);

// Pivot column of each row of a matrix already in reduced form.
std::vector<int> pivot_columns(const GfMatrix& rref);

// Basis of {v : m v^T = 0}, returned in reduced form. `rref` must already be
// reduced.
GfMatrix orthogonal_complement(const FiniteField& field, const GfMatrix& rref);

// v * m for a row vector v (length m.rows()).
std::vector<Elem> row_times(const FiniteField& field,
                            const std::vector<Elem>& v, const GfMatrix& m);

// Product a * b.
GfMatrix multiply(const FiniteField& field, const GfMatrix& a,
                  const GfMatrix& b);

// True when `v` lies in the row space of the reduced matrix `rref`.
bool in_row_space(const FiniteField& field, const GfMatrix& rref,
                  std::vector<Elem> v);

}  // namespace qtutte
