#include "qtutte/gf_matrix.hpp"

#include <string>
#include <utility>

#include "qtutte/error.hpp"

namespace qtutte {

GfMatrix::GfMatrix(int rows, int cols, std::vector<Elem> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (static_cast<std::size_t>(rows) * cols != data_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix data does not match its shape");
  }
}

GfMatrix::GfMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  *this = from_rows(copy);
}

GfMatrix GfMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  GfMatrix m;
  m.rows_ = static_cast<int>(rows.size());
  m.cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m.cols_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row lengths differ: " + std::to_string(r.size()) +
                      " vs " + std::to_string(m.cols_));
    }
    for (int v : r) {
      if (v < 0 || v > 255) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "matrix entry out of range: " + std::to_string(v));
      }
      m.data_.push_back(static_cast<Elem>(v));
    }
  }
  return m;
}

void GfMatrix::append_rows(const GfMatrix& other) {
  if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
  if (other.rows_ > 0 && other.cols_ != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "column counts differ");
  }
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void check_entries(const FiniteField& field, const GfMatrix& m) {
  for (Elem e : m.data()) {
    if (e >= field.order()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "entry " + std::to_string(e) + " is not an element of GF(" +
                      std::to_string(field.order()) + ")");
    }
  }
}

GfMatrix reduce_rows(const FiniteField& field, GfMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    Elem scale = field.inv(m.at(rank, c));
    for (int j = c; j < cols; ++j) m.at(rank, j) = field.mul(m.at(rank, j), scale);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Elem f = m.at(r, c);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        m.at(r, j) = field.sub(m.at(r, j), field.mul(f, m.at(rank, j)));
      }
    }
    ++rank;
  }
  std::vector<Elem> data(m.data().begin(), m.data().begin() + rank * cols);
  return GfMatrix(rank, cols, std::move(data));
}

std::vector<int> pivot_columns(const GfMatrix& rref) {
  std::vector<int> pivots;
  pivots.reserve(rref.rows());
  for (int r = 0; r < rref.rows(); ++r) {
    int c = 0;
    while (c < rref.cols() && rref.at(r, c) == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

GfMatrix orthogonal_complement(const FiniteField& field, const GfMatrix& rref) {
  const int k = rref.cols();
  std::vector<int> pivots = pivot_columns(rref);
  std::vector<bool> is_pivot(k, false);
  for (int c : pivots) is_pivot[c] = true;
  GfMatrix out(k - rref.rows(), k);
  int row = 0;
  for (int f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    out.at(row, f) = 1;
    for (int i = 0; i < rref.rows(); ++i) {
      out.at(row, pivots[i]) = field.neg(rref.at(i, f));
    }
    ++row;
  }
  return reduce_rows(field, std::move(out));
}

std::vector<Elem> row_times(const FiniteField& field,
                            const std::vector<Elem>& v, const GfMatrix& m) {
  std::vector<Elem> out(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) {
      out[j] = field.add(out[j], field.mul(v[i], m.at(i, j)));
    }
  }
  return out;
}

GfMatrix multiply(const FiniteField& field, const GfMatrix& a,
                  const GfMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
  }
  GfMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int l = 0; l < a.cols(); ++l) {
      Elem f = a.at(i, l);
      if (f == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out.at(i, j) = field.add(out.at(i, j), field.mul(f, b.at(l, j)));
      }
    }
  }
  return out;
}

bool in_row_space(const FiniteField& field, const GfMatrix& rref,
                  std::vector<Elem> v) {
  std::vector<int> pivots = pivot_columns(rref);
  for (int i = 0; i < rref.rows(); ++i) {
    Elem f = v[pivots[i]];
    if (f == 0) continue;
    for (int j = 0; j < rref.cols(); ++j) {
      v[j] = field.sub(v[j], field.mul(f, rref.at(i, j)));
    }
  }
  for (Elem e : v) {
    if (e != 0) return false;
  }
  return true;
}

}  // namespace qtutte
