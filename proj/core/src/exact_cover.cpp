#include "qtutte/exact_cover.hpp"

#include <algorithm>

#include "qtutte/error.hpp"

namespace qtutte {

ExactCover::ExactCover(std::uint32_t items,
                       std::vector<std::vector<std::uint32_t>> rows)
    : items_(items), rows_(std::move(rows)), size_(items + 1, 0) {
  // Node 0 is the root, 1..items the column headers.
  nodes_.resize(items + 1);
  for (std::uint32_t i = 0; i <= items; ++i) {
    nodes_[i] = {i == 0 ? items : i - 1, i == items ? 0 : i + 1, i, i, i, 0};
  }
  for (std::uint32_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) {
      throw Error(ErrorCode::kDimensionMismatch, "exact cover row is empty");
    }
    largest_row_ = std::max<std::uint32_t>(largest_row_, row.size());
    const auto first = static_cast<std::uint32_t>(nodes_.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] >= items) {
        throw Error(ErrorCode::kInvalidId, "exact cover item out of range");
      }
      const std::uint32_t col = row[k] + 1;
      const auto id = static_cast<std::uint32_t>(nodes_.size());
      const std::uint32_t last = k + 1 == row.size() ? first : id + 1;
      nodes_.push_back({k == 0 ? first + static_cast<std::uint32_t>(row.size()) - 1
                               : id - 1,
                        last, nodes_[col].up, col, col, r});
      nodes_[nodes_[col].up].down = id;
      nodes_[col].up = id;
      ++size_[col];
    }
  }
}

void ExactCover::cover(std::uint32_t c) {
  nodes_[nodes_[c].right].left = nodes_[c].left;
  nodes_[nodes_[c].left].right = nodes_[c].right;
  for (std::uint32_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
    for (std::uint32_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
      nodes_[nodes_[j].down].up = nodes_[j].up;
      nodes_[nodes_[j].up].down = nodes_[j].down;
      --size_[nodes_[j].column];
    }
  }
}

void ExactCover::uncover(std::uint32_t c) {
  for (std::uint32_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
    for (std::uint32_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
      ++size_[nodes_[j].column];
      nodes_[nodes_[j].down].up = j;
      nodes_[nodes_[j].up].down = j;
    }
  }
  nodes_[nodes_[c].right].left = c;
  nodes_[nodes_[c].left].right = c;
}

ExactCover::Outcome ExactCover::search(const Limits& limits,
                                       const Visitor& visit,
                                       const Filter& filter) {
  limits_ = &limits;
  visit_ = &visit;
  filter_ = filter ? &filter : nullptr;
  partial_.clear();
  outcome_ = {};
  stop_ = false;
  uncovered_ = items_;
  recurse();
  outcome_.exhausted = !stop_;
  return outcome_;
}

// Returns true when the search must stop.
bool ExactCover::recurse() {
  if (nodes_[0].right == 0) {
    ++outcome_.solutions;
    if (!(*visit_)(partial_)) stop_ = true;
    return stop_;
  }
  const std::uint32_t max_rows = limits_->max_rows;
  if (max_rows != 0) {
    const std::uint32_t needed =
        largest_row_ == 0 ? 1 : (uncovered_ + largest_row_ - 1) / largest_row_;
    if (partial_.size() + needed > max_rows) return false;
  }
  std::uint32_t best = 0;
  for (std::uint32_t c = nodes_[0].right; c != 0; c = nodes_[c].right) {
    if (best == 0 || size_[c] < size_[best]) best = c;
  }
  if (size_[best] == 0) return false;

  cover(best);
  for (std::uint32_t r = nodes_[best].down; r != best && !stop_;
       r = nodes_[r].down) {
    const std::uint32_t row = nodes_[r].row;
    if (filter_ != nullptr && !(*filter_)(partial_, row)) continue;
    if (limits_->node_budget != 0 && outcome_.nodes >= limits_->node_budget) {
      outcome_.budget_hit = true;
      stop_ = true;
      break;
    }
    ++outcome_.nodes;
    partial_.push_back(row);
    uncovered_ -= static_cast<std::uint32_t>(rows_[row].size());
    for (std::uint32_t j = nodes_[r].right; j != r; j = nodes_[j].right) {
      cover(nodes_[j].column);
    }
    recurse();
    for (std::uint32_t j = nodes_[r].left; j != r; j = nodes_[j].left) {
      uncover(nodes_[j].column);
    }
    uncovered_ += static_cast<std::uint32_t>(rows_[row].size());
    partial_.pop_back();
  }
  uncover(best);
  return stop_;
}

}  // namespace qtutte
