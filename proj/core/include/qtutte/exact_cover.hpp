#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace qtutte {

// Dancing-links exact cover over items 0..items-1. Rows are tried in the
// order given; the branching item is always the uncovered item with the
// fewest remaining rows (lowest index on ties).
class ExactCover {
 public:
  ExactCover(std::uint32_t items, std::vector<std::vector<std::uint32_t>> rows);

  // Return false to stop the search.
  using Visitor = std::function<bool(const std::vector<std::uint32_t>& rows)>;
  // Called before a row joins the partial solution; return false to skip it.
  using Filter = std::function<bool(const std::vector<std::uint32_t>& partial,
                                    std::uint32_t row)>;

  struct Limits {
    // Solutions with more rows are never reported (0: unlimited).
    std::uint32_t max_rows = 0;
    // Search nodes (row insertions) before giving up (0: unlimited).
    std::uint64_t node_budget = 0;
  };

  struct Outcome {
    // The whole space was explored (no budget hit, visitor never stopped).
    bool exhausted = false;
    bool budget_hit = false;
    std::uint64_t nodes = 0;
    std::uint64_t solutions = 0;
  };

  Outcome search(const Limits& limits, const Visitor& visit,
                 const Filter& filter = nullptr);

  std::uint32_t items() const noexcept { return items_; }
  std::size_t row_count() const noexcept { return rows_.size(); }

 private:
  struct Node {
    std::uint32_t left, right, up, down, column, row;
  };

  void cover(std::uint32_t c);
  void uncover(std::uint32_t c);
  bool recurse();

  std::uint32_t items_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::uint32_t largest_row_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> size_;
  std::uint32_t uncovered_ = 0;

  // Per-search state.
  const Limits* limits_ = nullptr;
  const Visitor* visit_ = nullptr;
  const Filter* filter_ = nullptr;
  std::vector<std::uint32_t> partial_;
  Outcome outcome_;
  bool stop_ = false;
};

}  // namespace qtutte
