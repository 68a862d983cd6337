#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "qtutte/qmatroid.hpp"

namespace qtutte {

struct EnumerationOptions {
  // Raw enumeration is refused when k * |L| exceeds this.
  std::uint64_t max_work = 10'000;
  // Isomorphism reduction is refused above this lattice height.
  int max_iso_height = 4;
  // Raw rank functions kept before giving up with BudgetExceeded.
  std::uint64_t max_results = 1'000'000;
  int threads = 1;
};

// Every q-matroid on the lattice, as rank vectors in canonical flat order.
// Ranks are assigned in id order; a flat's rank is bounded by its lower
// covers and every diamond is checked as soon as its top is assigned.
// Output order is deterministic (lexicographic on rank vectors) regardless of
// the thread count.
std::vector<std::vector<int>> enumerate_rank_vectors(
    const SubspaceLattice& lattice, const EnumerationOptions& options = {});

// Validated matroids. With up_to_iso, one representative (the
// lexicographically first rank vector) per GL(k, q) orbit.
std::vector<QMatroid> enumerate_matroids(
    std::shared_ptr<const SubspaceLattice> lattice, bool up_to_iso,
    const EnumerationOptions& options = {});

}  // namespace qtutte
