#pragma once

#include <cstdint>
#include <vector>

#include "qtutte/bipoly.hpp"
#include "qtutte/qmatroid.hpp"

namespace qtutte {

// An interval [z, w] whose minor has no Prime diamond. `clopen` is the
// minor's unique clopen flat (relative to the interval); rho and nu are the
// minor's rank and nullity.
struct PrimeFreeInterval {
  FlatId z = 0;
  FlatId w = 0;
  FlatId clopen = 0;
  int rho = 0;
  int nu = 0;
  std::vector<FlatId> flats;  // sorted

  friend bool operator==(const PrimeFreeInterval& a,
                         const PrimeFreeInterval& b) {
    return a.z == b.z && a.w == b.w;
  }
};

struct TuttePartition {
  int q = 0;
  std::vector<PrimeFreeInterval> parts;
};

// Precomputed order relation and Prime diamonds of one matroid, shared by
// the interval tests below.
class IntervalOracle {
 public:
  explicit IntervalOracle(const QMatroid& m);

  const QMatroid& matroid() const noexcept { return *m_; }
  bool leq(FlatId a, FlatId b) const { return le_[a][b]; }
  // No Prime diamond of M lies inside [z, w]; z <= w required.
  bool prime_free(FlatId z, FlatId w) const;
  // Builds the annotated interval; throws kInvalidPartition if [z, w] is not
  // an interval of comparable flats or is not prime-free.
  PrimeFreeInterval make(FlatId z, FlatId w) const;
  // The union of two disjoint parts is itself a prime-free interval.
  bool mergeable(const PrimeFreeInterval& a, const PrimeFreeInterval& b) const;

 private:
  const QMatroid* m_;
  std::vector<std::vector<bool>> le_;
  std::vector<std::pair<FlatId, FlatId>> primes_;
};

// Every prime-free interval, singletons included, ordered by (z, w).
std::vector<PrimeFreeInterval> prime_free_intervals(const QMatroid& m);

enum class PartitionMode { kMinimal, kMaximal, kAll };

struct PartitionOptions {
  // Exhaustive (certified) search is attempted up to this many flats.
  std::size_t exhaustive_flats = 64;
  // Exact-cover nodes per search (0: unlimited).
  std::uint64_t node_budget = 5'000'000;
  // kAll and kMaximal stop after this many partitions (0: unlimited).
  std::size_t max_partitions = 1;
  // kMinimal: also collect every other partition of the minimal size, up to
  // max_partitions.
  bool all_minimal = false;
};

struct PartitionSearchResult {
  std::vector<TuttePartition> partitions;
  // kMinimal: no partition with fewer parts exists. kAll / kMaximal: the
  // listed partitions are all there are.
  bool certified = false;
  std::uint64_t nodes = 0;
};

// Exact cover of the lattice by prime-free intervals. Candidates are tried
// largest first. kMaximal never selects a part that could be merged with one
// already chosen. Throws BudgetExceeded if the budget runs out before any
// partition is found and kNoPartition if none exists.
PartitionSearchResult partition_search(const QMatroid& m, PartitionMode mode,
                                       const PartitionOptions& options = {});

// Sum over parts of x^rho y^nu, numeric at the partition's q.
BiPoly partition_polynomial(const TuttePartition& p);

// Parts must be pairwise disjoint, cover every flat and each be a prime-free
// interval with matching annotations; kInvalidPartition otherwise.
void check_partition(const QMatroid& m, const TuttePartition& p);

// check_partition, then compare partition_polynomial with the Tutte
// polynomial obtained by subtraction.
bool is_tutte_partition(const QMatroid& m, const TuttePartition& p);

// Pairs of part indices that could be merged.
std::vector<std::pair<std::size_t, std::size_t>> mergeable_pairs(
    const QMatroid& m, const TuttePartition& p);

}  // namespace qtutte
