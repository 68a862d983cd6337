#include "qtutte/tutte_partition.hpp"

#include <algorithm>
#include <string>

#include "qtutte/conversion.hpp"
#include "qtutte/error.hpp"
#include "qtutte/exact_cover.hpp"

namespace qtutte {

IntervalOracle::IntervalOracle(const QMatroid& m) : m_(&m) {
  const SubspaceLattice& lat = m.lattice();
  const auto n = static_cast<FlatId>(lat.size());
  le_.assign(n, std::vector<bool>(n, false));
  for (FlatId z = 0; z < n; ++z) {
    for (FlatId x : lat.interval(z, lat.top())) le_[z][x] = true;
  }
  for (const Diamond& d : lat.diamonds()) {
    const int base = m.rank(d.bottom);
    if (m.rank(d.top) != base + 1) continue;
    const bool all_red_below =
        std::all_of(d.middles.begin(), d.middles.end(),
                    [&](FlatId x) { return m.rank(x) == base + 1; });
    if (all_red_below) primes_.emplace_back(d.bottom, d.top);
  }
}

bool IntervalOracle::prime_free(FlatId z, FlatId w) const {
  for (const auto& [b, t] : primes_) {
    if (le_[z][b] && le_[t][w]) return false;
  }
  return true;
}

PrimeFreeInterval IntervalOracle::make(FlatId z, FlatId w) const {
  const SubspaceLattice& lat = m_->lattice();
  if (z >= lat.size() || w >= lat.size() || !le_[z][w]) {
    throw Error(ErrorCode::kInvalidPartition,
                "[" + std::to_string(z) + ", " + std::to_string(w) +
                    "] is not an interval");
  }
  if (!prime_free(z, w)) {
    throw Error(ErrorCode::kInvalidPartition,
                "[" + std::to_string(z) + ", " + std::to_string(w) +
                    "] contains a Prime diamond");
  }
  PrimeFreeInterval part;
  part.z = z;
  part.w = w;
  part.rho = m_->rank(w) - m_->rank(z);
  part.nu = lat.height(w) - lat.height(z) - part.rho;
  int clopen_count = 0;
  for (FlatId x = z; x <= w; ++x) {
    if (!le_[z][x] || !le_[x][w]) continue;
    part.flats.push_back(x);
    bool closed = true;
    for (FlatId y : lat.upper_covers(x)) {
      if (le_[y][w] && m_->color(x, y) == Color::kGreen) closed = false;
    }
    bool open = true;
    for (FlatId y : lat.lower_covers(x)) {
      if (le_[z][y] && m_->color(y, x) == Color::kRed) open = false;
    }
    if (closed && open) {
      part.clopen = x;
      ++clopen_count;
    }
  }
  if (clopen_count != 1) {
    throw Error(ErrorCode::kCharacterizationMismatch,
                "prime-free interval [" + std::to_string(z) + ", " +
                    std::to_string(w) + "] has " +
                    std::to_string(clopen_count) + " clopen flats");
  }
  return part;
}

bool IntervalOracle::mergeable(const PrimeFreeInterval& a,
                               const PrimeFreeInterval& b) const {
  const SubspaceLattice& lat = m_->lattice();
  const FlatId z = lat.meet(a.z, b.z);
  const FlatId w = lat.join(a.w, b.w);
  const int m = lat.height(w) - lat.height(z);
  std::uint64_t size = 0;
  for (int d = 0; d <= m; ++d) size += subspace_count(lat.q(), m, d);
  return size == a.flats.size() + b.flats.size() && prime_free(z, w);
}

namespace {

std::vector<PrimeFreeInterval> intervals_with(const IntervalOracle& oracle) {
  const auto n = static_cast<FlatId>(oracle.matroid().lattice().size());
  std::vector<PrimeFreeInterval> out;
  for (FlatId z = 0; z < n; ++z) {
    for (FlatId w = z; w < n; ++w) {
      if (oracle.leq(z, w) && oracle.prime_free(z, w)) {
        out.push_back(oracle.make(z, w));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<PrimeFreeInterval> prime_free_intervals(const QMatroid& m) {
  return intervals_with(IntervalOracle(m));
}

PartitionSearchResult partition_search(const QMatroid& m, PartitionMode mode,
                                       const PartitionOptions& options) {
  const IntervalOracle oracle(m);
  std::vector<PrimeFreeInterval> cands = intervals_with(oracle);
  std::stable_sort(cands.begin(), cands.end(),
                   [](const PrimeFreeInterval& a, const PrimeFreeInterval& b) {
                     return a.flats.size() > b.flats.size();
                   });
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(cands.size());
  std::size_t largest = 1;
  for (const auto& c : cands) {
    rows.emplace_back(c.flats.begin(), c.flats.end());
    largest = std::max(largest, c.flats.size());
  }
  const auto n = static_cast<std::uint32_t>(m.lattice().size());
  ExactCover cover(n, rows);

  PartitionSearchResult result;
  auto to_partition = [&](const std::vector<std::uint32_t>& chosen) {
    TuttePartition p;
    p.q = m.lattice().q();
    for (std::uint32_t r : chosen) p.parts.push_back(cands[r]);
    std::sort(p.parts.begin(), p.parts.end(),
              [](const PrimeFreeInterval& a, const PrimeFreeInterval& b) {
                return a.z != b.z ? a.z < b.z : a.w < b.w;
              });
    return p;
  };
  const std::size_t cap = options.max_partitions;
  auto collect = [&](const std::vector<std::uint32_t>& chosen) {
    result.partitions.push_back(to_partition(chosen));
    return cap == 0 || result.partitions.size() < cap;
  };
  bool budget_hit = false;
  auto run = [&](std::uint32_t max_rows, const ExactCover::Visitor& visit,
                 const ExactCover::Filter& filter) {
    ExactCover::Limits limits{max_rows, options.node_budget};
    ExactCover::Outcome o = cover.search(limits, visit, filter);
    result.nodes += o.nodes;
    budget_hit = budget_hit || o.budget_hit;
    return o;
  };

  switch (mode) {
    case PartitionMode::kMinimal: {
      auto first_only = [&](const std::vector<std::uint32_t>& chosen) {
        result.partitions.push_back(to_partition(chosen));
        return false;
      };
      if (n <= options.exhaustive_flats) {
        const auto start = static_cast<std::uint32_t>((n + largest - 1) / largest);
        for (std::uint32_t d = std::max<std::uint32_t>(start, 1); d <= n; ++d) {
          ExactCover::Outcome o = options.all_minimal
                                      ? run(d, collect, nullptr)
                                      : run(d, first_only, nullptr);
          if (o.budget_hit) break;
          if (!result.partitions.empty()) {
            result.certified = !budget_hit;
            break;
          }
        }
      }
      if (result.partitions.empty()) {
        budget_hit = false;
        run(0, first_only, nullptr);
      }
      break;
    }
    case PartitionMode::kMaximal: {
      auto unmergeable = [&](const std::vector<std::uint32_t>& partial,
                             std::uint32_t row) {
        for (std::uint32_t r : partial) {
          if (oracle.mergeable(cands[r], cands[row])) return false;
        }
        return true;
      };
      ExactCover::Outcome o = run(0, collect, unmergeable);
      result.certified = o.exhausted;
      break;
    }
    case PartitionMode::kAll: {
      ExactCover::Outcome o = run(0, collect, nullptr);
      result.certified = o.exhausted;
      break;
    }
  }
  if (result.partitions.empty()) {
    if (budget_hit) {
      throw BudgetExceeded(result.nodes, options.node_budget,
                           "partition search nodes");
    }
    throw Error(ErrorCode::kNoPartition,
                "no partition into prime-free intervals exists");
  }
  return result;
}

BiPoly partition_polynomial(const TuttePartition& p) {
  std::vector<Term> terms;
  for (const auto& part : p.parts) terms.push_back({part.rho, part.nu, 1});
  return numeric_poly(p.q, terms);
}

void check_partition(const QMatroid& m, const TuttePartition& p) {
  const IntervalOracle oracle(m);
  std::vector<int> hits(m.lattice().size(), 0);
  for (const auto& part : p.parts) {
    const PrimeFreeInterval actual = oracle.make(part.z, part.w);
    if (actual.rho != part.rho || actual.nu != part.nu ||
        actual.clopen != part.clopen) {
      throw Error(ErrorCode::kInvalidPartition,
                  "annotations of part [" + std::to_string(part.z) + ", " +
                      std::to_string(part.w) + "] do not match the matroid");
    }
    for (FlatId x : actual.flats) {
      if (++hits[x] > 1) {
        throw Error(ErrorCode::kInvalidPartition,
                    "flat " + std::to_string(x) + " lies in two parts");
      }
    }
  }
  for (FlatId x = 0; x < hits.size(); ++x) {
    if (hits[x] == 0) {
      throw Error(ErrorCode::kInvalidPartition,
                  "flat " + std::to_string(x) + " is not covered");
    }
  }
}

bool is_tutte_partition(const QMatroid& m, const TuttePartition& p) {
  check_partition(m, p);
  return partition_polynomial(p) == tutte_by_subtraction(rgf(m));
}

std::vector<std::pair<std::size_t, std::size_t>> mergeable_pairs(
    const QMatroid& m, const TuttePartition& p) {
  const IntervalOracle oracle(m);
  std::vector<PrimeFreeInterval> parts;
  for (const auto& part : p.parts) parts.push_back(oracle.make(part.z, part.w));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (oracle.mergeable(parts[i], parts[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace qtutte
