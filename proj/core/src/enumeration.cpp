#include "qtutte/enumeration.hpp"

#include <algorithm>
#include <atomic>

#include "qtutte/error.hpp"
#include "qtutte/isomorphism.hpp"
#include "qtutte/parallel.hpp"

namespace qtutte {

namespace {

class RankSearch {
 public:
  RankSearch(const SubspaceLattice& lat, std::uint64_t max_results,
             std::atomic<std::uint64_t>& found)
      : lat_(lat), max_results_(max_results), found_(found),
        completes_(lat.size()) {
    for (FlatId u = 0; u < lat.size(); ++u) {
      auto lower = lat.lower_covers(u);
      if (!lower.empty()) {
        completes_[*std::max_element(lower.begin(), lower.end())].push_back(u);
      }
    }
  }

  // Ranks for flat x consistent with every smaller id. A value is kept only
  // if each flat whose lower covers x completes still has some admissible
  // rank; without this look-ahead dead ends surface many levels later.
  void candidates(std::vector<int>& ranks, FlatId x,
                  std::vector<int>& out) const {
    out.clear();
    int lo = 0;
    int hi = 0;
    bounds(ranks, x, lo, hi);
    for (int r = lo; r <= hi; ++r) {
      if (!diamonds_ok(ranks, x, r)) continue;
      ranks[x] = r;
      const bool ahead = std::all_of(
          completes_[x].begin(), completes_[x].end(),
          [&](FlatId u) { return viable(ranks, u); });
      if (ahead) out.push_back(r);
    }
    ranks[x] = 0;
  }

  void run(std::vector<int>& ranks, FlatId x,
           std::vector<std::vector<int>>& out) {
    if (x == lat_.size()) {
      if (found_.fetch_add(1) + 1 > max_results_) {
        throw BudgetExceeded(found_.load(), max_results_,
                             "matroid enumeration");
      }
      out.push_back(ranks);
      return;
    }
    std::vector<int> cand;
    candidates(ranks, x, cand);
    for (int r : cand) {
      ranks[x] = r;
      run(ranks, x + 1, out);
    }
    ranks[x] = 0;
  }

 private:
  // Unit increments across the lower covers of x, capped by its height.
  void bounds(const std::vector<int>& ranks, FlatId x, int& lo, int& hi) const {
    auto lower = lat_.lower_covers(x);
    lo = 0;
    hi = lower.empty() ? 0 : lat_.height(x);
    int min_lower = hi;
    for (FlatId y : lower) {
      lo = std::max(lo, ranks[y]);
      min_lower = std::min(min_lower, ranks[y]);
    }
    if (!lower.empty()) hi = std::min(hi, min_lower + 1);
  }

  bool viable(const std::vector<int>& ranks, FlatId u) const {
    int lo = 0;
    int hi = 0;
    bounds(ranks, u, lo, hi);
    for (int r = lo; r <= hi; ++r) {
      if (diamonds_ok(ranks, u, r)) return true;
    }
    return false;
  }

  // With rank(w) = r, no diamond below w may have two green lower covers
  // when the rank rises by exactly one.
  bool diamonds_ok(const std::vector<int>& ranks, FlatId w, int r) const {
    for (std::uint32_t di : lat_.diamonds_with_top(w)) {
      const Diamond& d = lat_.diamonds()[di];
      const int base = ranks[d.bottom];
      if (r - base != 1) continue;
      int green = 0;
      for (FlatId m : d.middles) {
        if (ranks[m] == base && ++green > 1) return false;
      }
    }
    return true;
  }

  const SubspaceLattice& lat_;
  std::uint64_t max_results_;
  std::atomic<std::uint64_t>& found_;
  // completes_[x]: flats whose largest lower-cover id is x.
  std::vector<std::vector<FlatId>> completes_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_rank_vectors(
    const SubspaceLattice& lattice, const EnumerationOptions& options) {
  const std::uint64_t work =
      static_cast<std::uint64_t>(std::max(lattice.k(), 1)) * lattice.size();
  if (work > options.max_work) {
    throw BudgetExceeded(work, options.max_work, "raw enumeration (k * flats)");
  }
  std::atomic<std::uint64_t> found{0};
  RankSearch search(lattice, options.max_results, found);

  // Expand a frontier breadth-first until there is enough independent work,
  // then finish each prefix depth-first. Prefixes stay in lexicographic
  // order, so concatenating per-prefix results is deterministic.
  std::vector<std::vector<int>> frontier{std::vector<int>(lattice.size(), 0)};
  FlatId depth = 0;
  const std::size_t want =
      options.threads > 1 ? static_cast<std::size_t>(options.threads) * 8 : 1;
  std::vector<int> cand;
  while (depth < lattice.size() && frontier.size() < want) {
    std::vector<std::vector<int>> next;
    for (auto& prefix : frontier) {
      search.candidates(prefix, depth, cand);
      for (int r : cand) {
        prefix[depth] = r;
        next.push_back(prefix);
      }
    }
    frontier = std::move(next);
    ++depth;
  }

  std::vector<std::vector<std::vector<int>>> parts(frontier.size());
  parallel_for(frontier.size(), options.threads, [&](std::size_t i) {
    std::vector<int> ranks = frontier[i];
    search.run(ranks, depth, parts[i]);
  });
  std::vector<std::vector<int>> all;
  for (auto& p : parts) {
    for (auto& v : p) all.push_back(std::move(v));
  }
  return all;
}

std::vector<QMatroid> enumerate_matroids(
    std::shared_ptr<const SubspaceLattice> lattice, bool up_to_iso,
    const EnumerationOptions& options) {
  if (up_to_iso && lattice->k() > options.max_iso_height) {
    throw BudgetExceeded(static_cast<std::uint64_t>(lattice->k()),
                         static_cast<std::uint64_t>(options.max_iso_height),
                         "isomorphism reduction (lattice height)");
  }
  std::vector<std::vector<int>> raw = enumerate_rank_vectors(*lattice, options);
  std::vector<std::size_t> keep;
  if (up_to_iso) {
    keep = orbit_representatives(*lattice, raw);
  } else {
    keep.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) keep[i] = i;
  }
  std::vector<QMatroid> out;
  out.reserve(keep.size());
  for (std::size_t i : keep) {
    out.push_back(QMatroid::from_ranks(lattice, std::move(raw[i])));
  }
  return out;
}

}  // namespace qtutte
