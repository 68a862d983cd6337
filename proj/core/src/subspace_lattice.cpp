#include "qtutte/subspace_lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "qtutte/error.hpp"

namespace qtutte {

Subspace Subspace::span(const FiniteField& field, const GfMatrix& m) {
  check_entries(field, m);
  return Subspace(reduce_rows(field, m));
}

Subspace rref(const FiniteField& field, const GfMatrix& m) {
  return Subspace::span(field, m);
}

__extension__ typedef unsigned __int128 U128;

std::uint64_t subspace_count(std::uint64_t q, int n, int d) noexcept {
  if (d < 0 || d > n) return 0;
  constexpr U128 kCap = ~std::uint64_t{0};
  U128 result = 1;
  auto power_minus_one = [q](int e) -> U128 {
    U128 v = 1;
    for (int i = 0; i < e; ++i) {
      v *= q;
      if (v > kCap) return kCap + 1;
    }
    return v - 1;
  };
  for (int i = 0; i < d; ++i) {
    U128 num = power_minus_one(n - i);
    U128 den = power_minus_one(i + 1);
    if (num > kCap || result > kCap / (num == 0 ? 1 : num)) return ~std::uint64_t{0};
    result = result * num / den;
  }
  return result > kCap ? ~std::uint64_t{0} : static_cast<std::uint64_t>(result);
}

namespace {

// All d x k reduced row-echelon matrices, unsorted.
void enumerate_rref(const FiniteField& field, int k, int d,
                    std::vector<GfMatrix>& out) {
  const int q = field.order();
  std::vector<int> pivots(d);
  for (int i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(k, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_cells;
    for (int r = 0; r < d; ++r) {
      for (int c = pivots[r] + 1; c < k; ++c) {
        if (!is_pivot[c]) free_cells.emplace_back(r, c);
      }
    }
    GfMatrix base(d, k);
    for (int r = 0; r < d; ++r) base.at(r, pivots[r]) = 1;
    std::vector<int> digits(free_cells.size(), 0);
    while (true) {
      GfMatrix m = base;
      for (std::size_t i = 0; i < free_cells.size(); ++i) {
        m.at(free_cells[i].first, free_cells[i].second) =
            static_cast<Elem>(digits[i]);
      }
      out.push_back(std::move(m));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    // Next pivot combination in lexicographic order.
    int i = d - 1;
    while (i >= 0 && pivots[i] == k - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace

SubspaceLattice SubspaceLattice::build(int q, int k,
                                       const LatticeOptions& options) {
  return build(FiniteField::make(q, options.max_field_order), k, options);
}

SubspaceLattice SubspaceLattice::build(const FiniteField& field, int k,
                                       const LatticeOptions& options) {
  if (k < 0) {
    throw Error(ErrorCode::kDimensionMismatch, "lattice height must be >= 0");
  }
  std::uint64_t projected = 0;
  for (int d = 0; d <= k; ++d) {
    std::uint64_t c = subspace_count(field.order(), k, d);
    projected = (projected > ~std::uint64_t{0} - c) ? ~std::uint64_t{0}
                                                     : projected + c;
  }
  if (projected > options.max_flats) {
    throw BudgetExceeded(projected, options.max_flats,
                         "lattice L(" + std::to_string(field.order()) + "," +
                             std::to_string(k) + ")");
  }

  SubspaceLattice lat(field, k);
  lat.flats_.reserve(projected);
  lat.ids_by_height_.resize(k + 1);
  for (int d = 0; d <= k; ++d) {
    std::vector<GfMatrix> level;
    if (d == 0) {
      level.emplace_back(0, k);
    } else {
      enumerate_rref(field, k, d, level);
    }
    std::sort(level.begin(), level.end(),
              [](const GfMatrix& a, const GfMatrix& b) {
                return a.data() < b.data();
              });
    for (auto& m : level) {
      lat.ids_by_height_[d].push_back(static_cast<FlatId>(lat.flats_.size()));
      lat.flats_.push_back(Subspace(std::move(m)));
    }
  }

  const std::size_t n = lat.flats_.size();

  // Upper covers: x v p over all points p not below x.
  std::vector<std::vector<FlatId>> up(n);
  std::vector<std::vector<FlatId>> down(n);
  for (FlatId x = 0; x < n; ++x) {
    if (lat.height(x) == k) continue;
    for (FlatId p : lat.points()) {
      FlatId y = lat.join(x, p);
      if (y != x) up[x].push_back(y);
    }
    std::sort(up[x].begin(), up[x].end());
    up[x].erase(std::unique(up[x].begin(), up[x].end()), up[x].end());
    for (FlatId y : up[x]) down[y].push_back(x);
  }
  lat.upper_offset_.push_back(0);
  lat.lower_offset_.push_back(0);
  for (FlatId x = 0; x < n; ++x) {
    for (FlatId y : up[x]) {
      lat.upper_.push_back(y);
      lat.covers_.push_back({x, y});
    }
    lat.upper_offset_.push_back(static_cast<std::uint32_t>(lat.upper_.size()));
    std::sort(down[x].begin(), down[x].end());
    lat.lower_.insert(lat.lower_.end(), down[x].begin(), down[x].end());
    lat.lower_offset_.push_back(static_cast<std::uint32_t>(lat.lower_.size()));
  }

  lat.perp_.resize(n);
  for (FlatId x = 0; x < n; ++x) {
    lat.perp_[x] = lat.id_of(
        Subspace(orthogonal_complement(field, lat.flats_[x].rows())));
  }

  // Diamonds: group the two-step paths z < m < w by (w, z).
  std::map<std::pair<FlatId, FlatId>, std::vector<FlatId>> paths;
  for (FlatId z = 0; z < n; ++z) {
    for (FlatId m : lat.upper_covers(z)) {
      for (FlatId w : lat.upper_covers(m)) paths[{w, z}].push_back(m);
    }
  }
  lat.diamond_offset_.assign(n + 1, 0);
  for (auto& [key, middles] : paths) {
    std::sort(middles.begin(), middles.end());
    lat.diamonds_.push_back({key.second, key.first, std::move(middles)});
    ++lat.diamond_offset_[key.first + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    lat.diamond_offset_[i + 1] += lat.diamond_offset_[i];
  }
  lat.diamond_index_.resize(lat.diamonds_.size());
  for (std::size_t i = 0; i < lat.diamonds_.size(); ++i) {
    lat.diamond_index_[i] = static_cast<std::uint32_t>(i);
  }
  return lat;
}

void SubspaceLattice::check_id(FlatId id) const {
  if (id >= flats_.size()) {
    throw Error(ErrorCode::kInvalidId,
                "flat id " + std::to_string(id) + " out of range (size " +
                    std::to_string(flats_.size()) + ")");
  }
}

const Subspace& SubspaceLattice::flat(FlatId id) const {
  check_id(id);
  return flats_[id];
}

std::span<const FlatId> SubspaceLattice::by_height(int d) const {
  if (d < 0 || d > k_) return {};
  return ids_by_height_[d];
}

std::span<const FlatId> SubspaceLattice::upper_covers(FlatId id) const {
  check_id(id);
  return {upper_.data() + upper_offset_[id],
          upper_.data() + upper_offset_[id + 1]};
}

std::span<const FlatId> SubspaceLattice::lower_covers(FlatId id) const {
  check_id(id);
  return {lower_.data() + lower_offset_[id],
          lower_.data() + lower_offset_[id + 1]};
}

std::size_t SubspaceLattice::cover_index(FlatId lower, FlatId upper) const {
  auto ups = upper_covers(lower);
  auto it = std::lower_bound(ups.begin(), ups.end(), upper);
  if (it == ups.end() || *it != upper) {
    throw Error(ErrorCode::kNotACover,
                "flat " + std::to_string(upper) + " does not cover " +
                    std::to_string(lower));
  }
  return upper_offset_[lower] + static_cast<std::size_t>(it - ups.begin());
}

std::span<const std::uint32_t> SubspaceLattice::diamonds_with_top(
    FlatId w) const {
  check_id(w);
  return {diamond_index_.data() + diamond_offset_[w],
          diamond_index_.data() + diamond_offset_[w + 1]};
}

FlatId SubspaceLattice::id_of(const Subspace& s) const {
  if (s.ambient_dimension() != k_ && s.height() > 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "subspace of dimension " + std::to_string(s.ambient_dimension()) +
                    " in lattice of height " + std::to_string(k_));
  }
  const int d = s.height();
  const auto& ids = ids_by_height_[d];
  auto it = std::lower_bound(ids.begin(), ids.end(), s,
                             [this](FlatId id, const Subspace& key) {
                               return flats_[id].rows().data() <
                                      key.rows().data();
                             });
  if (it == ids.end() || flats_[*it].rows().data() != s.rows().data()) {
    throw Error(ErrorCode::kInvalidId, "subspace not found in lattice");
  }
  return *it;
}

FlatId SubspaceLattice::span_id(const GfMatrix& m) const {
  if (m.cols() != k_ && m.rows() > 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix has " + std::to_string(m.cols()) + " columns, expected " +
                    std::to_string(k_));
  }
  return id_of(Subspace::span(field_, m.rows() > 0 ? m : GfMatrix(0, k_)));
}

FlatId SubspaceLattice::join(FlatId a, FlatId b) const {
  check_id(a);
  check_id(b);
  if (a == b) return a;
  if (height(a) == 0) return b;
  if (height(b) == 0) return a;
  GfMatrix stacked = flats_[a].rows();
  stacked.append_rows(flats_[b].rows());
  return id_of(Subspace(reduce_rows(field_, std::move(stacked))));
}

FlatId SubspaceLattice::meet(FlatId a, FlatId b) const {
  return perp_[join(perp(a), perp(b))];
}

FlatId SubspaceLattice::perp(FlatId id) const {
  check_id(id);
  return perp_[id];
}

bool SubspaceLattice::leq(FlatId a, FlatId b) const {
  check_id(a);
  check_id(b);
  if (a == b) return true;
  if (height(a) >= height(b)) return false;
  const GfMatrix& big = flats_[b].rows();
  const GfMatrix& small = flats_[a].rows();
  for (int r = 0; r < small.rows(); ++r) {
    std::vector<Elem> v(small.data().begin() + r * k_,
                        small.data().begin() + (r + 1) * k_);
    if (!in_row_space(field_, big, std::move(v))) return false;
  }
  return true;
}

std::vector<FlatId> SubspaceLattice::interval(FlatId z, FlatId w) const {
  if (!leq(z, w)) {
    throw Error(ErrorCode::kNotComparable,
                "flat " + std::to_string(z) + " is not below " +
                    std::to_string(w));
  }
  std::vector<FlatId> out{z};
  std::vector<bool> seen(flats_.size(), false);
  seen[z] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (FlatId y : upper_covers(out[i])) {
      if (seen[y]) continue;
      seen[y] = true;
      if (leq(y, w)) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FlatId> SubspaceLattice::complements(FlatId x, FlatId z,
                                                 FlatId w) const {
  if (!leq(z, x) || !leq(x, w)) {
    throw Error(ErrorCode::kNotComparable,
                "complements require z <= x <= w");
  }
  std::vector<FlatId> out;
  const int target = height(z) + height(w) - height(x);
  for (FlatId y : interval(z, w)) {
    if (height(y) != target) continue;
    if (join(x, y) == w && meet(x, y) == z) out.push_back(y);
  }
  return out;
}

ModularCase SubspaceLattice::modular_case(FlatId z, FlatId x, FlatId y) const {
  if (height(y) != height(x) + 1 || !leq(x, y)) {
    throw Error(ErrorCode::kNotACover,
                "flat " + std::to_string(y) + " does not cover " +
                    std::to_string(x));
  }
  const FlatId xz_join = join(x, z);
  const FlatId yz_join = join(y, z);
  const FlatId xz_meet = meet(x, z);
  const FlatId yz_meet = meet(y, z);
  const bool join_rises =
      height(yz_join) == height(xz_join) + 1 && yz_meet == xz_meet;
  const bool meet_rises =
      yz_join == xz_join && height(yz_meet) == height(xz_meet) + 1;
  if (join_rises == meet_rises) {
    throw Error(ErrorCode::kCharacterizationMismatch,
                "modular dichotomy failed for z=" + std::to_string(z) +
                    ", [" + std::to_string(x) + "," + std::to_string(y) + "]");
  }
  return join_rises ? ModularCase::kJoinRises : ModularCase::kMeetRises;
}

std::vector<FlatId> SubspaceLattice::interval_embedding(
    FlatId z, FlatId w, const SubspaceLattice& interval_lattice) const {
  if (!leq(z, w)) {
    throw Error(ErrorCode::kNotComparable,
                "flat " + std::to_string(z) + " is not below " +
                    std::to_string(w));
  }
  const int m = height(w) - height(z);
  if (interval_lattice.k() != m || interval_lattice.q() != q()) {
    throw Error(ErrorCode::kLatticeMismatch,
                "interval lattice must be L(q, height(w) - height(z))");
  }
  // Extend a basis of z to one of w; the added rows coordinatize w / z.
  GfMatrix basis = flats_[z].rows();
  if (basis.rows() == 0) basis = GfMatrix(0, k_);
  GfMatrix extension(0, k_);
  const GfMatrix& wrows = flats_[w].rows();
  for (int r = 0; r < wrows.rows() && extension.rows() < m; ++r) {
    std::vector<Elem> v(wrows.data().begin() + r * k_,
                        wrows.data().begin() + (r + 1) * k_);
    GfMatrix current = reduce_rows(field_, basis);
    if (in_row_space(field_, current, v)) continue;
    GfMatrix row(1, k_, v);
    basis.append_rows(row);
    extension.append_rows(row);
  }

  std::vector<FlatId> out(interval_lattice.size());
  for (FlatId u = 0; u < interval_lattice.size(); ++u) {
    GfMatrix stacked = flats_[z].rows();
    if (stacked.rows() == 0) stacked = GfMatrix(0, k_);
    const GfMatrix& urows = interval_lattice.flat(u).rows();
    if (urows.rows() > 0) stacked.append_rows(multiply(field_, urows, extension));
    out[u] = span_id(stacked);
  }
  return out;
}

std::shared_ptr<const SubspaceLattice> shared_lattice(
    int q, int k, const LatticeOptions& options) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const SubspaceLattice>>
      cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({q, k});
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const SubspaceLattice>(
      SubspaceLattice::build(q, k, options));
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(q, k), built);
  return it->second;
}

}  // namespace qtutte
