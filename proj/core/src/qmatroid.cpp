#include "qtutte/qmatroid.hpp"

#include <algorithm>
#include <string>

#include "qtutte/error.hpp"

namespace qtutte {

const char* diamond_type_name(DiamondType t) {
  switch (t) {
    case DiamondType::kOne: return "One";
    case DiamondType::kMixed: return "Mixed";
    case DiamondType::kPrime: return "Prime";
    case DiamondType::kZero: return "Zero";
  }
  return "?";
}

QMatroid QMatroid::from_ranks(std::shared_ptr<const SubspaceLattice> lattice,
                              std::vector<int> ranks) {
  const SubspaceLattice& lat = *lattice;
  if (ranks.size() != lat.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(lat.size()) + " ranks, got " +
                    std::to_string(ranks.size()));
  }
  const auto n = static_cast<FlatId>(lat.size());
  for (FlatId x = 0; x < n; ++x) {
    if (ranks[x] < 0 || ranks[x] > lat.height(x)) {
      throw AxiomViolation("R1", {x},
                           "R1: rank " + std::to_string(ranks[x]) + " of flat " +
                               std::to_string(x) + " not within [0, height]");
    }
  }
  // The order is generated by covers, so checking covers checks every
  // comparable pair.
  for (const Cover& c : lat.covers()) {
    if (ranks[c.lower] > ranks[c.upper]) {
      throw AxiomViolation("R2", {c.lower, c.upper},
                           "R2: rank decreases from flat " +
                               std::to_string(c.lower) + " to " +
                               std::to_string(c.upper));
    }
  }
  for (FlatId a = 0; a < n; ++a) {
    for (FlatId b = a + 1; b < n; ++b) {
      const FlatId j = lat.join(a, b);
      if (j == a || j == b) continue;  // comparable: equality holds
      const FlatId m = lat.meet(a, b);
      if (ranks[j] + ranks[m] > ranks[a] + ranks[b]) {
        throw AxiomViolation(
            "R3", {a, b},
            "R3: submodularity fails for flats " + std::to_string(a) + " and " +
                std::to_string(b));
      }
    }
  }
  for (const Cover& c : lat.covers()) {
    if (ranks[c.upper] - ranks[c.lower] > 1) {
      throw AxiomViolation("unit-increment", {c.lower, c.upper},
                           "rank jumps by more than one across cover " +
                               std::to_string(c.lower) + " < " +
                               std::to_string(c.upper));
    }
  }
  return QMatroid(std::move(lattice), std::move(ranks));
}

QMatroid QMatroid::from_coloring(std::shared_ptr<const SubspaceLattice> lattice,
                                 const Coloring& colors) {
  const SubspaceLattice& lat = *lattice;
  if (colors.size() != lat.covers().size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(lat.covers().size()) +
                    " cover colors, got " + std::to_string(colors.size()));
  }
  auto red = [&](FlatId lo, FlatId hi) {
    return colors[lat.cover_index(lo, hi)] == Color::kRed;
  };

  for (const Diamond& d : lat.diamonds()) {
    DiamondCensus census;
    census.bottom = d.bottom;
    census.top = d.top;
    FlatId green_middle = 0;
    for (FlatId m : d.middles) {
      if (red(d.bottom, m)) {
        ++census.lower_red;
      } else {
        ++census.lower_green;
        green_middle = m;
      }
      if (red(m, d.top)) {
        ++census.upper_red;
      } else {
        ++census.upper_green;
      }
    }
    const int width = static_cast<int>(d.middles.size());
    const bool one = census.lower_red == width && census.upper_red == width;
    const bool zero = census.lower_green == width && census.upper_green == width;
    const bool prime = census.lower_red == width && census.upper_green == width;
    const bool mixed = census.lower_green == 1 && census.upper_red == 1 &&
                       red(green_middle, d.top);
    if (!(one || zero || prime || mixed)) {
      throw DiamondViolation(
          census, "diamond [" + std::to_string(d.bottom) + ", " +
                      std::to_string(d.top) + "] is not matroidal: lower " +
                      std::to_string(census.lower_red) + " red / " +
                      std::to_string(census.lower_green) + " green, upper " +
                      std::to_string(census.upper_red) + " red / " +
                      std::to_string(census.upper_green) + " green");
    }
  }

  // Chain through the first lower cover and chain through the last one.
  const auto n = static_cast<FlatId>(lat.size());
  std::vector<int> first(n, 0);
  std::vector<int> last(n, 0);
  for (FlatId x = 1; x < n; ++x) {
    auto lows = lat.lower_covers(x);
    first[x] = first[lows.front()] + (red(lows.front(), x) ? 1 : 0);
    last[x] = last[lows.back()] + (red(lows.back(), x) ? 1 : 0);
    if (first[x] != last[x]) {
      throw Error(ErrorCode::kCharacterizationMismatch,
                  "red-cover count of flat " + std::to_string(x) +
                      " depends on the chain");
    }
  }
  return from_ranks(std::move(lattice), std::move(first));
}

Coloring QMatroid::coloring() const {
  Coloring out;
  out.reserve(lattice_->covers().size());
  for (const Cover& c : lattice_->covers()) out.push_back(color(c.lower, c.upper));
  return out;
}

DiamondType diamond_type(const QMatroid& m, FlatId z, FlatId w) {
  const SubspaceLattice& lat = m.lattice();
  if (lat.height(w) != lat.height(z) + 2 || !lat.leq(z, w)) {
    throw Error(ErrorCode::kNotADiamond,
                "[" + std::to_string(z) + ", " + std::to_string(w) +
                    "] is not a height-2 interval");
  }
  const int d = m.rank(w) - m.rank(z);
  if (d == 0) return DiamondType::kZero;
  if (d == 2) return DiamondType::kOne;
  int green_lower = 0;
  for (FlatId mid : lat.upper_covers(z)) {
    if (lat.leq(mid, w) && m.rank(mid) == m.rank(z)) ++green_lower;
  }
  return green_lower == 0 ? DiamondType::kPrime : DiamondType::kMixed;
}

QMatroid uniform(std::shared_ptr<const SubspaceLattice> lattice, int rho) {
  if (rho < 0 || rho > lattice->k()) {
    throw Error(ErrorCode::kRankOutOfRange,
                "uniform rank " + std::to_string(rho) + " outside [0, " +
                    std::to_string(lattice->k()) + "]");
  }
  std::vector<int> ranks(lattice->size());
  for (FlatId x = 0; x < lattice->size(); ++x) {
    ranks[x] = std::min(lattice->height(x), rho);
  }
  return QMatroid::from_ranks(std::move(lattice), std::move(ranks));
}

QMatroid prime_free(std::shared_ptr<const SubspaceLattice> lattice, FlatId z) {
  const SubspaceLattice& lat = *lattice;
  Coloring colors;
  colors.reserve(lat.covers().size());
  for (const Cover& c : lat.covers()) {
    colors.push_back(lat.modular_case(z, c.lower, c.upper) ==
                             ModularCase::kMeetRises
                         ? Color::kGreen
                         : Color::kRed);
  }
  return QMatroid::from_coloring(std::move(lattice), colors);
}

QMatroid parallel_line(std::shared_ptr<const SubspaceLattice> lattice,
                       FlatId line) {
  if (lattice->k() != 3 || lattice->height(line) != 2) {
    throw Error(ErrorCode::kRankOutOfRange,
                "parallel_line needs a line of a height-3 lattice");
  }
  std::vector<int> ranks(lattice->size());
  for (FlatId x = 0; x < lattice->size(); ++x) {
    ranks[x] = std::min(lattice->height(x), 2);
  }
  ranks[line] = 1;
  return QMatroid::from_ranks(std::move(lattice), std::move(ranks));
}

FlatStatus flat_status(const QMatroid& m, FlatId x) {
  const SubspaceLattice& lat = m.lattice();
  FlatStatus s;
  s.rank = m.rank(x);
  s.nullity = m.nullity(x);
  s.independent = s.nullity == 0;
  s.spanning = s.rank == m.rank();
  s.closed = std::all_of(lat.upper_covers(x).begin(), lat.upper_covers(x).end(),
                         [&](FlatId y) { return m.color(x, y) == Color::kRed; });
  s.open = std::all_of(lat.lower_covers(x).begin(), lat.lower_covers(x).end(),
                       [&](FlatId y) { return m.color(y, x) == Color::kGreen; });
  s.clopen = s.closed && s.open;
  s.basis = s.independent && s.spanning;

  const int h = lat.height(x);
  if (h >= 1) {
    s.circuit = true;
    for (FlatId y : lat.interval(lat.bottom(), x)) {
      if (m.rank(y) != std::min(lat.height(y), h - 1)) {
        s.circuit = false;
        break;
      }
    }
  }
  if (x != lat.top()) {
    s.copoint = true;
    for (FlatId y : lat.interval(x, lat.top())) {
      if (m.rank(y) - s.rank != std::min(lat.height(y) - h, 1)) {
        s.copoint = false;
        break;
      }
    }
  }
  return s;
}

CircuitsAndCopoints circuits_and_copoints(const QMatroid& m) {
  const SubspaceLattice& lat = m.lattice();
  const auto n = static_cast<FlatId>(lat.size());
  std::vector<FlatStatus> status(n);
  for (FlatId x = 0; x < n; ++x) status[x] = flat_status(m, x);

  CircuitsAndCopoints out;
  std::vector<FlatId> minimal_open;
  std::vector<FlatId> maximal_closed;
  for (FlatId x = 0; x < n; ++x) {
    if (status[x].circuit) out.circuits.push_back(x);
    if (status[x].copoint) out.copoints.push_back(x);
    if (x != lat.bottom() && status[x].open) {
      bool minimal = true;
      for (FlatId y : lat.interval(lat.bottom(), x)) {
        if (y != x && y != lat.bottom() && status[y].open) {
          minimal = false;
          break;
        }
      }
      if (minimal) minimal_open.push_back(x);
    }
    if (x != lat.top() && status[x].closed) {
      bool maximal = true;
      for (FlatId y : lat.interval(x, lat.top())) {
        if (y != x && y != lat.top() && status[y].closed) {
          maximal = false;
          break;
        }
      }
      if (maximal) maximal_closed.push_back(x);
    }
  }
  if (minimal_open != out.circuits) {
    throw Error(ErrorCode::kCharacterizationMismatch,
                "circuits differ from the minimal proper open flats");
  }
  if (maximal_closed != out.copoints) {
    throw Error(ErrorCode::kCharacterizationMismatch,
                "copoints differ from the maximal proper closed flats");
  }
  return out;
}

std::vector<FlatId> bases(const QMatroid& m) {
  std::vector<FlatId> out;
  for (FlatId x : m.lattice().by_height(m.rank())) {
    if (m.rank(x) == m.rank()) out.push_back(x);
  }
  return out;
}

std::vector<FlatId> clopen_flats(const QMatroid& m) {
  std::vector<FlatId> out;
  for (FlatId x = 0; x < m.lattice().size(); ++x) {
    if (flat_status(m, x).clopen) out.push_back(x);
  }
  return out;
}

QMatroid dual(const QMatroid& m) {
  const SubspaceLattice& lat = m.lattice();
  std::vector<int> ranks(lat.size());
  for (FlatId x = 0; x < lat.size(); ++x) {
    ranks[x] = lat.height(x) - m.rank() + m.rank(lat.perp(x));
  }
  return QMatroid::from_ranks(m.lattice_ptr(), std::move(ranks));
}

QMatroid minor(const QMatroid& m, FlatId z, FlatId w) {
  const SubspaceLattice& lat = m.lattice();
  if (!lat.leq(z, w)) {
    throw Error(ErrorCode::kNotComparable,
                "flat " + std::to_string(z) + " is not below " +
                    std::to_string(w));
  }
  auto small = shared_lattice(lat.q(), lat.height(w) - lat.height(z));
  std::vector<FlatId> embed = lat.interval_embedding(z, w, *small);
  std::vector<int> ranks(small->size());
  for (FlatId u = 0; u < small->size(); ++u) {
    ranks[u] = m.rank(embed[u]) - m.rank(z);
  }
  return QMatroid::from_ranks(std::move(small), std::move(ranks));
}

int classical_rank(const QMatroid& m, std::span<const FlatId> atoms) {
  const SubspaceLattice& lat = m.lattice();
  FlatId acc = lat.bottom();
  for (FlatId a : atoms) {
    if (lat.height(a) != 1) {
      throw Error(ErrorCode::kNotAnAtom,
                  "flat " + std::to_string(a) + " is not an atom");
    }
    acc = lat.join(acc, a);
  }
  return m.rank(acc);
}

}  // namespace qtutte
