#include "qtutte/independence.hpp"

#include <algorithm>

#include "qtutte/error.hpp"

namespace qtutte {

IndependenceData independence_data(const QMatroid& m) {
  IndependenceData d{m.lattice_ptr(), std::vector<bool>(m.lattice().size())};
  for (FlatId x = 0; x < m.lattice().size(); ++x) d.independent[x] = m.nullity(x) == 0;
  return d;
}

bool IndependenceReport::all_pass() const {
  return std::all_of(axioms.begin(), axioms.end(),
                     [](const AxiomResult& a) { return a.pass; });
}

IndependenceReport independence_report(const IndependenceData& data) {
  const SubspaceLattice& lat = *data.lattice;
  if (data.independent.size() != lat.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "independence data does not match the lattice");
  }
  const auto n = static_cast<FlatId>(lat.size());
  const auto& ind = data.independent;
  IndependenceReport report;

  AxiomResult i1{"I1", ind[lat.bottom()], {}};
  if (!i1.pass) i1.witness = {lat.bottom()};
  report.axioms.push_back(i1);

  AxiomResult i2{"I2", true, {}};
  for (FlatId x = 0; x < n && i2.pass; ++x) {
    if (!ind[x]) continue;
    for (FlatId y : lat.lower_covers(x)) {
      if (!ind[y]) {
        i2.pass = false;
        i2.witness = {x, y};
        break;
      }
    }
  }
  report.axioms.push_back(i2);

  AxiomResult i3{"I3", true, {}};
  for (FlatId a = 0; a < n && i3.pass; ++a) {
    if (!ind[a]) continue;
    for (FlatId b = 0; b < n; ++b) {
      if (!ind[b] || lat.height(a) <= lat.height(b)) continue;
      bool found = false;
      for (FlatId atom : lat.points()) {
        if (lat.leq(atom, a) && !lat.leq(atom, b) && ind[lat.join(b, atom)]) {
          found = true;
          break;
        }
      }
      if (!found) {
        i3.pass = false;
        i3.witness = {a, b};
        break;
      }
    }
  }
  report.axioms.push_back(i3);

  // Maximal independent subflats of every flat.
  std::vector<std::vector<FlatId>> maximal(n);
  for (FlatId x = 0; x < n; ++x) {
    std::vector<FlatId> below = lat.interval(lat.bottom(), x);
    for (FlatId y : below) {
      if (!ind[y]) continue;
      bool is_max = true;
      for (FlatId u : lat.upper_covers(y)) {
        if (ind[u] && lat.leq(u, x)) {
          is_max = false;
          break;
        }
      }
      if (is_max) maximal[x].push_back(y);
    }
  }
  AxiomResult i4{"I4", true, {}};
  for (FlatId a = 0; a < n && i4.pass; ++a) {
    for (FlatId b = a; b < n && i4.pass; ++b) {
      const FlatId ab = lat.join(a, b);
      for (FlatId i : maximal[a]) {
        for (FlatId j : maximal[b]) {
          const FlatId ij = lat.join(i, j);
          bool found = std::any_of(maximal[ab].begin(), maximal[ab].end(),
                                   [&](FlatId k) { return lat.leq(k, ij); });
          if (!found) {
            i4.pass = false;
            i4.witness = {a, b, i, j};
            break;
          }
        }
        if (!i4.pass) break;
      }
    }
  }
  report.axioms.push_back(i4);
  return report;
}

IndependenceReport independence_report(const QMatroid& m) {
  return independence_report(independence_data(m));
}

}  // namespace qtutte
