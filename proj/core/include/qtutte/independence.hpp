#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qtutte/qmatroid.hpp"

namespace qtutte {

// A raw independence predicate on a lattice, not necessarily matroidal.
struct IndependenceData {
  std::shared_ptr<const SubspaceLattice> lattice;
  std::vector<bool> independent;
};

IndependenceData independence_data(const QMatroid& m);

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::vector<FlatId> witness;  // empty on pass
};

// I1..I4 by exhaustive quantification over the lattice.
//   I1 bottom independent.
//   I2 subflats of independent flats are independent.
//   I3 for independent A, B with h(A) > h(B) some atom a <= A, a !<= B has
//      B v a independent.
//   I4 for maximal independent I <= A, J <= B, some maximal independent
//      subflat of A v B lies below I v J.
struct IndependenceReport {
  std::vector<AxiomResult> axioms;  // I1, I2, I3, I4 in order
  bool all_pass() const;
  const AxiomResult& operator[](int i) const { return axioms.at(i - 1); }
};

IndependenceReport independence_report(const IndependenceData& data);
IndependenceReport independence_report(const QMatroid& m);

}  // namespace qtutte
