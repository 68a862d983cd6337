#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qtutte/subspace_lattice.hpp"

namespace qtutte {

// Red covers are those across which the rank rises.
enum class Color : std::uint8_t { kGreen = 0, kRed = 1 };

// One color per entry of SubspaceLattice::covers().
using Coloring = std::vector<Color>;

enum class DiamondType { kOne, kMixed, kPrime, kZero };

const char* diamond_type_name(DiamondType t);

// A q-matroid: a rank value on every flat of a subspace lattice. Instances
// only come out of the validating factories, so every QMatroid satisfies
// boundedness, monotonicity, submodularity and unit cover increments.
class QMatroid {
 public:
  // Validates R1 (0 <= rank <= height), R2 (monotone), R3 (submodular over
  // all flat pairs) and unit increments across covers. Throws
  // AxiomViolation with a witness.
  static QMatroid from_ranks(std::shared_ptr<const SubspaceLattice> lattice,
                             std::vector<int> ranks);

  // Accepts a bi-coloring, checks every diamond is One/Mixed/Prime/Zero
  // (DiamondViolation otherwise), reads ranks off one maximal chain per flat
  // and re-checks them along a second chain.
  static QMatroid from_coloring(std::shared_ptr<const SubspaceLattice> lattice,
                                const Coloring& colors);

  const SubspaceLattice& lattice() const noexcept { return *lattice_; }
  const std::shared_ptr<const SubspaceLattice>& lattice_ptr() const noexcept {
    return lattice_;
  }

  std::span<const int> ranks() const noexcept { return ranks_; }
  int rank(FlatId x) const { return ranks_.at(x); }
  int nullity(FlatId x) const { return lattice_->height(x) - rank(x); }
  // Rank and nullity of the matroid itself (of the top flat).
  int rank() const { return ranks_.back(); }
  int nullity() const { return lattice_->k() - rank(); }

  Color color(FlatId lower, FlatId upper) const {
    return ranks_.at(upper) > ranks_.at(lower) ? Color::kRed : Color::kGreen;
  }
  Coloring coloring() const;

  friend bool operator==(const QMatroid& a, const QMatroid& b) {
    return a.lattice_->q() == b.lattice_->q() &&
           a.lattice_->k() == b.lattice_->k() && a.ranks_ == b.ranks_;
  }

 private:
  QMatroid(std::shared_ptr<const SubspaceLattice> lattice,
           std::vector<int> ranks)
      : lattice_(std::move(lattice)), ranks_(std::move(ranks)) {}

  std::shared_ptr<const SubspaceLattice> lattice_;
  std::vector<int> ranks_;
};

// Type of the height-2 interval [z, w]. Throws kNotADiamond.
DiamondType diamond_type(const QMatroid& m, FlatId z, FlatId w);

// rank(x) = min(height(x), rho). U_{rho, k - rho} in rank-nullity notation.
QMatroid uniform(std::shared_ptr<const SubspaceLattice> lattice, int rho);

// The prime-free q-matroid whose clopen flat is z: [x, y] is green iff
// y ^ z covers x ^ z. Rank k - height(z), nullity height(z).
QMatroid prime_free(std::shared_ptr<const SubspaceLattice> lattice, FlatId z);

// Rank-2 matroid on a height-3 lattice in which every point has rank 1 and
// the designated line (and only it) has rank 1.
QMatroid parallel_line(std::shared_ptr<const SubspaceLattice> lattice,
                       FlatId line);

struct FlatStatus {
  int rank = 0;
  int nullity = 0;
  bool independent = false;
  bool spanning = false;
  bool closed = false;
  bool open = false;
  bool clopen = false;
  bool basis = false;
  bool circuit = false;
  bool copoint = false;
};

// Cover-color flags for one flat. Quantifiers over an empty cover set are
// vacuously true (bottom is open and independent, top closed and spanning).
FlatStatus flat_status(const QMatroid& m, FlatId x);

struct CircuitsAndCopoints {
  std::vector<FlatId> circuits;
  std::vector<FlatId> copoints;
};

// Circuits via uniform restrictions, cross-checked against the minimal
// proper open flats; copoints dually. Disagreement throws
// kCharacterizationMismatch.
CircuitsAndCopoints circuits_and_copoints(const QMatroid& m);

std::vector<FlatId> bases(const QMatroid& m);
std::vector<FlatId> clopen_flats(const QMatroid& m);

// Dual realized on the same lattice through orthogonal complements:
// rank*(x) = height(x) - rank(M) + rank(x').
QMatroid dual(const QMatroid& m);

// Minor on [z, w], carried to a fresh L_{q, height(w)-height(z)} with ranks
// shifted by rank(z).
QMatroid minor(const QMatroid& m, FlatId z, FlatId w);

// Rank of the join of a set of atoms. Throws kNotAnAtom.
int classical_rank(const QMatroid& m, std::span<const FlatId> atoms);

}  // namespace qtutte
