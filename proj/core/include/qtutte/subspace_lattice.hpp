#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qtutte/finite_field.hpp"
#include "qtutte/gf_matrix.hpp"

namespace qtutte {

// Position of a flat in the canonical order of its lattice.
using FlatId = std::uint32_t;

// A subspace of GF(q)^k, held as its canonical reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;

  // Row space of `m` (the reduction drops zero rows).
  static Subspace span(const FiniteField& field, const GfMatrix& m);

  const GfMatrix& rows() const noexcept { return rows_; }
  int height() const noexcept { return rows_.rows(); }
  int ambient_dimension() const noexcept { return rows_.cols(); }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(GfMatrix rref) : rows_(std::move(rref)) {}
  friend class SubspaceLattice;

  GfMatrix rows_;
};

// Canonical RREF of a matrix, as a Subspace.
Subspace rref(const FiniteField& field, const GfMatrix& m);

struct Cover {
  FlatId lower;
  FlatId upper;
};

// A height-2 interval [bottom, top] together with its q+1 middle flats.
struct Diamond {
  FlatId bottom;
  FlatId top;
  std::vector<FlatId> middles;
};

enum class ModularCase {
  kJoinRises,  // y v z covers x v z and y ^ z = x ^ z
  kMeetRises,  // y v z = x v z and y ^ z covers x ^ z
};

struct LatticeOptions {
  std::uint64_t max_flats = 1'000'000;
  int max_field_order = kDefaultMaxFieldOrder;
};

// Number of d-dimensional subspaces of GF(q)^n, saturating at UINT64_MAX.
std::uint64_t subspace_count(std::uint64_t q, int n, int d) noexcept;

// The lattice L_{q,k} of all subspaces of GF(q)^k. Flats are ordered by
// height, then lexicographically by their RREF entries read row-major, so ids
// are reproducible for a given (q, k). Immutable after build(); every query is
// a const read and the object may be shared across threads.
class SubspaceLattice {
 public:
  static SubspaceLattice build(const FiniteField& field, int k,
                               const LatticeOptions& options = {});
  static SubspaceLattice build(int q, int k, const LatticeOptions& options = {});

  const FiniteField& field() const noexcept { return field_; }
  int q() const noexcept { return field_.order(); }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return flats_.size(); }

  const Subspace& flat(FlatId id) const;
  int height(FlatId id) const { return flat(id).height(); }
  FlatId bottom() const noexcept { return 0; }
  FlatId top() const noexcept { return static_cast<FlatId>(flats_.size() - 1); }

  // Ids of the flats of height d, in canonical order.
  std::span<const FlatId> by_height(int d) const;
  std::span<const FlatId> points() const { return by_height(1); }

  std::span<const FlatId> upper_covers(FlatId id) const;
  std::span<const FlatId> lower_covers(FlatId id) const;

  // Every covering pair, grouped by lower flat and then by upper id.
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  // Index into covers(); throws kNotACover.
  std::size_t cover_index(FlatId lower, FlatId upper) const;

  // Every height-2 interval, grouped by top flat.
  const std::vector<Diamond>& diamonds() const noexcept { return diamonds_; }
  // Indices into diamonds() of the diamonds whose top is `w`.
  std::span<const std::uint32_t> diamonds_with_top(FlatId w) const;

  // Id of the flat equal to `s`; throws kDimensionMismatch if `s` lives in a
  // different ambient space.
  FlatId id_of(const Subspace& s) const;
  // Id of the row space of `m`.
  FlatId span_id(const GfMatrix& m) const;

  FlatId join(FlatId a, FlatId b) const;
  // Computed through orthogonal complements: a ^ b = (a' v b')'.
  FlatId meet(FlatId a, FlatId b) const;
  bool leq(FlatId a, FlatId b) const;
  // Orthogonal complement under the standard bilinear form; an
  // order-reversing involution of the lattice.
  FlatId perp(FlatId id) const;

  // All x with z <= x <= w, sorted by id. Throws kNotComparable.
  std::vector<FlatId> interval(FlatId z, FlatId w) const;

  // All y in [z, w] with x v y = w and x ^ y = z. Requires z <= x <= w.
  std::vector<FlatId> complements(FlatId x, FlatId z, FlatId w) const;
  std::vector<FlatId> complements(FlatId x) const {
    return complements(x, bottom(), top());
  }

  // Which half of the modular dichotomy holds for element z and covering
  // pair [x, y]. Throws kNotACover when y does not cover x.
  ModularCase modular_case(FlatId z, FlatId x, FlatId y) const;

  // Bijection from the flats of `interval_lattice` (an L_{q,m} with
  // m = height(w) - height(z)) onto [z, w]: entry i is the id in this lattice
  // that corresponds to flat i of `interval_lattice`. Order-preserving.
  std::vector<FlatId> interval_embedding(
      FlatId z, FlatId w, const SubspaceLattice& interval_lattice) const;

 private:
  SubspaceLattice(FiniteField field, int k) : field_(std::move(field)), k_(k) {}

  void check_id(FlatId id) const;

  FiniteField field_;
  int k_;
  std::vector<Subspace> flats_;
  std::vector<std::vector<FlatId>> ids_by_height_;
  std::vector<FlatId> perp_;

  // CSR adjacency.
  std::vector<std::uint32_t> upper_offset_;
  std::vector<FlatId> upper_;
  std::vector<std::uint32_t> lower_offset_;
  std::vector<FlatId> lower_;
  std::vector<Cover> covers_;

  std::vector<Diamond> diamonds_;
  std::vector<std::uint32_t> diamond_offset_;
  std::vector<std::uint32_t> diamond_index_;
};

// Process-wide cache of built lattices keyed by (q, k). Thread-safe.
std::shared_ptr<const SubspaceLattice> shared_lattice(
    int q, int k, const LatticeOptions& options = {});

}  // namespace qtutte
