#pragma once

#include <optional>
#include <vector>

#include "qtutte/gf_matrix.hpp"
#include "qtutte/qmatroid.hpp"

namespace qtutte {

// Permutation of flat ids induced by x -> rowspace(rows(x) * g) for an
// invertible k x k matrix g.
std::vector<FlatId> flat_permutation(const SubspaceLattice& lattice,
                                     const GfMatrix& g);

// Flat permutations induced by a generating set of GL(k, q): every
// transvection I + t E_ij (i != j, t != 0) and diag(w, 1, ..., 1) for a
// primitive element w.
std::vector<std::vector<FlatId>> linear_group_generators(
    const SubspaceLattice& lattice);

// Rank multiset per height; equal for isomorphic matroids.
std::vector<std::vector<int>> rank_profile(const QMatroid& m);

// Searches for an invertible g with rank_b(x g) = rank_a(x) for every flat x,
// choosing the images of e_1, ..., e_k one at a time and checking each flat
// as soon as its image is determined. Throws kLatticeMismatch when (q, k)
// differ.
std::optional<GfMatrix> find_isomorphism(const QMatroid& a, const QMatroid& b);

bool are_isomorphic(const QMatroid& a, const QMatroid& b);

// Groups rank vectors (all on `lattice`, closed under the group action) into
// orbits of GL(k, q). Returns, for each orbit, the index of its first member.
std::vector<std::size_t> orbit_representatives(
    const SubspaceLattice& lattice,
    const std::vector<std::vector<int>>& rank_vectors);

}  // namespace qtutte
