#include "qtutte/isomorphism.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "qtutte/error.hpp"

namespace qtutte {

std::vector<FlatId> flat_permutation(const SubspaceLattice& lattice,
                                     const GfMatrix& g) {
  std::vector<FlatId> perm(lattice.size());
  const FiniteField& f = lattice.field();
  for (FlatId x = 0; x < lattice.size(); ++x) {
    const GfMatrix& rows = lattice.flat(x).rows();
    perm[x] = rows.rows() == 0 ? x : lattice.span_id(multiply(f, rows, g));
  }
  return perm;
}

std::vector<std::vector<FlatId>> linear_group_generators(
    const SubspaceLattice& lattice) {
  const int k = lattice.k();
  const FiniteField& f = lattice.field();
  std::vector<std::vector<FlatId>> gens;
  auto identity = [k] {
    GfMatrix g(k, k);
    for (int i = 0; i < k; ++i) g.at(i, i) = 1;
    return g;
  };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (int t = 1; t < f.order(); ++t) {
        GfMatrix g = identity();
        g.at(i, j) = static_cast<Elem>(t);
        gens.push_back(flat_permutation(lattice, g));
      }
    }
  }
  if (k > 0 && f.order() > 2) {
    GfMatrix g = identity();
    g.at(0, 0) = f.primitive();
    gens.push_back(flat_permutation(lattice, g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::vector<std::vector<int>> rank_profile(const QMatroid& m) {
  const SubspaceLattice& lat = m.lattice();
  std::vector<std::vector<int>> profile(lat.k() + 1);
  for (int d = 0; d <= lat.k(); ++d) {
    profile[d].assign(d + 1, 0);
    for (FlatId x : lat.by_height(d)) ++profile[d][m.rank(x)];
  }
  return profile;
}

namespace {

// Column index one past the last nonzero column of a flat's basis.
int support_end(const GfMatrix& rows) {
  int end = 0;
  for (int r = 0; r < rows.rows(); ++r) {
    for (int c = rows.cols() - 1; c >= 0; --c) {
      if (rows.at(r, c) != 0) {
        end = std::max(end, c + 1);
        break;
      }
    }
  }
  return end;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const QMatroid& a, const QMatroid& b)
      : a_(a), b_(b), lat_(a.lattice()), k_(lat_.k()), g_(k_, k_) {
    by_support_.resize(k_ + 1);
    for (FlatId x = 1; x < lat_.size(); ++x) {
      by_support_[support_end(lat_.flat(x).rows())].push_back(x);
    }
    const int q = lat_.q();
    std::size_t total = 1;
    for (int i = 0; i < k_; ++i) total *= static_cast<std::size_t>(q);
    vectors_.reserve(total);
    for (std::size_t code = 1; code < total; ++code) {
      std::vector<Elem> v(k_);
      std::size_t c = code;
      for (int i = k_ - 1; i >= 0; --i) {
        v[i] = static_cast<Elem>(c % q);
        c /= q;
      }
      vectors_.push_back(std::move(v));
    }
  }

  std::optional<GfMatrix> run() {
    if (extend(0)) return g_;
    return std::nullopt;
  }

 private:
  bool extend(int depth) {
    if (depth == k_) return true;
    GfMatrix chosen(depth, k_);
    for (int r = 0; r < depth; ++r) {
      for (int c = 0; c < k_; ++c) chosen.at(r, c) = g_.at(r, c);
    }
    GfMatrix span = reduce_rows(lat_.field(), chosen);
    for (const auto& v : vectors_) {
      if (in_row_space(lat_.field(), span, v)) continue;
      for (int c = 0; c < k_; ++c) g_.at(depth, c) = v[c];
      if (consistent(depth + 1) && extend(depth + 1)) return true;
    }
    for (int c = 0; c < k_; ++c) g_.at(depth, c) = 0;
    return false;
  }

  // Flats spanned inside e_1..e_depth now have a determined image.
  bool consistent(int depth) const {
    for (FlatId x : by_support_[depth]) {
      FlatId image = lat_.span_id(multiply(lat_.field(), lat_.flat(x).rows(), g_));
      if (a_.rank(x) != b_.rank(image)) return false;
    }
    return true;
  }

  const QMatroid& a_;
  const QMatroid& b_;
  const SubspaceLattice& lat_;
  int k_;
  GfMatrix g_;
  std::vector<std::vector<FlatId>> by_support_;
  std::vector<std::vector<Elem>> vectors_;
};

std::string key_of(const std::vector<int>& ranks) {
  return std::string(ranks.begin(), ranks.end());
}

}  // namespace

std::optional<GfMatrix> find_isomorphism(const QMatroid& a, const QMatroid& b) {
  if (a.lattice().q() != b.lattice().q() || a.lattice().k() != b.lattice().k()) {
    throw Error(ErrorCode::kLatticeMismatch,
                "isomorphism test needs matroids on the same L(q,k)");
  }
  if (rank_profile(a) != rank_profile(b)) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

bool are_isomorphic(const QMatroid& a, const QMatroid& b) {
  return find_isomorphism(a, b).has_value();
}

std::vector<std::size_t> orbit_representatives(
    const SubspaceLattice& lattice,
    const std::vector<std::vector<int>>& rank_vectors) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(rank_vectors.size() * 2);
  for (std::size_t i = 0; i < rank_vectors.size(); ++i) {
    index.emplace(key_of(rank_vectors[i]), i);
  }
  const auto gens = linear_group_generators(lattice);
  std::vector<bool> seen(rank_vectors.size(), false);
  std::vector<std::size_t> reps;
  std::vector<int> image(lattice.size());
  for (std::size_t i = 0; i < rank_vectors.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    seen[i] = true;
    std::vector<std::size_t> queue{i};
    while (!queue.empty()) {
      const auto& r = rank_vectors[queue.back()];
      queue.pop_back();
      for (const auto& perm : gens) {
        for (FlatId x = 0; x < lattice.size(); ++x) image[perm[x]] = r[x];
        auto it = index.find(key_of(image));
        if (it == index.end()) {
          throw Error(ErrorCode::kCharacterizationMismatch,
                      "rank vector set is not closed under GL(k,q)");
        }
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
  }
  return reps;
}

}  // namespace qtutte
