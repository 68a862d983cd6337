#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace oracle {

VectorLattice::VectorLattice(int p, int k) : p_(p), k_(k) {
  std::uint32_t total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  std::set<std::vector<std::uint32_t>> seen{{0}};
  std::vector<std::vector<std::uint32_t>> frontier{{0}};
  std::vector<std::vector<std::uint32_t>> all{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& s : frontier) {
      for (std::uint32_t v = 1; v < total; ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        auto gens = s;
        gens.push_back(v);
        auto t = span(gens);
        if (seen.insert(t).second) {
          next.push_back(t);
          all.push_back(t);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets_ = std::move(all);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    int h = 0;
    for (std::size_t n = sets_[i].size(); n > 1; n /= p) ++h;
    heights_.push_back(h);
    index_[sets_[i]] = i;
  }
}

std::uint32_t VectorLattice::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t VectorLattice::scale(std::uint32_t a, int c) const {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_) * c % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::vector<std::uint32_t> VectorLattice::span(
    std::vector<std::uint32_t> gens) const {
  std::set<std::uint32_t> s{0};
  for (std::uint32_t g : gens) {
    std::set<std::uint32_t> grown;
    for (std::uint32_t v : s) {
      for (int c = 0; c < p_; ++c) grown.insert(add(v, scale(g, c)));
    }
    s = std::move(grown);
  }
  return {s.begin(), s.end()};
}

std::size_t VectorLattice::index_of(const std::vector<std::uint32_t>& set) const {
  auto it = index_.find(set);
  if (it == index_.end()) throw std::logic_error("not a subspace");
  return it->second;
}

std::size_t VectorLattice::join(std::size_t a, std::size_t b) const {
  auto gens = sets_[a];
  gens.insert(gens.end(), sets_[b].begin(), sets_[b].end());
  return index_of(span(gens));
}

std::size_t VectorLattice::meet(std::size_t a, std::size_t b) const {
  std::vector<std::uint32_t> out;
  std::set_intersection(sets_[a].begin(), sets_[a].end(), sets_[b].begin(),
                        sets_[b].end(), std::back_inserter(out));
  return index_of(out);
}

bool VectorLattice::leq(std::size_t a, std::size_t b) const {
  return std::includes(sets_[b].begin(), sets_[b].end(), sets_[a].begin(),
                       sets_[a].end());
}

std::size_t VectorLattice::from_flat(const qtutte::SubspaceLattice& lat,
                                     qtutte::FlatId id) const {
  const qtutte::GfMatrix& rows = lat.flat(id).rows();
  std::vector<std::uint32_t> gens;
  for (int r = 0; r < rows.rows(); ++r) {
    std::uint32_t v = 0;
    for (int c = 0; c < rows.cols(); ++c) v = v * p_ + rows.at(r, c);
    gens.push_back(v);
  }
  return index_of(span(gens));
}

qtutte::QPoly gaussian_by_division(int n, int k) {
  if (k < 0 || k > n) return {};
  qtutte::QPoly num(1);
  qtutte::QPoly den(1);
  for (int i = 0; i < k; ++i) {
    num *= qtutte::QPoly::monomial(n - i) - qtutte::QPoly(1);
    den *= qtutte::QPoly::monomial(i + 1) - qtutte::QPoly(1);
  }
  qtutte::QPoly quotient;
  if (!qtutte::divide_exact(num, den, quotient)) {
    throw std::logic_error("q-binomial product formula did not divide");
  }
  return quotient;
}

std::int64_t gaussian_value(std::int64_t q, int n, int k) {
  if (k < 0 || k > n) return 0;
  if (q == 1) {
    std::int64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
  }
  auto pw = [q](int e) {
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) v *= q;
    return v;
  };
  // Running ratio stays integral after each full factor pair in this order.
  __extension__ __int128 num = 1;
  __extension__ __int128 den = 1;
  for (int i = 0; i < k; ++i) {
    num *= pw(n - i) - 1;
    den *= pw(i + 1) - 1;
  }
  return static_cast<std::int64_t>(num / den);
}

std::vector<std::vector<std::int64_t>> classical_uniform_tutte(int r, int n) {
  // T(x, y) = sum_A (x-1)^{r - r(A)} (y-1)^{|A| - r(A)}, r(A) = min(|A|, r).
  std::vector<std::vector<std::int64_t>> t(r + 1,
                                           std::vector<std::int64_t>(n - r + 1));
  auto binom = [](int a, int b) {
    std::int64_t c = 1;
    for (int i = 1; i <= b; ++i) c = c * (a - b + i) / i;
    return c;
  };
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    const int rank = std::min(size, r);
    const int a = r - rank;
    const int b = size - rank;
    // Expand (x-1)^a (y-1)^b.
    for (int i = 0; i <= a; ++i) {
      for (int j = 0; j <= b; ++j) {
        const std::int64_t sign = ((a - i) + (b - j)) % 2 == 0 ? 1 : -1;
        t[i][j] += sign * binom(a, i) * binom(b, j);
      }
    }
  }
  return t;
}

std::uint64_t count_rank_functions(int p, int k) {
  VectorLattice lat(p, k);
  const std::size_t n = lat.size();
  // Constraints become checkable once the largest index they mention is set.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> order_at(n);
  std::vector<std::vector<std::array<std::size_t, 4>>> sub_at(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && lat.leq(a, b)) order_at[std::max(a, b)].push_back({a, b});
      if (a < b) {
        const std::size_t j = lat.join(a, b);
        const std::size_t m = lat.meet(a, b);
        const std::size_t last = std::max({a, b, j, m});
        sub_at[last].push_back({a, b, j, m});
      }
    }
  }
  std::vector<int> rank(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (x == n) {
      ++count;
      return;
    }
    for (int r = 0; r <= lat.height(x); ++r) {
      rank[x] = r;
      bool ok = true;
      for (const auto& [a, b] : order_at[x]) {
        if (rank[a] > rank[b]) {
          ok = false;
          break;
        }
      }
      for (std::size_t i = 0; ok && i < sub_at[x].size(); ++i) {
        const auto& s = sub_at[x][i];
        if (rank[s[2]] + rank[s[3]] > rank[s[0]] + rank[s[1]]) ok = false;
      }
      if (ok) go(x + 1);
    }
  };
  go(0);
  return count;
}

std::vector<std::vector<int>> invertible_matrices(int p, int k) {
  std::vector<std::vector<int>> out;
  const int cells = k * k;
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> m(cells);
    std::uint64_t c = code;
    for (int i = 0; i < cells; ++i) {
      m[i] = static_cast<int>(c % p);
      c /= p;
    }
    // Determinant by Gaussian elimination mod p.
    std::vector<int> a = m;
    bool singular = false;
    for (int col = 0; col < k && !singular; ++col) {
      int piv = -1;
      for (int r = col; r < k; ++r) {
        if (a[r * k + col] % p != 0) {
          piv = r;
          break;
        }
      }
      if (piv < 0) {
        singular = true;
        break;
      }
      for (int j = 0; j < k; ++j) std::swap(a[col * k + j], a[piv * k + j]);
      int inv = 1;
      while (a[col * k + col] * inv % p != 1) ++inv;
      for (int r = col + 1; r < k; ++r) {
        const int f = a[r * k + col] * inv % p;
        for (int j = 0; j < k; ++j) {
          a[r * k + j] = ((a[r * k + j] - f * a[col * k + j]) % p + p) % p;
        }
      }
    }
    if (!singular) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace oracle
