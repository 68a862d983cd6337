#pragma once

#include <cstdint>
#include <vector>

#include "qtutte/qpoly.hpp"

namespace qtutte {

// n_q = 1 + q + ... + q^{n-1}; 0_q = 0.
QPoly q_int(int n);

// n!_q = 1_q 2_q ... n_q.
QPoly q_factorial(int n);

// Gaussian binomial [n choose k]_q by the q-Pascal recurrence
// [n,k] = [n-1,k-1] + q^k [n-1,k]. Zero for k < 0 or k > n. Memoized,
// thread-safe.
QPoly q_binomial(int n, int k);

// Binomial coefficient with the upper index extended to all integers by the
// Pascal recurrence: for n < 0, C(n, k) = (-1)^k C(-n + k - 1, k).
std::int64_t ext_binomial(std::int64_t n, std::int64_t k);

// Memoized table of ext_binomial over a rectangle of upper indices; exists so
// the Pascal recurrence can be checked as a table invariant.
class ExtendedPascal {
 public:
  ExtendedPascal(int n_min, int n_max, int k_max);

  std::int64_t operator()(int n, int k) const;
  int n_min() const noexcept { return n_min_; }
  int n_max() const noexcept { return n_max_; }
  int k_max() const noexcept { return k_max_; }

 private:
  int n_min_;
  int n_max_;
  int k_max_;
  std::vector<std::int64_t> table_;
};

// Outcome of a symbolic identity check: `residual` is lhs - rhs (zero when
// the identity holds).
struct IdentityCheck {
  bool pass = false;
  QPoly value;
  QPoly expected;
  QPoly residual;
};

// sum_{i=0}^{n} (-1)^i q^{C(i,2)} [n,i]_q against delta_{n,0}.
IdentityCheck check_theorem4(int n);

// How the exponent C(i - s, 2) is read when i - s < 0.
enum class ExponentMode {
  // C(m, 2) with the Pascal-extended binomial: m(m-1)/2 for every integer m.
  kExtendedPascal,
  // p_m = C(m + 1, 2) for m < 0 and C(m, 2) otherwise.
  kShiftedNegative,
};

// Exponent used by check_conjecture2 for offset m = i - s.
std::int64_t alternating_exponent(std::int64_t m, ExponentMode mode);

// sum_{i=0}^{n} (-1)^i q^{e(i-s)} [n,i]_q against delta_{n,0}, where e is
// alternating_exponent. Requires 0 <= s < n, or n = s = 0; otherwise throws
// kShiftOutOfRange. A failing identity is reported, not thrown.
IdentityCheck check_conjecture2(int n, int s,
                                ExponentMode mode = ExponentMode::kExtendedPascal);

// [h,r]_q against sum_i [r,i]_q [h-r,i]_q q^{(r-i)(h-r-i)}. 0 <= r <= h.
IdentityCheck check_vandermonde(int h, int r);

}  // namespace qtutte
