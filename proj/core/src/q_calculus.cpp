#include "qtutte/q_calculus.hpp"

#include <map>
#include <mutex>
#include <string>

#include "qtutte/error.hpp"

namespace qtutte {

QPoly q_int(int n) {
  if (n <= 0) return {};
  return QPoly(std::vector<std::int64_t>(n, 1));
}

QPoly q_factorial(int n) {
  QPoly out = 1;
  for (int i = 1; i <= n; ++i) out *= q_int(i);
  return out;
}

QPoly q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  if (k == 0 || k == n) return 1;

  static std::mutex mutex;
  static std::vector<std::vector<QPoly>> rows{{QPoly(1)}};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const int m = static_cast<int>(rows.size());
    std::vector<QPoly> row(m + 1);
    row[0] = 1;
    row[m] = 1;
    for (int j = 1; j < m; ++j) row[j] = prev[j - 1] + prev[j].shifted(j);
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

__extension__ typedef __int128 I128;

std::int64_t ext_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n < 0) {
    std::int64_t v = ext_binomial(-n + k - 1, k);
    return (k % 2 == 0) ? v : -v;
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    I128 next = static_cast<I128>(acc) * (n - k + i) / i;
    if (next > INT64_MAX) {
      throw Error(ErrorCode::kOverflow, "binomial coefficient overflow");
    }
    acc = static_cast<std::int64_t>(next);
  }
  return acc;
}

ExtendedPascal::ExtendedPascal(int n_min, int n_max, int k_max)
    : n_min_(n_min), n_max_(n_max), k_max_(k_max) {
  const int rows = n_max - n_min + 1;
  table_.resize(static_cast<std::size_t>(rows) * (k_max + 1));
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 0; k <= k_max; ++k) {
      table_[(n - n_min) * (k_max + 1) + k] = ext_binomial(n, k);
    }
  }
}

std::int64_t ExtendedPascal::operator()(int n, int k) const {
  if (n < n_min_ || n > n_max_ || k < 0 || k > k_max_) return ext_binomial(n, k);
  return table_[(n - n_min_) * (k_max_ + 1) + k];
}

namespace {

IdentityCheck finish(QPoly value, QPoly expected) {
  IdentityCheck out;
  out.residual = value - expected;
  out.pass = out.residual.is_zero();
  out.value = std::move(value);
  out.expected = std::move(expected);
  return out;
}

}  // namespace

IdentityCheck check_theorem4(int n) {
  QPoly sum;
  for (int i = 0; i <= n; ++i) {
    QPoly term = q_binomial(n, i).shifted(static_cast<int>(ext_binomial(i, 2)));
    if (i % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return finish(std::move(sum), n == 0 ? QPoly(1) : QPoly());
}

std::int64_t alternating_exponent(std::int64_t m, ExponentMode mode) {
  if (m < 0 && mode == ExponentMode::kShiftedNegative) return ext_binomial(m + 1, 2);
  return ext_binomial(m, 2);
}

IdentityCheck check_conjecture2(int n, int s, ExponentMode mode) {
  const bool base_case = n == 0 && s == 0;
  if (!base_case && (s < 0 || s >= n)) {
    throw Error(ErrorCode::kShiftOutOfRange,
                "shift " + std::to_string(s) + " outside 0 <= s < " +
                    std::to_string(n));
  }
  QPoly sum;
  for (int i = 0; i <= n; ++i) {
    std::int64_t e = alternating_exponent(i - s, mode);
    QPoly term = q_binomial(n, i).shifted(static_cast<int>(e));
    if (i % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return finish(std::move(sum), n == 0 ? QPoly(1) : QPoly());
}

IdentityCheck check_vandermonde(int h, int r) {
  if (r < 0 || r > h) {
    throw Error(ErrorCode::kRankOutOfRange, "vandermonde check needs 0 <= r <= h");
  }
  QPoly sum;
  for (int i = 0; i <= r && i <= h - r; ++i) {
    sum += (q_binomial(r, i) * q_binomial(h - r, i)).shifted((r - i) * (h - r - i));
  }
  return finish(std::move(sum), q_binomial(h, r));
}

}  // namespace qtutte
