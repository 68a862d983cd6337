#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qtutte {

// Field elements are small integers 0..q-1. For q = p^n with n > 1 the
// integer sum_i c_i p^i encodes the residue class of c_0 + c_1 x + ... modulo
// the fixed reduction polynomial; this encoding also fixes the integer order
// used when flats are sorted.
using Elem = std::uint8_t;

inline constexpr int kDefaultMaxFieldOrder = 16;

class FiniteField {
 public:
  // Builds GF(q). Throws Error(kNotAPrimePower) for q < 2 or composite
  // non-prime-powers and Error(kUnsupportedOrder) above `max_order`.
  // Reduction polynomials: GF(4) x^2+x+1, GF(8) x^3+x+1, GF(9) x^2+1,
  // GF(16) x^4+x+1.
  static FiniteField make(int q, int max_order = kDefaultMaxFieldOrder);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return n_; }

  // Monic reduction polynomial, lowest degree first (length n+1). Empty for
  // prime fields.
  std::span<const int> reduction() const noexcept { return reduction_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  // Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const noexcept { return inv_[a]; }

  // A generator of the multiplicative group.
  Elem primitive() const noexcept { return primitive_; }

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.q_ == b.q_;
  }

 private:
  FiniteField() = default;

  int q_ = 0;
  int p_ = 0;
  int n_ = 0;
  std::vector<int> reduction_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  Elem primitive_ = 1;
};

// Factors q as p^n. Returns false when q is not a prime power (q < 2 included).
bool prime_power_decomposition(int q, int& p, int& n) noexcept;

}  // namespace qtutte
