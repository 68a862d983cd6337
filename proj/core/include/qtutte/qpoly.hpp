#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace qtutte {

// Polynomial in q with integer coefficients; coeffs()[i] multiplies q^i.
// Trailing zeros are always stripped, so the zero polynomial has no
// coefficients. Arithmetic is exact: overflow of int64 raises kOverflow.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)
  QPoly(std::initializer_list<std::int64_t> coeffs);
  explicit QPoly(std::vector<std::int64_t> coeffs);

  // c * q^e.
  static QPoly monomial(int e, std::int64_t c = 1);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  // Constant polynomials only.
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  std::int64_t evaluate(std::int64_t q) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly operator-() const;

  // Multiplication by q^e, e >= 0.
  QPoly shifted(int e) const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  // "[-1, 1, 0, -1, 0, 1]"; the zero polynomial prints as "[0]".
  std::string to_list_string() const;
  // "-1+q-q^3+q^5"; zero prints as "0".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

// Exact division: returns true and sets quotient when `divisor` divides
// `dividend` in Z[q]. divisor must be nonzero.
bool divide_exact(const QPoly& dividend, const QPoly& divisor, QPoly& quotient);

}  // namespace qtutte
