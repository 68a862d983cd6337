#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtutte/qpoly.hpp"

namespace qtutte {

enum class PolyMode { kNumeric, kSymbolic };

// Coefficient grid of a polynomial in x and y. Entry (i, j) multiplies
// x^i y^j. In numeric mode every entry is a constant and q() records the
// field order the numbers belong to; in symbolic mode entries are
// polynomials in q and q() is 0.
class BiPoly {
 public:
  BiPoly() : BiPoly(PolyMode::kNumeric, 0, 0, 0) {}

  static BiPoly numeric(int xdeg, int ydeg, int q) {
    return BiPoly(PolyMode::kNumeric, xdeg, ydeg, q);
  }
  static BiPoly symbolic(int xdeg, int ydeg) {
    return BiPoly(PolyMode::kSymbolic, xdeg, ydeg, 0);
  }

  PolyMode mode() const noexcept { return mode_; }
  bool is_symbolic() const noexcept { return mode_ == PolyMode::kSymbolic; }
  int q() const noexcept { return q_; }
  // Grid extents; the grid holds (xdeg + 1) * (ydeg + 1) entries.
  int xdeg() const noexcept { return xdeg_; }
  int ydeg() const noexcept { return ydeg_; }

  // Out-of-range reads return zero.
  const QPoly& at(int i, int j) const;
  QPoly& at(int i, int j);
  // Numeric entry; throws kDimensionMismatch if the entry is not constant.
  std::int64_t value(int i, int j) const;

  // Substitutes q; the result is numeric. Numeric inputs must already be at
  // the same q.
  BiPoly evaluate_at(std::int64_t q) const;

  // x <-> y.
  BiPoly swapped() const;

  // Sum of all entries.
  QPoly total() const;

  // Same mode and equal entries; zero padding is ignored, q is not compared.
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  // "x^2+x*y+7*x+y+6"; symbolic coefficients are parenthesized
  // ("(1+q)*x"). Terms by descending total degree, then x-degree.
  std::string to_string() const;

  // Rows of descending y-degree, entries separated by a space, each row cut
  // after its last nonzero entry (at least one entry per row).
  std::vector<std::string> display_rows() const;

 private:
  BiPoly(PolyMode mode, int xdeg, int ydeg, int q);

  PolyMode mode_;
  int xdeg_;
  int ydeg_;
  int q_;
  std::vector<QPoly> cells_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

// Builds a numeric polynomial from {x-degree, y-degree, coefficient} terms.
struct Term {
  int i;
  int j;
  std::int64_t c;
};
BiPoly numeric_poly(int q, const std::vector<Term>& terms);

}  // namespace qtutte
