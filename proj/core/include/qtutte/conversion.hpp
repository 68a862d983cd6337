#pragma once

#include <string>
#include <vector>

#include "qtutte/bipoly.hpp"
#include "qtutte/qmatroid.hpp"
#include "qtutte/qpoly.hpp"

namespace qtutte {

// alpha(a,b;c,d) = [a,c]_q [b,d]_q q^{(a-c)(b-d)}: the coefficient of
// x^c y^d in the rank generating function of the prime-free matroid of rank
// a and nullity b. Zero unless c <= a and d <= b.
QPoly alpha(int a, int b, int c, int d);

// With s = a-c, t = b-d, m = |s - t|:
// beta = (-1)^{s+t} [a,c]_q [b,d]_q q^{C(m,2)} (1 + q^m - q^{max(s,t)}).
// Conjecturally the inverse kernel of alpha.
QPoly beta(int a, int b, int c, int d);

// alpha and beta for every a <= amax, b <= bmax and c <= a, d <= b.
// Filled once in the constructor; reads are const and thread-safe.
class ConversionKernel {
 public:
  ConversionKernel(int amax, int bmax);

  int amax() const noexcept { return amax_; }
  int bmax() const noexcept { return bmax_; }
  // Fall back to direct evaluation outside the cached rectangle.
  QPoly alpha(int a, int b, int c, int d) const;
  QPoly beta(int a, int b, int c, int d) const;

 private:
  std::size_t index(int a, int b, int c, int d) const;
  bool cached(int a, int b, int c, int d) const;

  int amax_;
  int bmax_;
  std::vector<QPoly> alpha_;
  std::vector<QPoly> beta_;
};

// Numeric sum over all flats of x^{rank(M) - rank(z)} y^{nullity(z)}.
BiPoly rgf(const QMatroid& m);

// Rank generating function of U_{rho,nu} with q left symbolic.
BiPoly rgf_uniform_symbolic(int rho, int nu);

// Entry (i, j) = alpha(rho, nu; i, j).
BiPoly rgf_prime_free_symbolic(int rho, int nu);

// rgf(c, d) = sum_{a >= c, b >= d} tutte(a, b) alpha(a, b; c, d).
BiPoly rgf_from_tutte(const BiPoly& tutte);

// Peels prime-free generating functions off the grid, highest total degree
// first (ties by ascending x-degree): tau(a, b) takes the residual at (a, b)
// and tau(a, b) * alpha(a, b; ., .) is subtracted.
BiPoly tutte_by_subtraction(const BiPoly& rgf);

// tau(c, d) = sum_{a >= c, b >= d} rgf(a, b) beta(a, b; c, d).
BiPoly tutte_by_beta(const BiPoly& rgf);

struct InverseFailure {
  // "alpha*beta" or "beta*alpha".
  std::string product;
  int a, b, e, f;
  QPoly value;
};

struct InverseReport {
  int amax = 0;
  int bmax = 0;
  int checked = 0;
  std::vector<InverseFailure> failures;
  bool pass() const { return failures.empty(); }
};

// For every (e, f) <= (a, b) <= (amax, bmax) checks
// sum_{(c,d)} alpha(a,b;c,d) beta(c,d;e,f) = delta and the mirrored product.
InverseReport inverse_check(int amax, int bmax);

// N_{i,j}(a, b) for 0 <= i <= a, 0 <= j <= b together with its sum checks.
struct NMatrix {
  int a = 0;
  int b = 0;
  std::vector<std::vector<QPoly>> entries;  // entries[i][j]
  QPoly total;
  std::vector<QPoly> sums_over_i;  // indexed by j
  std::vector<QPoly> sums_over_j;  // indexed by i
  bool total_ok = false;
  // Every sum over i vanishes; only claimed when a > b.
  bool sums_over_i_vanish = false;
  // Every sum over j vanishes; only claimed when a < b.
  bool sums_over_j_vanish = false;
  // Square case: each sum over j is a multiple of the one at i = a. False
  // when a != b.
  bool square_divisibility = false;
  // Checks that apply to (a, b) all hold.
  bool pass() const;
};

NMatrix n_matrix(int a, int b);

}  // namespace qtutte
