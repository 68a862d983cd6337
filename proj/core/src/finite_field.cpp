#include "qtutte/finite_field.hpp"

#include <string>

#include "qtutte/error.hpp"

namespace qtutte {

namespace {

std::vector<int> reduction_polynomial(int q) {
  switch (q) {
    case 4: return {1, 1, 1};
    case 8: return {1, 1, 0, 1};
    case 9: return {1, 0, 1};
    case 16: return {1, 1, 0, 0, 1};
    default: return {};
  }
}

std::vector<int> digits(int value, int p, int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int encode(const std::vector<int>& coeffs, int p) {
  int value = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    value = value * p + coeffs[i];
  }
  return value;
}

// Multiplies two residues modulo the monic reduction polynomial.
int poly_mul_mod(int a, int b, int p, int n, const std::vector<int>& red) {
  std::vector<int> x = digits(a, p, n);
  std::vector<int> y = digits(b, p, n);
  std::vector<int> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (int d = 2 * n - 2; d >= n; --d) {
    int c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= n; ++i) {
      prod[d - n + i] = ((prod[d - n + i] - c * red[i]) % p + p) % p;
    }
  }
  prod.resize(n);
  return encode(prod, p);
}

}  // namespace

bool prime_power_decomposition(int q, int& p, int& n) noexcept {
  if (q < 2) return false;
  int f = 2;
  while (f * f <= q && q % f != 0) ++f;
  if (q % f != 0) f = q;
  int rest = q;
  int e = 0;
  while (rest % f == 0) {
    rest /= f;
    ++e;
  }
  if (rest != 1) return false;
  p = f;
  n = e;
  return true;
}

FiniteField FiniteField::make(int q, int max_order) {
  int p = 0;
  int n = 0;
  if (!prime_power_decomposition(q, p, n)) {
    throw Error(ErrorCode::kNotAPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  if (q > max_order) {
    throw Error(ErrorCode::kUnsupportedOrder,
                "field order " + std::to_string(q) + " exceeds limit " +
                    std::to_string(max_order));
  }
  std::vector<int> red = reduction_polynomial(q);
  if (n > 1 && red.empty()) {
    throw Error(ErrorCode::kUnsupportedOrder,
                "no reduction polynomial configured for GF(" +
                    std::to_string(q) + ")");
  }

  FiniteField f;
  f.q_ = q;
  f.p_ = p;
  f.n_ = n;
  f.reduction_ = red;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);

  for (int a = 0; a < q; ++a) {
    std::vector<int> da = digits(a, p, n);
    for (int b = 0; b < q; ++b) {
      std::vector<int> db = digits(b, p, n);
      std::vector<int> sum(n);
      for (int i = 0; i < n; ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_[a * q + b] = static_cast<Elem>(encode(sum, p));
      f.mul_[a * q + b] = static_cast<Elem>(
          n == 1 ? (a * b) % p : poly_mul_mod(a, b, p, n, red));
    }
    std::vector<int> neg(n);
    for (int i = 0; i < n; ++i) neg[i] = (p - da[i]) % p;
    f.neg_[a] = static_cast<Elem>(encode(neg, p));
  }

  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<Elem>(b);
    }
  }

  if (n > 1) {
    // An irreducible modulus makes every nonzero residue invertible and the
    // tables associative and distributive; verify rather than assume.
    for (int a = 1; a < q; ++a) {
      if (f.inv_[a] == 0) {
        throw Error(ErrorCode::kUnsupportedOrder,
                    "reduction polynomial for GF(" + std::to_string(q) +
                        ") is reducible");
      }
    }
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        for (int c = 0; c < q; ++c) {
          Elem ab_c = f.mul(f.mul(a, b), c);
          Elem a_bc = f.mul(a, f.mul(b, c));
          Elem dist_l = f.mul(a, f.add(b, c));
          Elem dist_r = f.add(f.mul(a, b), f.mul(a, c));
          if (ab_c != a_bc || dist_l != dist_r) {
            throw Error(ErrorCode::kUnsupportedOrder,
                        "field tables for GF(" + std::to_string(q) +
                            ") fail the ring axioms");
          }
        }
      }
    }
  }

  for (int g = 2; g < q && f.primitive_ == 1; ++g) {
    int order = 1;
    Elem x = static_cast<Elem>(g);
    while (x != 1) {
      x = f.mul(x, static_cast<Elem>(g));
      ++order;
    }
    if (order == q - 1) f.primitive_ = static_cast<Elem>(g);
  }
  return f;
}

}  // namespace qtutte
