#include "qtutte/conversion.hpp"

#include <algorithm>
#include <cstdlib>

#include "qtutte/error.hpp"
#include "qtutte/q_calculus.hpp"

namespace qtutte {

QPoly alpha(int a, int b, int c, int d) {
  if (c < 0 || d < 0 || c > a || d > b) return QPoly();
  return (q_binomial(a, c) * q_binomial(b, d)).shifted((a - c) * (b - d));
}

QPoly beta(int a, int b, int c, int d) {
  if (c < 0 || d < 0 || c > a || d > b) return QPoly();
  const int s = a - c;
  const int t = b - d;
  const int m = std::abs(s - t);
  QPoly factor = QPoly(1) + QPoly::monomial(m) - QPoly::monomial(std::max(s, t));
  QPoly v = (q_binomial(a, c) * q_binomial(b, d) * factor).shifted(m * (m - 1) / 2);
  return (s + t) % 2 == 0 ? v : -v;
}

ConversionKernel::ConversionKernel(int amax, int bmax)
    : amax_(amax), bmax_(bmax) {
  const std::size_t n = static_cast<std::size_t>(amax + 1) * (bmax + 1);
  alpha_.resize(n * n);
  beta_.resize(n * n);
  for (int a = 0; a <= amax; ++a) {
    for (int b = 0; b <= bmax; ++b) {
      for (int c = 0; c <= a; ++c) {
        for (int d = 0; d <= b; ++d) {
          alpha_[index(a, b, c, d)] = qtutte::alpha(a, b, c, d);
          beta_[index(a, b, c, d)] = qtutte::beta(a, b, c, d);
        }
      }
    }
  }
}

std::size_t ConversionKernel::index(int a, int b, int c, int d) const {
  const std::size_t w = static_cast<std::size_t>(bmax_ + 1);
  const std::size_t n = static_cast<std::size_t>(amax_ + 1) * w;
  return (a * w + b) * n + (c * w + d);
}

bool ConversionKernel::cached(int a, int b, int c, int d) const {
  return a >= 0 && b >= 0 && a <= amax_ && b <= bmax_ && c >= 0 && d >= 0 &&
         c <= a && d <= b;
}

QPoly ConversionKernel::alpha(int a, int b, int c, int d) const {
  return cached(a, b, c, d) ? alpha_[index(a, b, c, d)]
                            : qtutte::alpha(a, b, c, d);
}

QPoly ConversionKernel::beta(int a, int b, int c, int d) const {
  return cached(a, b, c, d) ? beta_[index(a, b, c, d)]
                            : qtutte::beta(a, b, c, d);
}

BiPoly rgf(const QMatroid& m) {
  const SubspaceLattice& lat = m.lattice();
  BiPoly out = BiPoly::numeric(m.rank(), m.nullity(), lat.q());
  for (FlatId z = 0; z < lat.size(); ++z) {
    out.at(m.rank() - m.rank(z), m.nullity(z)) += QPoly(1);
  }
  return out;
}

BiPoly rgf_uniform_symbolic(int rho, int nu) {
  if (rho < 0 || nu < 0) {
    throw Error(ErrorCode::kRankOutOfRange, "rank and nullity must be >= 0");
  }
  const int h = rho + nu;
  BiPoly out = BiPoly::symbolic(rho, nu);
  for (int d = 0; d <= h; ++d) {
    if (d <= rho) {
      out.at(rho - d, 0) = q_binomial(h, d);
    } else {
      out.at(0, d - rho) = q_binomial(h, d);
    }
  }
  return out;
}

BiPoly rgf_prime_free_symbolic(int rho, int nu) {
  if (rho < 0 || nu < 0) {
    throw Error(ErrorCode::kRankOutOfRange, "rank and nullity must be >= 0");
  }
  BiPoly out = BiPoly::symbolic(rho, nu);
  for (int i = 0; i <= rho; ++i) {
    for (int j = 0; j <= nu; ++j) out.at(i, j) = alpha(rho, nu, i, j);
  }
  return out;
}

namespace {

// Kernel value in the coefficient ring of `p`: a constant at p's q in
// numeric mode.
QPoly in_ring(const BiPoly& p, const QPoly& k) {
  if (p.is_symbolic()) return k;
  if (p.q() < 1) {
    throw Error(ErrorCode::kDimensionMismatch,
                "numeric polynomial has no field order attached");
  }
  return QPoly(k.evaluate(p.q()));
}

BiPoly same_shape(const BiPoly& p) {
  return p.is_symbolic() ? BiPoly::symbolic(p.xdeg(), p.ydeg())
                         : BiPoly::numeric(p.xdeg(), p.ydeg(), p.q());
}

// out(c, d) = sum_{a >= c, b >= d} in(a, b) K(a, b; c, d).
template <class Kernel>
BiPoly convolve(const BiPoly& in, Kernel kernel) {
  const ConversionKernel cache(in.xdeg(), in.ydeg());
  BiPoly out = same_shape(in);
  for (int a = 0; a <= in.xdeg(); ++a) {
    for (int b = 0; b <= in.ydeg(); ++b) {
      const QPoly& v = in.at(a, b);
      if (v.is_zero()) continue;
      for (int c = 0; c <= a; ++c) {
        for (int d = 0; d <= b; ++d) {
          out.at(c, d) += v * in_ring(in, kernel(cache, a, b, c, d));
        }
      }
    }
  }
  return out;
}

}  // namespace

BiPoly rgf_from_tutte(const BiPoly& tutte) {
  return convolve(tutte, [](const ConversionKernel& k, int a, int b, int c,
                            int d) { return k.alpha(a, b, c, d); });
}

BiPoly tutte_by_beta(const BiPoly& rgf) {
  return convolve(rgf, [](const ConversionKernel& k, int a, int b, int c,
                          int d) { return k.beta(a, b, c, d); });
}

BiPoly tutte_by_subtraction(const BiPoly& rgf) {
  const ConversionKernel cache(rgf.xdeg(), rgf.ydeg());
  BiPoly residual = rgf;
  BiPoly tau = same_shape(rgf);
  for (int total = rgf.xdeg() + rgf.ydeg(); total >= 0; --total) {
    for (int a = 0; a <= rgf.xdeg(); ++a) {
      const int b = total - a;
      if (b < 0 || b > rgf.ydeg()) continue;
      const QPoly t = residual.at(a, b);
      if (t.is_zero()) continue;
      tau.at(a, b) = t;
      for (int c = 0; c <= a; ++c) {
        for (int d = 0; d <= b; ++d) {
          residual.at(c, d) -= t * in_ring(rgf, cache.alpha(a, b, c, d));
        }
      }
    }
  }
  return tau;
}

InverseReport inverse_check(int amax, int bmax) {
  InverseReport report;
  report.amax = amax;
  report.bmax = bmax;
  const ConversionKernel k(amax, bmax);
  for (int a = 0; a <= amax; ++a) {
    for (int b = 0; b <= bmax; ++b) {
      for (int e = 0; e <= a; ++e) {
        for (int f = 0; f <= b; ++f) {
          QPoly ab;
          QPoly ba;
          for (int c = e; c <= a; ++c) {
            for (int d = f; d <= b; ++d) {
              ab += k.alpha(a, b, c, d) * k.beta(c, d, e, f);
              ba += k.beta(a, b, c, d) * k.alpha(c, d, e, f);
            }
          }
          const QPoly delta(a == e && b == f ? 1 : 0);
          report.checked += 2;
          if (ab != delta) report.failures.push_back({"alpha*beta", a, b, e, f, ab});
          if (ba != delta) report.failures.push_back({"beta*alpha", a, b, e, f, ba});
        }
      }
    }
  }
  return report;
}

bool NMatrix::pass() const {
  if (!total_ok) return false;
  if (a > b && !sums_over_i_vanish) return false;
  if (a < b && !sums_over_j_vanish) return false;
  return true;
}

NMatrix n_matrix(int a, int b) {
  if (a < 0 || b < 0) {
    throw Error(ErrorCode::kRankOutOfRange, "n_matrix indices must be >= 0");
  }
  NMatrix n;
  n.a = a;
  n.b = b;
  n.entries.assign(a + 1, std::vector<QPoly>(b + 1));
  n.sums_over_i.assign(b + 1, QPoly());
  n.sums_over_j.assign(a + 1, QPoly());
  for (int i = 0; i <= a; ++i) {
    for (int j = 0; j <= b; ++j) {
      const int m = std::abs(i - j);
      QPoly factor =
          QPoly(1) + QPoly::monomial(m) - QPoly::monomial(std::max(i, j));
      QPoly v = (q_binomial(a, i) * q_binomial(b, j) * factor)
                    .shifted((a - i) * (b - j) + m * (m - 1) / 2);
      if ((i + j) % 2 != 0) v = -v;
      n.sums_over_i[j] += v;
      n.sums_over_j[i] += v;
      n.total += v;
      n.entries[i][j] = std::move(v);
    }
  }
  n.total_ok = n.total == QPoly(a == 0 && b == 0 ? 1 : 0);
  auto all_zero = [](const std::vector<QPoly>& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const QPoly& p) { return p.is_zero(); });
  };
  n.sums_over_i_vanish = all_zero(n.sums_over_i);
  n.sums_over_j_vanish = all_zero(n.sums_over_j);
  if (a == b) {
    const QPoly& last = n.sums_over_j[a];
    n.square_divisibility = true;
    for (const QPoly& s : n.sums_over_j) {
      QPoly quotient;
      const bool divides =
          s.is_zero() || (!last.is_zero() && divide_exact(s, last, quotient));
      if (!divides) n.square_divisibility = false;
    }
  }
  return n;
}

}  // namespace qtutte
