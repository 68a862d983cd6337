#include "qtutte/qpoly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "qtutte/error.hpp"

namespace qtutte {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "q-polynomial coefficient overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "q-polynomial coefficient overflow");
  }
  return r;
}

}  // namespace

QPoly::QPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {
  normalize();
}

QPoly::QPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

QPoly QPoly::monomial(int e, std::int64_t c) {
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(e + 1, 0);
    p.coeffs_[e] = c;
  }
  return p;
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t QPoly::evaluate(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, q), *it);
  }
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
  }
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    std::int64_t r;
    if (__builtin_sub_overflow(coeffs_[i], rhs.coeffs_[i], &r)) {
      throw Error(ErrorCode::kOverflow, "q-polynomial coefficient overflow");
    }
    coeffs_[i] = r;
  }
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

QPoly QPoly::shifted(int e) const {
  if (is_zero() || e == 0) return *this;
  QPoly out;
  out.coeffs_.assign(e, 0);
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

std::string QPoly::to_list_string() const {
  if (is_zero()) return "[0]";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << 'q';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
  return os << p.to_string();
}

bool divide_exact(const QPoly& dividend, const QPoly& divisor, QPoly& quotient) {
  if (divisor.is_zero()) {
    throw Error(ErrorCode::kOverflow, "division by the zero polynomial");
  }
  std::vector<std::int64_t> rem = dividend.coeffs();
  const int dd = divisor.degree();
  const std::int64_t lead = divisor.coeffs().back();
  if (dividend.degree() < dd) {
    quotient = QPoly();
    return dividend.is_zero();
  }
  std::vector<std::int64_t> quot(dividend.degree() - dd + 1, 0);
  for (int i = dividend.degree(); i >= dd; --i) {
    std::int64_t c = rem[i];
    if (c == 0) continue;
    if (c % lead != 0) return false;
    std::int64_t f = c / lead;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) {
      rem[i - dd + j] = checked_add(rem[i - dd + j],
                                    checked_mul(-f, divisor.coeffs()[j]));
    }
  }
  for (std::int64_t r : rem) {
    if (r != 0) return false;
  }
  quotient = QPoly(std::move(quot));
  return true;
}

}  // namespace qtutte
