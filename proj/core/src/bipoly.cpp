#include "qtutte/bipoly.hpp"

#include <algorithm>
#include <ostream>

#include "qtutte/error.hpp"

namespace qtutte {

namespace {
const QPoly kZero;
}  // namespace

BiPoly::BiPoly(PolyMode mode, int xdeg, int ydeg, int q)
    : mode_(mode), xdeg_(xdeg), ydeg_(ydeg), q_(q) {
  if (xdeg < 0 || ydeg < 0) {
    throw Error(ErrorCode::kDimensionMismatch, "negative polynomial degree");
  }
  cells_.resize(static_cast<std::size_t>(xdeg + 1) * (ydeg + 1));
}

const QPoly& BiPoly::at(int i, int j) const {
  if (i < 0 || j < 0 || i > xdeg_ || j > ydeg_) return kZero;
  return cells_[static_cast<std::size_t>(i) * (ydeg_ + 1) + j];
}

QPoly& BiPoly::at(int i, int j) {
  if (i < 0 || j < 0 || i > xdeg_ || j > ydeg_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cell (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") outside the grid");
  }
  return cells_[static_cast<std::size_t>(i) * (ydeg_ + 1) + j];
}

std::int64_t BiPoly::value(int i, int j) const {
  const QPoly& p = at(i, j);
  if (!p.is_constant()) {
    throw Error(ErrorCode::kDimensionMismatch, "entry is not a number");
  }
  return p.coeff(0);
}

BiPoly BiPoly::evaluate_at(std::int64_t q) const {
  if (!is_symbolic() && q != q_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "numeric polynomial at q=" + std::to_string(q_) +
                    " cannot be read at q=" + std::to_string(q));
  }
  BiPoly out = numeric(xdeg_, ydeg_, static_cast<int>(q));
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    out.cells_[c] = QPoly(cells_[c].evaluate(q));
  }
  return out;
}

BiPoly BiPoly::swapped() const {
  BiPoly out(mode_, ydeg_, xdeg_, q_);
  for (int i = 0; i <= xdeg_; ++i) {
    for (int j = 0; j <= ydeg_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

QPoly BiPoly::total() const {
  QPoly sum;
  for (const QPoly& c : cells_) sum += c;
  return sum;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (a.mode_ != b.mode_) return false;
  const int xd = std::max(a.xdeg_, b.xdeg_);
  const int yd = std::max(a.ydeg_, b.ydeg_);
  for (int i = 0; i <= xd; ++i) {
    for (int j = 0; j <= yd; ++j) {
      if (a.at(i, j) != b.at(i, j)) return false;
    }
  }
  return true;
}

std::string BiPoly::to_string() const {
  struct Cell {
    int i, j;
  };
  std::vector<Cell> order;
  for (int i = 0; i <= xdeg_; ++i) {
    for (int j = 0; j <= ydeg_; ++j) {
      if (!at(i, j).is_zero()) order.push_back({i, j});
    }
  }
  std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
    if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
    return a.i > b.i;
  });
  if (order.empty()) return "0";

  auto power = [](const char* var, int e) {
    std::string s = var;
    if (e > 1) s += "^" + std::to_string(e);
    return s;
  };
  std::string out;
  for (const Cell& c : order) {
    const QPoly& p = at(c.i, c.j);
    std::string mono;
    if (c.i > 0) mono = power("x", c.i);
    if (c.j > 0) mono += (mono.empty() ? "" : "*") + power("y", c.j);

    std::string coef;
    bool negative = false;
    if (p.is_constant()) {
      std::int64_t v = p.coeff(0);
      negative = v < 0;
      if (negative) v = -v;
      if (v != 1 || mono.empty()) coef = std::to_string(v);
    } else {
      coef = "(" + p.to_string() + ")";
    }
    std::string term = coef;
    if (!coef.empty() && !mono.empty()) term += "*";
    term += mono;
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? "-" : "+") + term;
    }
  }
  return out;
}

std::vector<std::string> BiPoly::display_rows() const {
  std::vector<std::string> rows;
  for (int j = ydeg_; j >= 0; --j) {
    int last = 0;
    for (int i = 0; i <= xdeg_; ++i) {
      if (!at(i, j).is_zero()) last = i;
    }
    std::string row;
    for (int i = 0; i <= last; ++i) {
      if (i > 0) row += ' ';
      const QPoly& p = at(i, j);
      row += p.is_constant() ? std::to_string(p.coeff(0)) : p.to_string();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
  return os << p.to_string();
}

BiPoly numeric_poly(int q, const std::vector<Term>& terms) {
  int xd = 0;
  int yd = 0;
  for (const Term& t : terms) {
    xd = std::max(xd, t.i);
    yd = std::max(yd, t.j);
  }
  BiPoly p = BiPoly::numeric(xd, yd, q);
  for (const Term& t : terms) p.at(t.i, t.j) += QPoly(t.c);
  return p;
}

}  // namespace qtutte
