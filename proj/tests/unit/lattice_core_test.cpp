#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "qtutte/error.hpp"
#include "qtutte/finite_field.hpp"
#include "qtutte/gf_matrix.hpp"
#include "qtutte/q_calculus.hpp"
#include "qtutte/subspace_lattice.hpp"

namespace qtutte {
namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= b;
  return v;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no qtutte::Error thrown";
  return ErrorCode::kOverflow;
}

TEST(FiniteField, PrimeFieldOfOrderTwo) {
  FiniteField f = FiniteField::make(2);
  EXPECT_EQ(f.order(), 2);
  EXPECT_EQ(f.characteristic(), 2);
  EXPECT_EQ(f.degree(), 1);
  EXPECT_TRUE(f.reduction().empty());
  EXPECT_EQ(f.add(1, 1), 0);
  EXPECT_EQ(f.mul(1, 1), 1);
}

TEST(FiniteField, RejectsNonPrimePowers) {
  EXPECT_EQ(code_of([] { FiniteField::make(6); }), ErrorCode::kNotAPrimePower);
  EXPECT_EQ(code_of([] { FiniteField::make(1); }), ErrorCode::kNotAPrimePower);
  EXPECT_EQ(code_of([] { FiniteField::make(0); }), ErrorCode::kNotAPrimePower);
  EXPECT_EQ(code_of([] { FiniteField::make(12); }), ErrorCode::kNotAPrimePower);
}

TEST(FiniteField, RejectsOrdersAboveLimit) {
  EXPECT_EQ(code_of([] { FiniteField::make(32); }), ErrorCode::kUnsupportedOrder);
  EXPECT_EQ(code_of([] { FiniteField::make(9, 8); }),
            ErrorCode::kUnsupportedOrder);
}

TEST(FiniteField, Gf4UsesXSquaredPlusXPlusOne) {
  FiniteField f = FiniteField::make(4);
  const std::vector<int> red(f.reduction().begin(), f.reduction().end());
  EXPECT_EQ(red, (std::vector<int>{1, 1, 1}));
  // x encodes as 2, x + 1 as 3.
  EXPECT_EQ(f.mul(2, 3), 1);
  EXPECT_EQ(f.mul(2, 2), 3);
}

TEST(FiniteField, ReductionPolynomials) {
  auto red = [](int q) {
    FiniteField f = FiniteField::make(q);
    return std::vector<int>(f.reduction().begin(), f.reduction().end());
  };
  EXPECT_EQ(red(8), (std::vector<int>{1, 1, 0, 1}));
  EXPECT_EQ(red(9), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(red(16), (std::vector<int>{1, 1, 0, 0, 1}));
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, HoldForAllElements) {
  FiniteField f = FiniteField::make(GetParam());
  const int q = f.order();
  for (int a = 0; a < q; ++a) {
    EXPECT_EQ(f.add(a, 0), a);
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0);
    if (a != 0) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    }
    for (int b = 0; b < q; ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      for (int c = 0; c < q; ++c) {
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        EXPECT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        EXPECT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
      }
    }
  }
  // The primitive element generates every nonzero element.
  std::vector<bool> seen(q, false);
  Elem x = 1;
  for (int i = 0; i < q - 1; ++i) {
    seen[x] = true;
    x = f.mul(x, f.primitive());
  }
  EXPECT_EQ(std::count(seen.begin() + 1, seen.end(), true), q - 1);
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms,
                         ::testing::Values(2, 3, 4, 5, 7, 8, 9, 11, 13, 16));

TEST(Rref, EliminatesAndDropsZeroRows) {
  FiniteField f = FiniteField::make(2);
  EXPECT_EQ(rref(f, GfMatrix{{1, 1, 0}, {0, 1, 0}}).rows(),
            (GfMatrix{{1, 0, 0}, {0, 1, 0}}));
  Subspace s = rref(f, GfMatrix{{1, 1}, {1, 1}});
  EXPECT_EQ(s.height(), 1);
  EXPECT_EQ(s.rows(), (GfMatrix{{1, 1}}));
}

TEST(Rref, RaggedRowsAreRejected) {
  EXPECT_EQ(code_of([] { GfMatrix m{{1, 0}, {1}}; }),
            ErrorCode::kDimensionMismatch);
}

TEST(Rref, EveryInvertibleMatrixReducesToIdentity) {
  FiniteField f = FiniteField::make(2);
  auto mats = oracle::invertible_matrices(2, 3);
  ASSERT_EQ(mats.size(), 168u);
  const GfMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const auto& m : mats) {
    std::vector<Elem> data(m.begin(), m.end());
    EXPECT_EQ(rref(f, GfMatrix(3, 3, data)).rows(), id);
  }
}

TEST(Rref, IsIdempotentAndDecidesRowSpaceEquality) {
  FiniteField f = FiniteField::make(3);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> e(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    GfMatrix m(3, 4);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 4; ++c) m.at(r, c) = static_cast<Elem>(e(rng));
    }
    Subspace s = rref(f, m);
    EXPECT_EQ(rref(f, s.rows()), s);
    // Adding a row combination leaves the row space unchanged.
    GfMatrix m2 = m;
    for (int c = 0; c < 4; ++c) {
      m2.at(0, c) = f.add(m.at(0, c), f.mul(2, m.at(1, c)));
    }
    EXPECT_EQ(rref(f, m2), s);
  }
}

struct Shape {
  int q;
  int k;
};

class LatticeShape : public ::testing::TestWithParam<Shape> {};

TEST_P(LatticeShape, HeightCountsAreGaussianBinomials) {
  const auto [q, k] = GetParam();
  auto lat = shared_lattice(q, k);
  std::size_t total = 0;
  for (int d = 0; d <= k; ++d) {
    const auto expected =
        static_cast<std::size_t>(oracle::gaussian_value(q, k, d));
    EXPECT_EQ(lat->by_height(d).size(), expected) << "d=" << d;
    EXPECT_EQ(static_cast<std::size_t>(q_binomial(k, d).evaluate(q)), expected);
    EXPECT_EQ(subspace_count(q, k, d), expected);
    total += expected;
  }
  EXPECT_EQ(lat->size(), total);
  EXPECT_EQ(lat->height(lat->bottom()), 0);
  EXPECT_EQ(lat->height(lat->top()), k);
}

TEST_P(LatticeShape, CanonicalOrderIsHeightThenEntries) {
  const auto [q, k] = GetParam();
  auto lat = shared_lattice(q, k);
  for (FlatId x = 1; x < lat->size(); ++x) {
    const Subspace& a = lat->flat(x - 1);
    const Subspace& b = lat->flat(x);
    if (a.height() != b.height()) {
      EXPECT_LT(a.height(), b.height());
    } else {
      EXPECT_LT(a.rows().data(), b.rows().data());
    }
  }
}

TEST_P(LatticeShape, CoversMatchHeightsAndCounts) {
  const auto [q, k] = GetParam();
  auto lat = shared_lattice(q, k);
  std::size_t covers = 0;
  for (FlatId x = 0; x < lat->size(); ++x) {
    const int h = lat->height(x);
    // Upper covers of a height-h flat correspond to points of the quotient.
    EXPECT_EQ(lat->upper_covers(x).size(),
              static_cast<std::size_t>(oracle::gaussian_value(q, k - h, 1)));
    EXPECT_EQ(lat->lower_covers(x).size(),
              static_cast<std::size_t>(oracle::gaussian_value(q, h, 1)));
    for (FlatId y : lat->upper_covers(x)) {
      EXPECT_EQ(lat->height(y), h + 1);
      EXPECT_TRUE(lat->leq(x, y));
      auto lower = lat->lower_covers(y);
      EXPECT_NE(std::find(lower.begin(), lower.end(), x), lower.end());
      EXPECT_EQ(lat->covers()[lat->cover_index(x, y)].upper, y);
    }
    covers += lat->upper_covers(x).size();
  }
  EXPECT_EQ(lat->covers().size(), covers);
}

TEST_P(LatticeShape, DiamondsHaveQPlusOneMiddles) {
  const auto [q, k] = GetParam();
  auto lat = shared_lattice(q, k);
  std::size_t expected = 0;
  for (FlatId z = 0; z < lat->size(); ++z) {
    const int h = lat->height(z);
    if (h + 2 <= k) {
      expected += static_cast<std::size_t>(oracle::gaussian_value(q, k - h, 2));
    }
  }
  EXPECT_EQ(lat->diamonds().size(), expected);
  for (const Diamond& d : lat->diamonds()) {
    EXPECT_EQ(d.middles.size(), static_cast<std::size_t>(q + 1));
    EXPECT_EQ(lat->height(d.top), lat->height(d.bottom) + 2);
    for (FlatId m : d.middles) {
      EXPECT_TRUE(lat->leq(d.bottom, m));
      EXPECT_TRUE(lat->leq(m, d.top));
    }
  }
}

TEST_P(LatticeShape, ModularLawAndPerpInvolution) {
  const auto [q, k] = GetParam();
  auto lat = shared_lattice(q, k);
  for (FlatId a = 0; a < lat->size(); ++a) {
    EXPECT_EQ(lat->perp(lat->perp(a)), a);
    EXPECT_EQ(lat->height(lat->perp(a)), k - lat->height(a));
    for (FlatId b = 0; b < lat->size(); ++b) {
      const FlatId j = lat->join(a, b);
      const FlatId m = lat->meet(a, b);
      EXPECT_EQ(lat->height(a) + lat->height(b), lat->height(j) + lat->height(m));
      EXPECT_EQ(lat->leq(a, b), lat->join(a, b) == b);
      EXPECT_EQ(lat->leq(a, b), lat->leq(lat->perp(b), lat->perp(a)));
    }
  }
}

TEST_P(LatticeShape, ComplementCountsFollowThePowerLaw) {
  const auto [q, k] = GetParam();
  auto lat = shared_lattice(q, k);
  for (FlatId x = 0; x < lat->size(); ++x) {
    const int r = lat->height(x);
    EXPECT_EQ(lat->complements(x).size(), ipow(q, r * (k - r))) << "x=" << x;
  }
}

INSTANTIATE_TEST_SUITE_P(Small, LatticeShape,
                         ::testing::Values(Shape{2, 0}, Shape{2, 1}, Shape{2, 2},
                                           Shape{2, 3}, Shape{3, 2}, Shape{3, 3},
                                           Shape{4, 2}, Shape{2, 4}),
                         [](const auto& info) {
                           return "q" + std::to_string(info.param.q) + "k" +
                                  std::to_string(info.param.k);
                         });

TEST(Lattice, FanoPlaneShape) {
  auto lat = shared_lattice(2, 3);
  EXPECT_EQ(lat->size(), 16u);
  EXPECT_EQ(lat->points().size(), 7u);
  EXPECT_EQ(lat->by_height(2).size(), 7u);
  EXPECT_EQ(lat->upper_covers(lat->bottom()).size(), 7u);
  EXPECT_TRUE(lat->lower_covers(lat->bottom()).empty());
  EXPECT_TRUE(lat->upper_covers(lat->top()).empty());
  for (FlatId p : lat->points()) EXPECT_EQ(lat->upper_covers(p).size(), 3u);
}

TEST(Lattice, HeightZeroHasOneFlat) {
  auto lat = shared_lattice(2, 0);
  EXPECT_EQ(lat->size(), 1u);
  EXPECT_EQ(lat->bottom(), lat->top());
}

TEST(Lattice, ThirteenPointsOverGf3) {
  auto lat = shared_lattice(3, 3);
  EXPECT_EQ(lat->by_height(1).size(), 13u);
  EXPECT_EQ(lat->by_height(2).size(), 13u);
}

TEST(Lattice, JoinOfTwoPointsIsTheirLine) {
  auto lat = shared_lattice(2, 3);
  const FlatId a = lat->span_id(GfMatrix{{0, 1, 0}});
  const FlatId b = lat->span_id(GfMatrix{{1, 0, 1}});
  const FlatId line = lat->join(a, b);
  EXPECT_EQ(lat->flat(line).rows(), (GfMatrix{{1, 0, 1}, {0, 1, 0}}));
  EXPECT_TRUE(lat->leq(lat->span_id(GfMatrix{{1, 1, 1}}), line));
}

TEST(Lattice, LatticeLawsOnSingleFlats) {
  auto lat = shared_lattice(3, 3);
  for (FlatId x = 0; x < lat->size(); ++x) {
    EXPECT_EQ(lat->meet(x, x), x);
    EXPECT_EQ(lat->join(x, x), x);
    EXPECT_EQ(lat->join(x, lat->bottom()), x);
    EXPECT_EQ(lat->meet(x, lat->top()), x);
  }
}

TEST(Lattice, DistinctLinesMeetInAPoint) {
  auto lat = shared_lattice(2, 3);
  auto lines = lat->by_height(2);
  int pairs = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      EXPECT_EQ(lat->height(lat->meet(lines[i], lines[j])), 1);
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 21);
}

TEST(Lattice, AgreesWithVectorSetOracle) {
  for (auto [p, k] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4},
                      std::pair{3, 3}}) {
    auto lat = shared_lattice(p, k);
    oracle::VectorLattice ref(p, k);
    ASSERT_EQ(ref.size(), lat->size());
    std::vector<std::size_t> map(lat->size());
    for (FlatId x = 0; x < lat->size(); ++x) {
      map[x] = ref.from_flat(*lat, x);
      EXPECT_EQ(ref.height(map[x]), lat->height(x));
    }
    for (FlatId a = 0; a < lat->size(); ++a) {
      for (FlatId b = 0; b < lat->size(); ++b) {
        ASSERT_EQ(map[lat->join(a, b)], ref.join(map[a], map[b]));
        ASSERT_EQ(map[lat->meet(a, b)], ref.meet(map[a], map[b]));
        ASSERT_EQ(lat->leq(a, b), ref.leq(map[a], map[b]));
      }
    }
  }
}

TEST(Lattice, IntervalSizes) {
  auto lat = shared_lattice(2, 3);
  EXPECT_EQ(lat->interval(lat->bottom(), lat->top()).size(), 16u);
  for (FlatId p : lat->points()) {
    EXPECT_EQ(lat->interval(p, lat->top()).size(), 5u);
    EXPECT_EQ(lat->interval(p, p), std::vector<FlatId>{p});
  }
  const FlatId a = lat->points()[0];
  const FlatId b = lat->points()[1];
  EXPECT_EQ(code_of([&] { lat->interval(a, b); }), ErrorCode::kNotComparable);
}

TEST(Lattice, ComplementsOfAPointAreTheFourLinesMissingIt) {
  auto lat = shared_lattice(2, 3);
  const FlatId p = lat->span_id(GfMatrix{{1, 0, 0}});
  auto comps = lat->complements(p);
  ASSERT_EQ(comps.size(), 4u);
  for (FlatId y : comps) {
    EXPECT_EQ(lat->height(y), 2);
    EXPECT_FALSE(lat->leq(p, y));
  }
}

TEST(Lattice, BottomHasTopAsOnlyComplement) {
  auto lat = shared_lattice(3, 3);
  EXPECT_EQ(lat->complements(lat->bottom()), std::vector<FlatId>{lat->top()});
  // Relative version: x = z gives {w}.
  const FlatId z = lat->points()[2];
  const FlatId w = lat->upper_covers(lat->upper_covers(z)[0])[0];
  EXPECT_EQ(lat->complements(z, z, w), std::vector<FlatId>{w});
}

TEST(Lattice, ComplementsInEveryIntervalOfL24) {
  auto lat = shared_lattice(2, 4);
  for (FlatId z = 0; z < lat->size(); ++z) {
    for (FlatId w = 0; w < lat->size(); ++w) {
      if (!lat->leq(z, w)) continue;
      const int m = lat->height(w) - lat->height(z);
      for (FlatId x : lat->interval(z, w)) {
        const int r = lat->height(x) - lat->height(z);
        ASSERT_EQ(lat->complements(x, z, w).size(), ipow(2, r * (m - r)));
      }
    }
  }
}

TEST(Lattice, HeightTwoFlatsOfL34HaveEightyOneComplements) {
  auto lat = shared_lattice(3, 4);
  EXPECT_EQ(lat->size(), 212u);
  for (FlatId x : lat->by_height(2)) EXPECT_EQ(lat->complements(x).size(), 81u);
}

TEST(Lattice, ComplementsOverGf4) {
  auto lat = shared_lattice(4, 3);
  for (FlatId x = 0; x < lat->size(); ++x) {
    const int r = lat->height(x);
    EXPECT_EQ(lat->complements(x).size(), ipow(4, r * (3 - r)));
  }
}

TEST(Lattice, ModularCaseIsExactlyOneOfTwo) {
  auto lat = shared_lattice(2, 3);
  int checked = 0;
  for (FlatId z = 0; z < lat->size(); ++z) {
    for (const Cover& c : lat->covers()) {
      const FlatId x = c.lower;
      const FlatId y = c.upper;
      const bool join_rises =
          lat->height(lat->join(y, z)) == lat->height(lat->join(x, z)) + 1 &&
          lat->meet(y, z) == lat->meet(x, z);
      const bool meet_rises =
          lat->join(y, z) == lat->join(x, z) &&
          lat->height(lat->meet(y, z)) == lat->height(lat->meet(x, z)) + 1;
      ASSERT_NE(join_rises, meet_rises);
      EXPECT_EQ(lat->modular_case(z, x, y),
                join_rises ? ModularCase::kJoinRises : ModularCase::kMeetRises);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 16 * 35);
  const Cover& c = lat->covers().front();
  EXPECT_EQ(lat->modular_case(c.lower, c.lower, c.upper), ModularCase::kJoinRises);
  EXPECT_EQ(lat->modular_case(c.upper, c.lower, c.upper), ModularCase::kMeetRises);
  EXPECT_EQ(code_of([&] { lat->modular_case(0, 0, lat->top()); }),
            ErrorCode::kNotACover);
}

TEST(Lattice, LadderAlongUpwardProjection) {
  // For y covering z and any chain z = x0 < x1 < ... with y not below x_i,
  // y v x_i covers x_i.
  auto lat = shared_lattice(2, 3);
  for (const Cover& c : lat->covers()) {
    for (FlatId x : lat->interval(c.lower, lat->top())) {
      if (lat->leq(c.upper, x)) continue;
      const FlatId yx = lat->join(c.upper, x);
      EXPECT_EQ(lat->height(yx), lat->height(x) + 1);
    }
  }
}

TEST(Lattice, IntervalEmbeddingIsOrderPreserving) {
  auto lat = shared_lattice(2, 4);
  const FlatId z = lat->points()[3];
  const FlatId w = lat->top();
  auto small = shared_lattice(2, 3);
  auto emb = lat->interval_embedding(z, w, *small);
  ASSERT_EQ(emb.size(), small->size());
  auto sorted = emb;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, lat->interval(z, w));
  for (FlatId a = 0; a < small->size(); ++a) {
    for (FlatId b = 0; b < small->size(); ++b) {
      EXPECT_EQ(small->leq(a, b), lat->leq(emb[a], emb[b]));
    }
  }
}

TEST(Lattice, FlatBudgetIsEnforced) {
  LatticeOptions o;
  o.max_flats = 100;
  EXPECT_EQ(code_of([&] { SubspaceLattice::build(2, 5, o); }),
            ErrorCode::kBudgetExceeded);
  EXPECT_EQ(SubspaceLattice::build(2, 5).size(), 374u);
}

TEST(Lattice, InvalidIdsAreRejected) {
  auto lat = shared_lattice(2, 2);
  EXPECT_EQ(code_of([&] { lat->flat(99); }), ErrorCode::kInvalidId);
}

}  // namespace
}  // namespace qtutte
