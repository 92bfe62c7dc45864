#include <gtest/gtest.h>

#include <chrono>

#include "kronvp/character_oracle.hpp"
#include "kronvp/holes.hpp"
#include "kronvp/kron224.hpp"

using namespace kronvp;

namespace {

const HolePoint* find(const HolesGrid& g, std::int64_t i, std::int64_t j, std::int64_t k) {
  for (const HolePoint& p : g.points)
    if (p.i == i && p.j == j && p.k == k) return &p;
  return nullptr;
}

}  // namespace

TEST(HolesGrid, Weight24Points) {
  const auto start = std::chrono::steady_clock::now();
  const HolesGrid g = holes_grid(24);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
  EXPECT_EQ(g.weight, 24);
  // 0 <= j <= i <= k <= 12
  EXPECT_EQ(g.points.size(), 455u);
  ASSERT_NE(find(g, 12, 12, 12), nullptr);
  EXPECT_EQ(find(g, 12, 12, 12)->g, 1);
  EXPECT_EQ(find(g, 0, 0, 0)->g, 1);
  EXPECT_EQ(find(g, 0, 0, 1)->g, 0);
  EXPECT_EQ(find(g, 1, 0, 0), nullptr);  // outside the sorted chamber
  EXPECT_EQ(kron224(Partition{23, 1}, Partition{24}, Partition{24}), 0);
}

TEST(HolesGrid, SortedAndDeterministic) {
  const HolesGrid a = holes_grid(14, 1);
  const HolesGrid b = holes_grid(14, 3);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t p = 0; p < a.points.size(); ++p) {
    EXPECT_EQ(a.points[p].i, b.points[p].i);
    EXPECT_EQ(a.points[p].j, b.points[p].j);
    EXPECT_EQ(a.points[p].k, b.points[p].k);
    EXPECT_EQ(a.points[p].g, b.points[p].g);
    if (p > 0) {
      const auto& x = a.points[p - 1];
      const auto& y = a.points[p];
      EXPECT_LT(std::tie(x.i, x.j, x.k), std::tie(y.i, y.j, y.k));
    }
  }
}

TEST(HolesGrid, ValuesMatchOracle) {
  const HolesGrid g = holes_grid(12);
  for (const HolePoint& p : g.points)
    EXPECT_EQ(p.g, kron_oracle_char(Partition{12 - p.i, p.i}, Partition{12 - p.j, p.j}, Partition{12 - p.k, p.k}));
}

TEST(HolesGrid, WeightZeroIsOnePoint) {
  const HolesGrid g = holes_grid(0);
  ASSERT_EQ(g.points.size(), 1u);
  EXPECT_EQ(g.points[0].g, 1);
}

TEST(HolesGrid, BravyiHolesLieOnTopFace) {
  for (std::int64_t w = 0; w <= 24; ++w) {
    const HolesGrid g = holes_grid(w);
    for (const HolePoint& p : bravyi_holes(g)) {
      EXPECT_EQ(p.g, 0);
      EXPECT_EQ(p.k, w / 2) << "weight " << w << " at (" << p.i << "," << p.j << "," << p.k << ")";
    }
  }
  EXPECT_FALSE(bravyi_holes(holes_grid(24)).empty());
}
