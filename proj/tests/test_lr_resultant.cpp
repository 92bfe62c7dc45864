#include <gtest/gtest.h>

#include "kronvp/error.hpp"
#include "kronvp/lr_resultant.hpp"
#include "support/reference_matrices.hpp"

using namespace kronvp;
namespace kt = kronvp::testing;

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return a;
}

}  // namespace

TEST(LRMatrix, ReferenceMatrices) {
  EXPECT_EQ(build_lr_matrix(2, 2).entries, from_rows(kt::kLR22Rows));
  EXPECT_EQ(build_lr_matrix(2, 3).entries, from_rows(kt::kLR23Rows));
  EXPECT_EQ(build_lr_matrix(2, 3).rows, (std::vector<std::string>{"x1", "x2", "y1", "y2", "y3"}));
}

TEST(LRMatrix, ColumnStructure) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const IntMatrix a = build_lr_matrix(n, m).entries;
      ASSERT_EQ(a.cols(), n * m);
      for (Eigen::Index c = 0; c < a.cols(); ++c) {
        EXPECT_EQ(a.col(c).head(n).sum(), -1);
        EXPECT_EQ(a.col(c).head(n).minCoeff(), -1);
        EXPECT_EQ(a.col(c).tail(m).sum(), 1);
        EXPECT_EQ(a.col(c).tail(m).maxCoeff(), 1);
      }
      EXPECT_TRUE(a.colwise().sum().isZero());
    }
}

TEST(TotalUnimodularity, LRMatricesUpToThree) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) EXPECT_TRUE(is_totally_unimodular(build_lr_matrix(n, m))) << n << "," << m;
}

TEST(TotalUnimodularity, DetectsViolations) {
  IntMatrix a(2, 2);
  a << 1, 1, -1, 1;  // determinant 2
  EXPECT_FALSE(is_totally_unimodular(a));
  IntMatrix b(1, 1);
  b << 2;
  EXPECT_FALSE(is_totally_unimodular(b));
  IntMatrix odd_cycle(3, 3);
  odd_cycle << 1, 1, 0, 0, 1, 1, 1, 0, 1;  // determinant 2
  EXPECT_FALSE(is_totally_unimodular(odd_cycle));
  EXPECT_TRUE(is_totally_unimodular(IntMatrix::Identity(4, 4)));
}

TEST(TotalUnimodularity, RefusesLargeExhaustiveChecks) {
  try {
    is_totally_unimodular(build_lr_matrix(4, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLargeForExhaustiveCheck);
  }
}

TEST(RankStats, UpToFour) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const LRRankStats s = lr_rank_stats(n, m);
      EXPECT_EQ(s.rank, n + m - 1);
      EXPECT_EQ(s.corank, (n - 1) * (m - 1));
    }
}
