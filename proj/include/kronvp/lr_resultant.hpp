#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kronvp/linalg.hpp"
#include "kronvp/numeric.hpp"

namespace kronvp {

/// Rows x_1..x_n then y_1..y_m; column (j, i), j-major, has -1 at x_j and +1 at y_i.
struct SignedMatrix {
  std::vector<std::string> rows;
  IntMatrix entries;
};

SignedMatrix build_lr_matrix(int n, int m);

/// Exhaustive minors are only attempted when rows + cols stays within this.
inline constexpr Eigen::Index kMaxExhaustiveDimension = 16;

/// Every square submatrix has determinant in {-1, 0, 1}. Checked
/// exhaustively; throws TooLargeForExhaustiveCheck past the size limit.
template <typename Derived>
bool is_totally_unimodular(const Eigen::MatrixBase<Derived>& a);

bool is_totally_unimodular(const SignedMatrix& a);

struct LRRankStats {
  Eigen::Index rank;
  Eigen::Index corank;
};

/// (n + m - 1, (n - 1)(m - 1)) as measured on the built matrix by exact
/// row reduction; the corank is nm - rank.
LRRankStats lr_rank_stats(int n, int m);

// ---------------------------------------------------------------------------

namespace detail {

bool all_minors_unimodular(const IntMatrix& a);

}  // namespace detail

template <typename Derived>
bool is_totally_unimodular(const Eigen::MatrixBase<Derived>& a) {
  return detail::all_minors_unimodular(a.template cast<std::int64_t>());
}

}  // namespace kronvp
