#include "kronvp/lr_resultant.hpp"

#include <cstdlib>

#include "kronvp/error.hpp"

namespace kronvp {

SignedMatrix build_lr_matrix(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::BoundTooSmall, "n and m must be at least 1");
  SignedMatrix a;
  for (int j = 1; j <= n; ++j) a.rows.push_back("x" + std::to_string(j));
  for (int i = 1; i <= m; ++i) a.rows.push_back("y" + std::to_string(i));
  a.entries = IntMatrix::Zero(n + m, n * m);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      a.entries(j, j * m + i) = -1;
      a.entries(n + i, j * m + i) = 1;
    }
  }
  return a;
}

namespace detail {

namespace {

// Visits all k-subsets of [0, n) in lexicographic order.
template <typename Fn>
bool for_each_subset(Eigen::Index n, Eigen::Index k, Fn&& fn) {
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!fn(idx)) return false;
    Eigen::Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

bool all_minors_unimodular(const IntMatrix& a) {
  if (a.rows() + a.cols() > kMaxExhaustiveDimension)
    throw Error(ErrorCode::TooLargeForExhaustiveCheck,
                std::to_string(a.rows()) + " x " + std::to_string(a.cols()) + " matrix");
  if (a.size() > 0 && a.cwiseAbs().maxCoeff() > 1) return false;
  const Eigen::Index kmax = std::min(a.rows(), a.cols());
  for (Eigen::Index k = 2; k <= kmax; ++k) {
    const bool ok = for_each_subset(a.rows(), k, [&](const std::vector<Eigen::Index>& rows) {
      return for_each_subset(a.cols(), k, [&](const std::vector<Eigen::Index>& cols) {
        const BigInt det = exact_determinant<BigInt>(a(rows, cols));
        return det >= -1 && det <= 1;
      });
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

bool is_totally_unimodular(const SignedMatrix& a) { return is_totally_unimodular(a.entries); }

LRRankStats lr_rank_stats(int n, int m) {
  const SignedMatrix a = build_lr_matrix(n, m);
  const Eigen::Index rank = exact_rank(a.entries);
  return {rank, a.entries.cols() - rank};
}

}  // namespace kronvp
