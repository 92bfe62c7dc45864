#pragma once

#include <utility>

#include "kronvp/numeric.hpp"

namespace kronvp {

/// Fraction-free (Bareiss) elimination on an integer matrix, in place.
///
/// Every intermediate entry is a minor of the input, so with Scalar =
/// std::int64_t the routine is exact as long as all minors fit; BigInt is
/// always exact. Returns the rank; the sign of any row swaps performed is
/// accumulated into `sign`.
template <typename Scalar>
Eigen::Index bareiss_eliminate(Matrix<Scalar>& a, int& sign) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Scalar prev_pivot = 1;
  Eigen::Index rank = 0;
  sign = 1;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      a.row(pivot).swap(a.row(rank));
      sign = -sign;
    }
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        Scalar v = a(rank, col) * a(r, c) - a(r, col) * a(rank, c);
        a(r, c) = v / prev_pivot;
      }
      a(r, col) = 0;
    }
    prev_pivot = a(rank, col);
    ++rank;
  }
  return rank;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  Matrix<BigInt> a = m.template cast<BigInt>();
  int sign = 1;
  return bareiss_eliminate(a, sign);
}

/// Determinant of a square integer matrix, computed in Scalar.
template <typename Scalar, typename Derived>
Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  eigen_assert(m.rows() == m.cols());
  if (m.rows() == 0) return Scalar(1);
  Matrix<Scalar> a = m.template cast<Scalar>();
  int sign = 1;
  const Eigen::Index rank = bareiss_eliminate(a, sign);
  if (rank < a.rows()) return Scalar(0);
  Scalar det = a(a.rows() - 1, a.cols() - 1);
  return sign < 0 ? Scalar(-det) : det;
}

}  // namespace kronvp
