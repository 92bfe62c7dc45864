#pragma once

#include <set>
#include <string>
#include <vector>

#include "kronvp/numeric.hpp"
#include "kronvp/partition.hpp"
#include "kronvp/vecpart.hpp"

namespace kronvp {

/// Exponent vectors of x_1..x_{n-1} and y_1..y_{m-1} (x_0 = y_0 = 1) over the
/// rows s_0..s_{n-1}, t_1..t_{m-2}:
///   x_i -> s_1...s_i (t_1...t_{m-2})^i
///   y_j -> s_0...s_{n-1} (t_1...t_{m-2})^{n-1} t_1...t_{j-1}
struct Substitution {
  int n = 0;
  int m = 0;
  std::vector<std::string> rows;
  IntMatrix x;  // rows x (n-1), column i-1 is the image of x_i
  IntMatrix y;  // rows x (m-1), column j-1 is the image of y_j

  /// Image of x^ex y^ey for Laurent exponents ex (length n-1), ey (length m-1).
  IntVector apply(const std::vector<int>& ex, const std::vector<int>& ey) const;
};

Substitution build_substitution(int n, int m);

/// One linear factor (1 - M) of the Vandermonde quotient.
struct FnmFactor {
  char product;         // 'A'..'F'
  std::string label;    // e.g. "y1/x1"
  std::vector<int> ex;  // Laurent exponents of M in x_1..x_{n-1}
  std::vector<int> ey;  // and in y_1..y_{m-1}
  IntVector column;     // image of M under the substitution
};

/// Factors from the products A-F:
///   A (x_i - y_j)            M = y_j / x_i
///   B (1 - x_i y_j)          M = x_i y_j
///   C (x_i - x_i y_j)        M = y_j,   (y_j - x_i y_j)  M = x_i
///   D (x_k - x_i y_j), k!=i  M = x_i y_j / x_k,
///     (y_k - x_i y_j), k!=j  M = x_i y_j / y_k
///   E (x_i y_j - x_k y_l), i<k, j!=l   M = x_k y_l / (x_i y_j)
///   F (x_i y_j - x_k y_j), i<k  M = x_k / x_i,
///     (x_i y_j - x_i y_l), j<l  M = y_l / y_j
/// with indices i, k in 1..n-1 and j, l in 1..m-1.
std::vector<FnmFactor> build_fnm_factors(int n, int m);

struct FnmMatrix {
  VPMatrix matrix;
  std::vector<std::string> column_labels;
};

/// Columns of all factors, sorted ascending lexicographically.
FnmMatrix build_fnm_matrix(int n, int m);

/// d = (n^2 m^2 - n^2 - m^2 - nm - n - m) / 2 + 2
std::int64_t degree_bound(int n, int m);

/// Keeps the columns vanishing on every row in zero_rows, then drops those rows.
VPMatrix face_restrict(const VPMatrix& a, const std::set<int>& zero_rows);

/// The vector b = M mu + N nu - L lam fed to vp_count for the atomic
/// coefficient, over the rows of build_substitution(n, m).
struct AtomicShift {
  int n = 0;
  int m = 0;
  std::vector<std::string> rows;
  IntMatrix mu_coef;   // rows x n
  IntMatrix nu_coef;   // rows x m
  IntMatrix lam_coef;  // rows x nm

  IntVector evaluate(const KroneckerTriple& t) const;
};

/// Supported for (2,2), (2,3) and (3,3).
AtomicShift atomic_shift(int n, int m);

/// Atomic coefficient vp_count(A_{n,m}, shift). The triple is validated
/// against bounds (n, m, nm).
BigInt atomic_nm(int n, int m, const KroneckerTriple& t);

}  // namespace kronvp
