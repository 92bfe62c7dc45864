#pragma once

#include <map>
#include <string>
#include <vector>

#include "kronvp/numeric.hpp"

namespace kronvp {

/// Nonnegative integer matrix with labeled rows. Each column is one part;
/// repeated columns are distinct parts.
struct VPMatrix {
  std::vector<std::string> rows;
  IntMatrix columns;  // rows.size() x number of parts

  Eigen::Index row_count() const { return columns.rows(); }
  Eigen::Index col_count() const { return columns.cols(); }
};

/// Throws InvalidMatrix unless labels match the row count, every entry is
/// nonnegative, and every column has a positive entry.
void validate_vp_matrix(const VPMatrix& a);

VPMatrix make_vp_matrix(std::vector<std::string> rows,
                        const std::vector<std::vector<std::int64_t>>& columns);

/// Counts nonnegative integer solutions of A x = b for a fixed A.
///
/// One unit column per row (when present) acts as a slack variable; the
/// remaining columns are enumerated depth-first in decreasing order of
/// column sum, with per-row residual bounds and memoization on
/// (depth, residual). Holding the counter across calls reuses the memo.
class VPCounter {
 public:
  explicit VPCounter(VPMatrix a);

  const VPMatrix& matrix() const { return a_; }

  /// Negative entries in b give 0.
  BigInt count(const IntVector& b);
  BigInt count(const std::vector<std::int64_t>& b);

 private:
  BigInt rec(std::size_t depth, std::vector<std::int64_t>& residual);

  VPMatrix a_;
  std::vector<bool> has_slack_;
  std::vector<std::vector<std::int64_t>> free_;        // enumerated columns
  std::vector<std::vector<bool>> suffix_covers_;       // rows reachable from depth onward
  std::vector<std::map<std::vector<std::int64_t>, BigInt>> memo_;
};

BigInt vp_count(const VPMatrix& a, const IntVector& b);
BigInt vp_count(const VPMatrix& a, const std::vector<std::int64_t>& b);

/// Columns (1,0), (0,1), (1,1), (1,2) over rows (s0, s1).
VPMatrix a22();

enum class Region { I, II, III };

const char* region_name(Region r);

/// Closed-form p_S(n, m) on one chamber, with the (-1)^m term taken by parity.
struct ChamberFormula {
  Region region;
  Rational evaluate(std::int64_t n, std::int64_t m) const;
};

ChamberFormula chamber_formula(Region r);

/// Every chamber whose closure contains (n, m): I for m <= n, II for
/// 2n <= m, III for n <= m <= 2n. Interior points get exactly one.
std::vector<Region> ps22_region(std::int64_t n, std::int64_t m);

/// p_S(n, m) for S = {(1,0), (0,1), (1,1), (1,2)}; 0 when n < 0 or m < 0.
BigInt ps22(std::int64_t n, std::int64_t m);

}  // namespace kronvp
