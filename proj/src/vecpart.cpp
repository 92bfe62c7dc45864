#include "kronvp/vecpart.hpp"

#include <algorithm>
#include <numeric>

#include "kronvp/error.hpp"

namespace kronvp {

void validate_vp_matrix(const VPMatrix& a) {
  if (a.row_count() < 1) throw Error(ErrorCode::InvalidMatrix, "matrix needs at least one row");
  if (static_cast<Eigen::Index>(a.rows.size()) != a.row_count())
    throw Error(ErrorCode::InvalidMatrix, "row label count does not match row count");
  if (a.columns.size() > 0 && a.columns.minCoeff() < 0)
    throw Error(ErrorCode::InvalidMatrix, "negative entry");
  for (Eigen::Index j = 0; j < a.col_count(); ++j) {
    if (a.columns.col(j).maxCoeff() <= 0)
      throw Error(ErrorCode::InvalidMatrix, "column " + std::to_string(j) + " is zero");
  }
}

VPMatrix make_vp_matrix(std::vector<std::string> rows,
                        const std::vector<std::vector<std::int64_t>>& columns) {
  VPMatrix a;
  a.rows = std::move(rows);
  const auto r = static_cast<Eigen::Index>(a.rows.size());
  a.columns.resize(r, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (static_cast<Eigen::Index>(columns[j].size()) != r)
      throw Error(ErrorCode::DimensionMismatch,
                  "column " + std::to_string(j) + " has " + std::to_string(columns[j].size()) +
                      " entries, expected " + std::to_string(r));
    for (Eigen::Index i = 0; i < r; ++i)
      a.columns(i, static_cast<Eigen::Index>(j)) = columns[j][static_cast<std::size_t>(i)];
  }
  validate_vp_matrix(a);
  return a;
}

VPCounter::VPCounter(VPMatrix a) : a_(std::move(a)) {
  validate_vp_matrix(a_);
  const auto rows = static_cast<std::size_t>(a_.row_count());
  has_slack_.assign(rows, false);
  for (Eigen::Index j = 0; j < a_.col_count(); ++j) {
    const auto col = a_.columns.col(j);
    Eigen::Index unit_row = -1;
    if (col.sum() == 1) col.maxCoeff(&unit_row);
    if (unit_row >= 0 && !has_slack_[static_cast<std::size_t>(unit_row)]) {
      has_slack_[static_cast<std::size_t>(unit_row)] = true;
      continue;
    }
    free_.emplace_back(col.data(), col.data() + rows);
  }
  std::stable_sort(free_.begin(), free_.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), std::int64_t{0}) >
           std::accumulate(y.begin(), y.end(), std::int64_t{0});
  });
  suffix_covers_.assign(free_.size() + 1, std::vector<bool>(rows, false));
  for (std::size_t d = free_.size(); d-- > 0;) {
    for (std::size_t r = 0; r < rows; ++r)
      suffix_covers_[d][r] = suffix_covers_[d + 1][r] || free_[d][r] > 0;
  }
  memo_.resize(free_.size());
}

BigInt VPCounter::rec(std::size_t depth, std::vector<std::int64_t>& residual) {
  const std::size_t rows = residual.size();
  for (std::size_t r = 0; r < rows; ++r) {
    if (residual[r] > 0 && !has_slack_[r] && !suffix_covers_[depth][r]) return 0;
  }
  if (depth == free_.size()) return 1;
  auto& memo = memo_[depth];
  if (auto it = memo.find(residual); it != memo.end()) return it->second;

  const auto& col = free_[depth];
  std::int64_t xmax = -1;
  for (std::size_t r = 0; r < rows; ++r) {
    if (col[r] == 0) continue;
    const std::int64_t cap = residual[r] / col[r];
    xmax = (xmax < 0) ? cap : std::min(xmax, cap);
  }
  BigInt total = 0;
  std::vector<std::int64_t> key = residual;
  for (std::int64_t x = 0; x <= xmax; ++x) {
    total += rec(depth + 1, residual);
    for (std::size_t r = 0; r < rows; ++r) residual[r] -= col[r];
  }
  residual = key;
  memo.emplace(std::move(key), total);
  return total;
}

BigInt VPCounter::count(const std::vector<std::int64_t>& b) {
  if (static_cast<Eigen::Index>(b.size()) != a_.row_count())
    throw Error(ErrorCode::DimensionMismatch, "b has " + std::to_string(b.size()) +
                                                  " entries, matrix has " +
                                                  std::to_string(a_.row_count()) + " rows");
  if (std::any_of(b.begin(), b.end(), [](std::int64_t v) { return v < 0; })) return 0;
  std::vector<std::int64_t> residual(b);
  return rec(0, residual);
}

BigInt VPCounter::count(const IntVector& b) {
  return count(std::vector<std::int64_t>(b.data(), b.data() + b.size()));
}

BigInt vp_count(const VPMatrix& a, const std::vector<std::int64_t>& b) {
  VPCounter counter(a);
  return counter.count(b);
}

BigInt vp_count(const VPMatrix& a, const IntVector& b) {
  VPCounter counter(a);
  return counter.count(b);
}

VPMatrix a22() { return make_vp_matrix({"s0", "s1"}, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}); }

const char* region_name(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
  }
  return "?";
}

Rational ChamberFormula::evaluate(std::int64_t n, std::int64_t m) const {
  const Rational N(n), M(m);
  const Rational sign(m % 2 == 0 ? 1 : -1);
  switch (region) {
    case Region::I:
      return M * M / 4 + M + Rational(7, 8) + sign / 8;
    case Region::II:
      return N * N / 2 + 3 * N / 2 + 1;
    case Region::III:
      return N * M - N * N / 2 - M * M / 4 + (N + M) / 2 + Rational(7, 8) + sign / 8;
  }
  return 0;
}

ChamberFormula chamber_formula(Region r) { return ChamberFormula{r}; }

std::vector<Region> ps22_region(std::int64_t n, std::int64_t m) {
  std::vector<Region> out;
  if (m <= n) out.push_back(Region::I);
  if (2 * n <= m) out.push_back(Region::II);
  if (n <= m && m <= 2 * n) out.push_back(Region::III);
  return out;
}

BigInt ps22(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) return 0;
  const Region r = ps22_region(n, m).front();
  const Rational v = chamber_formula(r).evaluate(n, m);
  return boost::multiprecision::numerator(v);
}

}  // namespace kronvp
