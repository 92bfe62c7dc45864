#include "kronvp/fnm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kronvp/error.hpp"

namespace kronvp {

namespace {

void require_dims(int n, int m) {
  if (n < 2 || m < 2)
    throw Error(ErrorCode::BoundTooSmall, "n and m must be at least 2 (got " + std::to_string(n) +
                                              ", " + std::to_string(m) + ")");
}

std::string var(char c, int i) { return std::string(1, c) + std::to_string(i); }

std::string monomial_string(const std::vector<int>& ex, const std::vector<int>& ey, int sign) {
  std::string s;
  for (std::size_t i = 0; i < ex.size(); ++i)
    for (int e = 0; e < ex[i] * sign; ++e) s += var('x', static_cast<int>(i) + 1);
  for (std::size_t j = 0; j < ey.size(); ++j)
    for (int e = 0; e < ey[j] * sign; ++e) s += var('y', static_cast<int>(j) + 1);
  return s;
}

std::string laurent_label(const std::vector<int>& ex, const std::vector<int>& ey) {
  const std::string num = monomial_string(ex, ey, 1);
  const std::string den = monomial_string(ex, ey, -1);
  const bool den_compound = den.size() > 2;
  if (den.empty()) return num;
  return (num.empty() ? "1" : num) + "/" + (den_compound ? "(" + den + ")" : den);
}

// Linear forms as rows of small coefficient tables.
IntMatrix table(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix out(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (std::int64_t v : row) out(i, j++) = v;
    ++i;
  }
  return out;
}

IntVector parts_vector(const Partition& p, Eigen::Index len) {
  IntVector v(len);
  for (Eigen::Index i = 0; i < len; ++i) v(i) = p.part(static_cast<std::size_t>(i) + 1);
  return v;
}

}  // namespace

IntVector Substitution::apply(const std::vector<int>& ex, const std::vector<int>& ey) const {
  IntVector out = IntVector::Zero(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < ex.size(); ++i) out += ex[i] * x.col(static_cast<Eigen::Index>(i));
  for (std::size_t j = 0; j < ey.size(); ++j) out += ey[j] * y.col(static_cast<Eigen::Index>(j));
  return out;
}

Substitution build_substitution(int n, int m) {
  require_dims(n, m);
  Substitution s;
  s.n = n;
  s.m = m;
  for (int i = 0; i < n; ++i) s.rows.push_back(var('s', i));
  for (int j = 1; j <= m - 2; ++j) s.rows.push_back(var('t', j));
  const Eigen::Index r = n + m - 2;
  s.x = IntMatrix::Zero(r, n - 1);
  s.y = IntMatrix::Zero(r, m - 1);
  for (int i = 1; i <= n - 1; ++i) {
    for (int a = 1; a <= i; ++a) s.x(a, i - 1) = 1;
    for (int b = 1; b <= m - 2; ++b) s.x(n + b - 1, i - 1) = i;
  }
  for (int j = 1; j <= m - 1; ++j) {
    for (int a = 0; a < n; ++a) s.y(a, j - 1) = 1;
    for (int b = 1; b <= m - 2; ++b) s.y(n + b - 1, j - 1) = (n - 1) + (b <= j - 1 ? 1 : 0);
  }
  return s;
}

std::vector<FnmFactor> build_fnm_factors(int n, int m) {
  const Substitution sub = build_substitution(n, m);
  const auto nx = static_cast<std::size_t>(n - 1);
  const auto ny = static_cast<std::size_t>(m - 1);
  std::vector<FnmFactor> out;
  // M = x^{ex} y^{ey}; indices 1-based, entries accumulate
  auto add = [&](char product, std::initializer_list<std::pair<int, int>> xs,
                 std::initializer_list<std::pair<int, int>> ys) {
    FnmFactor f;
    f.product = product;
    f.ex.assign(nx, 0);
    f.ey.assign(ny, 0);
    for (auto [i, e] : xs) f.ex[static_cast<std::size_t>(i - 1)] += e;
    for (auto [j, e] : ys) f.ey[static_cast<std::size_t>(j - 1)] += e;
    f.label = laurent_label(f.ex, f.ey);
    f.column = sub.apply(f.ex, f.ey);
    if (f.column.minCoeff() < 0 || f.column.maxCoeff() <= 0)
      throw Error(ErrorCode::InvalidMatrix, "factor " + f.label + " maps outside the cone");
    out.push_back(std::move(f));
  };

  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j) add('A', {{i, -1}}, {{j, 1}});
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j) add('B', {{i, 1}}, {{j, 1}});
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j) {
      add('C', {}, {{j, 1}});
      add('C', {{i, 1}}, {});
    }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j) {
      for (int k = 1; k < n; ++k)
        if (k != i) add('D', {{i, 1}, {k, -1}}, {{j, 1}});
      for (int k = 1; k < m; ++k)
        if (k != j) add('D', {{i, 1}}, {{j, 1}, {k, -1}});
    }
  for (int i = 1; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int j = 1; j < m; ++j)
        for (int l = 1; l < m; ++l)
          if (j != l) add('E', {{k, 1}, {i, -1}}, {{l, 1}, {j, -1}});
  for (int j = 1; j < m; ++j)
    for (int i = 1; i < n; ++i)
      for (int k = i + 1; k < n; ++k) add('F', {{k, 1}, {i, -1}}, {});
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < m; ++j)
      for (int l = j + 1; l < m; ++l) add('F', {}, {{l, 1}, {j, -1}});
  return out;
}

FnmMatrix build_fnm_matrix(int n, int m) {
  std::vector<FnmFactor> factors = build_fnm_factors(n, m);
  std::vector<std::size_t> order(factors.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    const IntVector& c = factors[i].column;
    return std::make_pair(std::vector<std::int64_t>(c.data(), c.data() + c.size()), factors[i].label);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  FnmMatrix out;
  out.matrix.rows = build_substitution(n, m).rows;
  out.matrix.columns.resize(n + m - 2, static_cast<Eigen::Index>(factors.size()));
  for (std::size_t c = 0; c < order.size(); ++c) {
    out.matrix.columns.col(static_cast<Eigen::Index>(c)) = factors[order[c]].column;
    out.column_labels.push_back(std::string(1, factors[order[c]].product) + ":" +
                                factors[order[c]].label);
  }
  validate_vp_matrix(out.matrix);
  return out;
}

std::int64_t degree_bound(int n, int m) {
  require_dims(n, m);
  const std::int64_t N = n, M = m;
  return (N * N * M * M - N * N - M * M - N * M - N - M) / 2 + 2;
}

VPMatrix face_restrict(const VPMatrix& a, const std::set<int>& zero_rows) {
  for (int r : zero_rows) {
    if (r < 0 || r >= a.row_count())
      throw Error(ErrorCode::IndexOutOfRange, "row index " + std::to_string(r));
  }
  if (static_cast<Eigen::Index>(zero_rows.size()) == a.row_count())
    throw Error(ErrorCode::InvalidArgument, "cannot zero every row");
  std::vector<Eigen::Index> keep_rows, keep_cols;
  for (Eigen::Index r = 0; r < a.row_count(); ++r)
    if (!zero_rows.count(static_cast<int>(r))) keep_rows.push_back(r);
  for (Eigen::Index c = 0; c < a.col_count(); ++c) {
    bool ok = true;
    for (int r : zero_rows) ok = ok && a.columns(r, c) == 0;
    if (ok) keep_cols.push_back(c);
  }
  VPMatrix out;
  for (Eigen::Index r : keep_rows) out.rows.push_back(a.rows[static_cast<std::size_t>(r)]);
  out.columns = a.columns(keep_rows, keep_cols);
  validate_vp_matrix(out);
  return out;
}

IntVector AtomicShift::evaluate(const KroneckerTriple& t) const {
  return mu_coef * parts_vector(t.mu, mu_coef.cols()) + nu_coef * parts_vector(t.nu, nu_coef.cols()) -
         lam_coef * parts_vector(t.lam, lam_coef.cols());
}

AtomicShift atomic_shift(int n, int m) {
  AtomicShift s;
  s.n = n;
  s.m = m;
  if (n == 2 && m == 2) {
    s.mu_coef = table({{0, 0}, {0, 1}});
    s.nu_coef = table({{0, 1}, {0, 1}});
    s.lam_coef = table({{0, 0, 1, 1}, {0, 1, 1, 2}});
  } else if (n == 2 && m == 3) {
    s.mu_coef = table({{0, 0}, {0, 1}, {0, 1}});
    s.nu_coef = table({{0, 1, 1}, {0, 1, 1}, {0, 1, 2}});
    s.lam_coef = table({{0, 0, 1, 1, 1, 1}, {0, 1, 1, 1, 2, 2}, {0, 1, 1, 2, 2, 3}});
  } else if (n == 3 && m == 3) {
    s.mu_coef = table({{0, 0, 0}, {0, 1, 1}, {0, 0, 1}, {0, 1, 2}});
    s.nu_coef = table({{0, 1, 1}, {0, 1, 1}, {0, 1, 1}, {0, 2, 3}});
    s.lam_coef = table({{0, 0, 0, 1, 1, 1, 1, 1, 1},
                        {0, 1, 1, 1, 1, 2, 2, 2, 2},
                        {0, 0, 1, 1, 1, 1, 1, 2, 2},
                        {0, 1, 2, 2, 3, 3, 4, 4, 5}});
  } else {
    throw Error(ErrorCode::UnsupportedDimension,
                "atomic shift available for (2,2), (2,3), (3,3); got (" + std::to_string(n) + "," +
                    std::to_string(m) + ")");
  }
  s.rows = build_substitution(n, m).rows;
  return s;
}

BigInt atomic_nm(int n, int m, const KroneckerTriple& t) {
  const AtomicShift shift = atomic_shift(n, m);
  const KroneckerTriple v = validate_triple(
      t.mu, t.nu, t.lam,
      LengthBounds{static_cast<std::size_t>(n), static_cast<std::size_t>(m),
                   static_cast<std::size_t>(n * m)});
  const IntVector b = shift.evaluate(v);
  if (b.minCoeff() < 0) return 0;
  thread_local std::map<std::pair<int, int>, VPCounter> counters;
  auto it = counters.find({n, m});
  if (it == counters.end())
    it = counters.emplace(std::make_pair(n, m), VPCounter(build_fnm_matrix(n, m).matrix)).first;
  return it->second.count(b);
}

}  // namespace kronvp
