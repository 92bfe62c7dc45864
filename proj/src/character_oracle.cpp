#include "kronvp/character_oracle.hpp"

#include <algorithm>
#include <string>

#include "kronvp/error.hpp"

namespace kronvp {

namespace {

void partitions_rec(Part remaining, Part max_part, std::size_t max_len, std::vector<Part>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (cur.size() == max_len) return;
  for (Part p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len, cur, out);
    cur.pop_back();
  }
}

// Semistandard fillings of `shape` with letters 0..letters-1, visited
// row-major. `bump(letter, delta)` updates the caller's exponent vector and
// `leaf()` fires once per tableau.
template <typename Bump, typename Leaf>
void fill_tableaux(const std::vector<Part>& shape, int letters, Bump&& bump, Leaf&& leaf) {
  const std::size_t rows = shape.size();
  if (rows > static_cast<std::size_t>(letters)) return;
  std::vector<std::vector<int>> t(rows);
  for (std::size_t r = 0; r < rows; ++r) t[r].assign(static_cast<std::size_t>(shape[r]), 0);
  // column heights for the "room below" bound
  auto height = [&](std::size_t c) {
    std::size_t h = 0;
    while (h < rows && static_cast<std::size_t>(shape[h]) > c) ++h;
    return h;
  };
  std::vector<std::size_t> col_height(rows ? static_cast<std::size_t>(shape[0]) : 0);
  for (std::size_t c = 0; c < col_height.size(); ++c) col_height[c] = height(c);

  auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows) {
      leaf();
      return;
    }
    if (c == static_cast<std::size_t>(shape[r])) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 0;
    if (c > 0) lo = t[r][c - 1];
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    const int hi = letters - 1 - static_cast<int>(col_height[c] - r - 1);
    for (int v = lo; v <= hi; ++v) {
      t[r][c] = v;
      bump(v, 1);
      self(self, r, c + 1);
      bump(v, -1);
    }
  };
  rec(rec, 0, 0);
}

std::vector<Part> nonzero_parts(const Partition& p) { return p.trimmed().parts(); }

}  // namespace

std::vector<Partition> partitions_of(Part n) {
  return partitions_of(n, static_cast<std::size_t>(std::max<Part>(n, 0)));
}

std::vector<Partition> partitions_of(Part n, std::size_t max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.push_back(Partition(std::vector<Part>(max_len, 0)));
    return out;
  }
  std::vector<Part> cur;
  partitions_rec(n, n, max_len, cur, out);
  if (max_len < static_cast<std::size_t>(n)) {
    for (Partition& p : out) p = p.padded(max_len);
  }
  return out;
}

BigInt factorial(Part n) {
  BigInt f = 1;
  for (Part i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt centralizer_order(const Partition& rho) {
  std::map<Part, Part> mult;
  for (Part p : rho.parts())
    if (p > 0) ++mult[p];
  BigInt z = 1;
  for (const auto& [part, m] : mult) {
    for (Part i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return z;
}

std::vector<CycleClass> cycle_classes(Part n) {
  std::vector<CycleClass> out;
  for (Partition& rho : partitions_of(n)) {
    BigInt z = centralizer_order(rho);
    out.push_back({std::move(rho), std::move(z)});
  }
  return out;
}

CharacterTable::CharacterTable(Part n) : n_(n), classes_(cycle_classes(n)) {
  if (n > 33) throw Error(ErrorCode::WeightCapExceeded, "character table beyond n = 33");
  const BigInt nfact = factorial(n);
  for (const CycleClass& c : classes_) class_sizes_.push_back(nfact / c.z_rho);
}

std::int64_t CharacterTable::mn(std::vector<int>& beta, const std::vector<int>& rho,
                                std::size_t pos) {
  if (pos == rho.size()) return 1;
  std::vector<int> key(beta);
  key.push_back(-1);
  key.insert(key.end(), rho.begin() + static_cast<std::ptrdiff_t>(pos), rho.end());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int r = rho[pos];
  std::int64_t total = 0;
  // beta is ascending; moving bead b to b - r removes a border strip of size r
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0 || std::binary_search(beta.begin(), beta.end(), target)) continue;
    const auto lo = std::upper_bound(beta.begin(), beta.end(), target);
    const auto between = static_cast<std::ptrdiff_t>(i) - (lo - beta.begin());
    std::vector<int> next(beta);
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
    next.insert(std::upper_bound(next.begin(), next.end(), target), target);
    const std::int64_t v = mn(next, rho, pos + 1);
    total += (between % 2 == 0) ? v : -v;
  }
  memo_.emplace(std::move(key), total);
  return total;
}

std::int64_t CharacterTable::value(const Partition& lam, const Partition& rho) {
  if (lam.weight() != n_ || rho.weight() != n_)
    throw Error(ErrorCode::WeightMismatch, "character arguments must have weight " +
                                               std::to_string(n_));
  const std::vector<Part> parts = nonzero_parts(lam);
  const int len = static_cast<int>(parts.size());
  std::vector<int> beta;
  for (int i = len - 1; i >= 0; --i) beta.push_back(static_cast<int>(parts[i]) + len - 1 - i);
  std::vector<int> r;
  for (Part p : nonzero_parts(rho)) r.push_back(static_cast<int>(p));
  std::sort(r.begin(), r.end(), std::greater<>());
  return mn(beta, r, 0);
}

const std::vector<std::int64_t>& CharacterTable::row(const Partition& lam) {
  const std::vector<Part> key = nonzero_parts(lam);
  if (auto it = rows_.find(key); it != rows_.end()) return it->second;
  std::vector<std::int64_t> values;
  values.reserve(classes_.size());
  for (const CycleClass& c : classes_) values.push_back(value(lam, c.rho));
  return rows_.emplace(key, std::move(values)).first->second;
}

BigInt mn_character(const Partition& lam, const Partition& rho) {
  if (lam.weight() != rho.weight())
    throw Error(ErrorCode::WeightMismatch, "(" + lam.to_string() + ") vs (" + rho.to_string() + ")");
  CharacterTable table(lam.weight());
  return BigInt(table.value(lam, rho));
}

BigInt kron_oracle_char(const Partition& mu, const Partition& nu, const Partition& lam,
                        Part weight_cap) {
  const Part n = lam.weight();
  if (mu.weight() != n || nu.weight() != n)
    throw Error(ErrorCode::WeightMismatch, "oracle triple weights differ");
  if (n > weight_cap)
    throw Error(ErrorCode::WeightCapExceeded,
                "weight " + std::to_string(n) + " > cap " + std::to_string(weight_cap));
  thread_local std::map<Part, CharacterTable> tables;
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, CharacterTable(n)).first;
  CharacterTable& table = it->second;

  const auto& a = table.row(mu);
  const auto& b = table.row(nu);
  const auto& c = table.row(lam);
  BigInt sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0 || b[i] == 0 || c[i] == 0) continue;
    sum += BigInt(a[i]) * b[i] * c[i] * table.class_sizes()[i];
  }
  const BigInt nfact = factorial(n);
  if (sum % nfact != 0 || sum < 0)
    throw Error(ErrorCode::NonzeroResidual, "character sum " + sum.str() + " not a nonnegative "
                                            "multiple of " + nfact.str());
  return sum / nfact;
}

BigInt kron_oracle_char(const KroneckerTriple& t, Part weight_cap) {
  return kron_oracle_char(t.mu, t.nu, t.lam, weight_cap);
}

std::map<std::vector<int>, BigInt> schur_monomials(const Partition& shape, int vars) {
  std::map<std::vector<int>, BigInt> out;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  fill_tableaux(
      nonzero_parts(shape), vars, [&](int v, int d) { e[static_cast<std::size_t>(v)] += d; },
      [&] { out[e] += 1; });
  return out;
}

SchurExpansion kron_oracle_schur(const Partition& lam, int n, int m, Part weight_cap) {
  if (n < 1 || m < 1) throw Error(ErrorCode::BoundTooSmall, "alphabet sizes must be >= 1");
  if (lam.weight() > weight_cap)
    throw Error(ErrorCode::WeightCapExceeded,
                "weight " + std::to_string(lam.weight()) + " > cap " + std::to_string(weight_cap));
  if (lam.length() > static_cast<std::size_t>(n * m))
    throw Error(ErrorCode::LengthExceedsBound, "length of lam exceeds n*m");

  using Poly = std::map<std::vector<int>, BigInt>;
  const auto nn = static_cast<std::size_t>(n);
  Poly f;
  std::vector<int> e(nn + static_cast<std::size_t>(m), 0);
  // letter L stands for x_{L / m} y_{L % m}
  fill_tableaux(
      nonzero_parts(lam), n * m,
      [&](int v, int d) {
        e[static_cast<std::size_t>(v / m)] += d;
        e[nn + static_cast<std::size_t>(v % m)] += d;
      },
      [&] { f[e] += 1; });

  std::map<std::vector<Part>, Poly> x_cache, y_cache;
  auto cached = [](std::map<std::vector<Part>, Poly>& cache, const Partition& p, int vars) -> const Poly& {
    auto key = p.trimmed().parts();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, schur_monomials(p, vars)).first;
    return it->second;
  };

  SchurExpansion out;
  while (!f.empty()) {
    // std::map orders exponent vectors lexicographically; the last key is the
    // greatest monomial with x-exponents compared first.
    auto lead = std::prev(f.end());
    const std::vector<int> exps = lead->first;
    const BigInt c = lead->second;
    std::vector<Part> xs(exps.begin(), exps.begin() + n), ys(exps.begin() + n, exps.end());
    if (c <= 0 || !std::is_sorted(xs.rbegin(), xs.rend()) || !std::is_sorted(ys.rbegin(), ys.rend()))
      throw Error(ErrorCode::NonzeroResidual, "leading residual term is not a dominant monomial");
    const Partition mu(xs), nu(ys);
    out.emplace(std::make_pair(mu.trimmed(), nu.trimmed()), c);
    const Poly& sx = cached(x_cache, mu, n);
    const Poly& sy = cached(y_cache, nu, m);
    std::vector<int> key(e.size());
    for (const auto& [ex, cx] : sx) {
      std::copy(ex.begin(), ex.end(), key.begin());
      for (const auto& [ey, cy] : sy) {
        std::copy(ey.begin(), ey.end(), key.begin() + n);
        auto it = f.find(key);
        const BigInt delta = c * cx * cy;
        if (it == f.end()) throw Error(ErrorCode::NonzeroResidual, "peeling produced a negative term");
        it->second -= delta;
        if (it->second < 0) throw Error(ErrorCode::NonzeroResidual, "peeling produced a negative term");
        if (it->second == 0) f.erase(it);
      }
    }
  }
  return out;
}

}  // namespace kronvp
