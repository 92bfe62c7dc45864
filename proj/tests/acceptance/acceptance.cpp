// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "kronvp/character_oracle.hpp"
#include "kronvp/fnm.hpp"
#include "kronvp/holes.hpp"
#include "kronvp/kron224.hpp"
#include "kronvp/linalg.hpp"
#include "kronvp/lr_resultant.hpp"
#include "kronvp/quasi_fit.hpp"
#include "kronvp/vecpart.hpp"
#include "support/oracles.hpp"
#include "support/reference_matrices.hpp"

using namespace kronvp;
namespace kt = kronvp::testing;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <typename A, typename B>
void require_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    throw Failure{os.str()};
  }
}

std::string str(const KroneckerTriple& t) {
  return "mu=" + t.mu.to_string() + " nu=" + t.nu.to_string() + " lam=" + t.lam.to_string();
}

// Every (2,2,4)-bounded triple of weight w, both orders of (mu, nu).
std::vector<KroneckerTriple> bounded_triples(Part w) {
  std::vector<KroneckerTriple> out;
  for (const Partition& lam : kt::partitions_upto_len(w, 4))
    for (Part mu2 = 0; 2 * mu2 <= w; ++mu2)
      for (Part nu2 = 0; 2 * nu2 <= w; ++nu2)
        out.push_back(validate_triple(Partition{w - mu2, mu2}, Partition{w - nu2, nu2}, lam));
  return out;
}

KroneckerTriple random_triple(std::mt19937_64& rng, Part max_part) {
  std::vector<Part> lam(4);
  for (auto& x : lam) x = static_cast<Part>(rng() % static_cast<std::uint64_t>(max_part + 1));
  std::sort(lam.begin(), lam.end(), std::greater<>());
  const Part w = lam[0] + lam[1] + lam[2] + lam[3];
  const Part mu2 = static_cast<Part>(rng() % static_cast<std::uint64_t>(w / 2 + 1));
  const Part nu2 = static_cast<Part>(rng() % static_cast<std::uint64_t>(w / 2 + 1));
  return validate_triple(Partition{w - mu2, mu2}, Partition{w - nu2, nu2}, Partition(lam));
}

constexpr Part kSweepWeight = 16;
constexpr int kRandomTriples = 10000;
constexpr Part kRandomMaxPart = 200;
constexpr std::uint64_t kSeed = 20240521;

std::vector<kt::Vec> columns_of(const VPMatrix& a) {
  std::vector<kt::Vec> out;
  for (Eigen::Index c = 0; c < a.col_count(); ++c) {
    kt::Vec v;
    for (Eigen::Index r = 0; r < a.row_count(); ++r) v.push_back(a.columns(r, c));
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string golden_values() {
  const std::pair<std::array<std::int64_t, 2>, int> ps[] = {{{7, 11}, 32}, {{7, 7}, 20}, {{7, 5}, 12}, {{7, 1}, 2},
                                                           {{3, 11}, 10}, {{3, 3}, 6},  {{3, 1}, 2}};
  for (const auto& [arg, want] : ps)
    require_eq(ps22(arg[0], arg[1]), want, "ps22(" + std::to_string(arg[0]) + "," + std::to_string(arg[1]) + ")");
  require_eq(kron224(Partition{12, 12}, Partition{12, 12}, Partition{12, 7, 4, 1}), 0, "kron224 Ex7terms");
  require_eq(atomic224(Partition{12, 12}, Partition{12, 12}, Partition{12, 7, 4, 1}), 32, "atomic224 Ex7terms");
  require_eq(kron224(Partition{9, 7}, Partition{9, 7}, Partition{6, 5, 4, 1}), 2, "kron224 (9,7),(9,7),(6,5,4,1)");
  for (Part k = 1; k <= 50; ++k)
    require_eq(kron224(Partition{k, k}, Partition{k, k}, Partition{k, k}), k % 2 == 0 ? 1 : 0,
               "kron224 (k,k)^3 at k=" + std::to_string(k));
  for (Part k = 1; k <= 30; ++k)
    require_eq(atomic224(Partition{7 * k, 4 * k}, Partition{8 * k, 3 * k}, Partition{6 * k, 3 * k, 2 * k}),
               (k + 1) * (k + 2) / 2, "atomic224 simplex dilation at k=" + std::to_string(k));
  return "7 ps22 values, 3 known triples, 50 + 30 dilations";
}

std::string baldoni_vergne() {
  const KroneckerTriple t = validate_triple(Partition{110, 90}, Partition{120, 80}, Partition{132, 38, 19, 11});
  const auto seq = dilate_sequence(t, 24, DilationMethod::Kron224);
  const Quasipolynomial q = fit_quasipolynomial(seq, 4, 2);
  require_eq(q.period, 2, "period");
  // 52k^2 + (25/2)k + 3/4 + (-1)^k/4, residue 0 then residue 1
  const std::vector<std::vector<Rational>> want{{Rational(1), Rational(25, 2), Rational(52)},
                                                {Rational(1, 2), Rational(25, 2), Rational(52)}};
  require(q.constituents == want, "constituents differ from 52k^2+(25/2)k+3/4+(-1)^k/4");
  for (std::int64_t k = 1; k <= 24; ++k) {
    const Rational closed = Rational(52 * k * k) + Rational(25 * k, 2) + Rational(3, 4) + Rational(k % 2 ? -1 : 1, 4);
    require_eq(Rational(seq[static_cast<std::size_t>(k - 1)]), closed, "sequence at k=" + std::to_string(k));
  }
  return "period 2, 24 terms, f(1)=" + seq[0].str();
}

std::string oracle_equivalence() {
  std::size_t cases = 0;
  for (Part w = 0; w <= kSweepWeight; ++w) {
    std::map<std::vector<Part>, SchurExpansion> schur;
    for (const KroneckerTriple& t : bounded_triples(w)) {
      const BigInt g = kron224(t);
      require_eq(g, kron_oracle_char(t), "character oracle at " + str(t));
      auto it = schur.find(t.lam.trimmed().parts());
      if (it == schur.end()) it = schur.emplace(t.lam.trimmed().parts(), kron_oracle_schur(t.lam, 2, 2)).first;
      const auto e = it->second.find({t.mu.trimmed(), t.nu.trimmed()});
      require_eq(g, e == it->second.end() ? BigInt(0) : e->second, "Schur oracle at " + str(t));
      ++cases;
    }
  }
  return std::to_string(cases) + " triples of weight <= 16";
}

std::string upper_bound() {
  std::size_t cases = 0;
  for (Part w = 0; w <= kSweepWeight; ++w)
    for (const KroneckerTriple& t : bounded_triples(w)) {
      require(atomic224(t) >= kron224(t), "atomic < kronecker at " + str(t));
      ++cases;
    }
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < kRandomTriples; ++i) {
    const KroneckerTriple t = random_triple(rng, kRandomMaxPart);
    require(atomic224(t) >= kron224(t), "atomic < kronecker at " + str(t));
  }
  return std::to_string(cases) + " exhaustive + " + std::to_string(kRandomTriples) + " random";
}

std::string vanishing() {
  std::size_t cases = 0, vanishing_cases = 0;
  auto check = [&](const KroneckerTriple& t) {
    const KroneckerTriple c = canonical_sort(t);
    const std::int64_t l1 = c.lam.part(1), l2 = c.lam.part(2), l3 = c.lam.part(3), l4 = c.lam.part(4);
    const std::int64_t mu2 = c.mu.part(2), nu2 = c.nu.part(2);
    // inequalities recomputed here rather than taken from bravyi_check
    const bool first = l2 + l3 + 2 * l4 <= mu2 + nu2;
    const bool second = l3 + l4 <= nu2;
    const bool third = std::abs(mu2 - nu2) <= std::min(l1 - l3, l2 - l4);
    const BravyiReport r = bravyi_check(c);
    require(r.first == first && r.second == second && r.third == third, "flag mismatch at " + str(t));
    const BigInt g = kron224(t);
    if (!first || !second) {
      require_eq(g, 0, "nonzero outside first/second inequality at " + str(t));
      ++vanishing_cases;
    }
    if (g > 0) require(first && second && third, "positive outside Bravyi cone at " + str(t));
    ++cases;
  };
  for (Part w = 0; w <= kSweepWeight; ++w)
    for (const KroneckerTriple& t : bounded_triples(w)) check(t);
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < kRandomTriples; ++i) check(random_triple(rng, kRandomMaxPart));
  return std::to_string(cases) + " triples, " + std::to_string(vanishing_cases) + " forced zeros";
}

std::string matrix_fidelity() {
  const VPMatrix a23 = build_fnm_matrix(2, 3).matrix, a33 = build_fnm_matrix(3, 3).matrix;
  require(a23.row_count() == 3 && a23.col_count() == 11 && a23.columns.maxCoeff() == 3, "A_{2,3} shape");
  require(a33.row_count() == 4 && a33.col_count() == 30 && a33.columns.maxCoeff() == 5, "A_{3,3} shape");
  require(kt::sorted_columns(columns_of(a23)) == kt::sorted_columns(kt::columns_of(kt::kA23Rows)),
          "A_{2,3} differs from reference matrix");
  require(kt::sorted_columns(columns_of(a33)) == kt::sorted_columns(kt::columns_of(kt::kA33Rows)),
          "A_{3,3} differs from reference matrix");
  for (int n = 2; n <= 4; ++n)
    for (int m = n; m <= 4; ++m) {
      const VPMatrix a = build_fnm_matrix(n, m).matrix;
      const std::string at = " at (" + std::to_string(n) + "," + std::to_string(m) + ")";
      const std::int64_t nm = n * m;
      require_eq(a.row_count(), n + m - 2, "rows" + at);
      require_eq(a.col_count(), nm * (nm - 1) / 2 - n * (n - 1) / 2 - m * (m - 1) / 2, "cols" + at);
      require_eq(a.columns.minCoeff(), 0, "min entry" + at);
      // the 2n-1 bound is attained once t-rows exist; (2,2) has max entry 2
      require_eq(a.columns.maxCoeff(), m >= 3 ? 2 * n - 1 : 2, "max entry" + at);
      const auto cols = columns_of(a);
      for (Eigen::Index r = 0; r < a.row_count(); ++r) {
        kt::Vec e(static_cast<std::size_t>(a.row_count()), 0);
        e[static_cast<std::size_t>(r)] = 1;
        require(std::find(cols.begin(), cols.end(), e) != cols.end(), "missing basis vector" + at);
      }
      const Eigen::Index rank = exact_rank(a.columns);
      require_eq(rank, a.row_count(), "rank" + at);
      require_eq(degree_bound(n, m), a.col_count() - rank, "degree bound vs cols - rank" + at);
    }
  require(degree_bound(2, 2) == 2 && degree_bound(2, 3) == 8 && degree_bound(3, 3) == 26, "degree bounds");
  return "A_{2,3}, A_{3,3} match; stats for 6 (n,m); d = 2, 8, 26";
}

std::string face_restrictions() {
  const VPMatrix a23 = build_fnm_matrix(2, 3).matrix;
  const VPMatrix f3 = face_restrict(a23, {2}), f2 = face_restrict(a23, {1});
  for (std::int64_t p = 0; p <= 20; ++p)
    for (std::int64_t q = 0; q <= 20; ++q) {
      require_eq(vp_count(f3, std::vector<std::int64_t>{p, q}), 1, "A_{2,3} n3=0");
      require_eq(vp_count(f2, std::vector<std::int64_t>{p, q}), 1 + std::min(p, q), "A_{2,3} n2=0");
      require_eq(kt::box_dp_count(kt::columns_of(kt::kA23Rows), {p, 0, q}), 1 + std::min(p, q),
                 "reference A_{2,3} n2=0");
    }
  VPCounter f4(face_restrict(build_fnm_matrix(3, 3).matrix, {3}));
  for (std::int64_t p = 0; p <= 10; ++p)
    for (std::int64_t q = 0; q <= 10; ++q)
      for (std::int64_t r = 0; r <= 10; ++r)
        require_eq(f4.count(std::vector<std::int64_t>{p, q, r}), 1, "A_{3,3} n4=0");
  return "441 + 441 + 1331 points";
}

std::string reduced_coefficients() {
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = 0; b <= 12; ++b)
      for (std::int64_t c = 0; c <= 12; ++c) {
        std::array<std::int64_t, 3> s{a, b, c};
        std::sort(s.begin(), s.end(), std::greater<>());
        const std::int64_t l = s[1] + s[2] - s[0];
        const BigInt formula = l >= 0 ? BigInt(l / 2 + 1) : BigInt(0);
        const std::string at = " at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        require_eq(reduced_kron_2row(a, b, c), formula, "closed form" + at);
        // lam1 = mu2 + nu2, raised only as far as needed for lam, mu, nu to be partitions
        const Part l1 = std::max({b + c, a, 2 * b - a, 2 * c - a}), w = l1 + a;
        require_eq(kron224(Partition{w - b, b}, Partition{w - c, c}, Partition{l1, a}), formula, "kron224" + at);
      }
  return "2197 argument triples";
}

std::string stable_triples() {
  std::size_t cases = 0;
  for (std::int64_t u = 0; u <= 5; ++u)
    for (std::int64_t t = 0; t <= u; ++t)
      for (std::int64_t s = 0; s <= t; ++s)
        for (std::int64_t k = 1; k <= 10; ++k) {
          const auto [g, at] = stable_triple_kron(u, t, s, k);
          require(g == 1 && at == 1, "stable triple (" + std::to_string(u) + "," + std::to_string(t) + "," +
                                         std::to_string(s) + ") k=" + std::to_string(k));
          ++cases;
        }
  return std::to_string(cases) + " dilates";
}

std::string lr_facts() {
  auto rows_of = [](const IntMatrix& a) {
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c) out[static_cast<std::size_t>(r)].push_back(a(r, c));
    return out;
  };
  require(rows_of(build_lr_matrix(2, 2).entries) == kt::kLR22Rows, "A^LR_{2,2} differs from reference matrix");
  require(rows_of(build_lr_matrix(2, 3).entries) == kt::kLR23Rows, "A^LR_{2,3} differs from reference matrix");
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      require(is_totally_unimodular(build_lr_matrix(n, m)),
              "not totally unimodular at (" + std::to_string(n) + "," + std::to_string(m) + ")");
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      const LRRankStats s = lr_rank_stats(n, m);
      require(s.rank == n + m - 1 && s.corank == (n - 1) * (m - 1),
              "rank/corank at (" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
  return "reference matrices, TU for n,m <= 3, rank/corank for n,m <= 4";
}

std::string ps22_monotonicity() {
  std::size_t checks = 0;
  for (std::int64_t n = 0; n <= 60; ++n) {
    const BigInt binom = (n + 2) * (n + 1) / 2;
    for (std::int64_t m = 0; m <= 60; ++m, ++checks)
      require(ps22(n, m) <= binom, "binomial bound at (" + std::to_string(n) + "," + std::to_string(m) + ")");
    for (std::int64_t m = 2 * n; m <= 120; ++m, ++checks)
      require_eq(ps22(n, m), binom, "binomial value at (" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  // m/2 < M/2 < n < m < M
  for (std::int64_t n = 0; n <= 80; ++n)
    for (std::int64_t m = n + 1; m <= 80; ++m)
      for (std::int64_t big = m + 1; big < 2 * n && big <= 80; ++big, ++checks)
        require(ps22(n, big) >= ps22(n, m), "region III monotone in m at n=" + std::to_string(n));
  for (std::int64_t k = 0; k <= 80; ++k)
    for (std::int64_t n = k; n + 1 + k <= 80; ++n, ++checks)
      require(ps22(n, n + k) <= ps22(n + 1, n + 1 + k), "diagonal monotone at k=" + std::to_string(k));
  return std::to_string(checks) + " inequalities";
}

std::string holes_grid_check() {
  const auto start = std::chrono::steady_clock::now();
  const HolesGrid g = holes_grid(24);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs < 5.0, "grid took " + std::to_string(secs) + " s");
  std::size_t holes = 0;
  for (const HolePoint& p : g.points) {
    const std::int64_t l1 = 24 - p.k, l2 = p.k, mu2 = p.i, nu2 = p.j;
    // two-part lam: the inequalities reduce to these
    const bool first = l2 <= mu2 + nu2, third = std::abs(mu2 - nu2) <= std::min(l1, l2);
    if (p.g != 0 || !first || !third) continue;
    ++holes;
    require_eq(p.k, 12, "hole off the lam1 = lam2 face at (" + std::to_string(p.i) + "," + std::to_string(p.j) + ")");
  }
  require(holes == bravyi_holes(g).size(), "hole count differs from bravyi_holes");
  return std::to_string(g.points.size()) + " points, " + std::to_string(holes) + " holes, all at k=12";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"golden values", golden_values},
      {"Baldoni-Vergne quasipolynomial", baldoni_vergne},
      {"oracle equivalence (weight <= 16)", oracle_equivalence},
      {"atomic upper bound", upper_bound},
      {"Bravyi vanishing", vanishing},
      {"matrix fidelity", matrix_fidelity},
      {"face restrictions", face_restrictions},
      {"reduced coefficients", reduced_coefficients},
      {"stable triples", stable_triples},
      {"LR resultant facts", lr_facts},
      {"p_S monotonicity", ps22_monotonicity},
      {"holes grid (weight 24)", holes_grid_check},
  };
  const std::map<std::string, double> budget{
      {"golden values", 1.0}, {"Baldoni-Vergne quasipolynomial", 10.0}, {"holes grid (weight 24)", 5.0}};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && budget.count(name) && secs >= budget.at(name)) {
      ok = false;
      detail = "over time budget: " + detail;
    }
    std::printf("%s  %-36s %8.3fs  %s\n", ok ? "PASS" : "FAIL", name.c_str(), secs, detail.c_str());
    if (!ok) ++failures;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
