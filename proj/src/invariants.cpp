#include "kronvp/invariants.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "kronvp/character_oracle.hpp"
#include "kronvp/error.hpp"
#include "kronvp/fnm.hpp"
#include "kronvp/holes.hpp"
#include "kronvp/kron224.hpp"
#include "kronvp/lr_resultant.hpp"
#include "kronvp/parallel.hpp"
#include "kronvp/quasi_fit.hpp"
#include "kronvp/vecpart.hpp"

namespace kronvp {

std::vector<KroneckerTriple> triples_224(Part w) {
  std::vector<KroneckerTriple> out;
  for (const Partition& lam : partitions_of(w, 4)) {
    for (Part mu2 = 0; 2 * mu2 <= w; ++mu2)
      for (Part nu2 = 0; nu2 <= mu2; ++nu2)
        out.push_back(validate_triple(Partition{w - mu2, mu2}, Partition{w - nu2, nu2}, lam));
  }
  return out;
}

namespace {

std::string describe(const KroneckerTriple& t) {
  return "mu=(" + t.mu.to_string() + ") nu=(" + t.nu.to_string() + ") lam=(" + t.lam.to_string() + ")";
}

// Accumulates a check; the first failure message is kept.
class Check {
 public:
  explicit Check(std::string name) : r_{std::move(name), true, 0, {}} {}

  void expect(bool ok, const std::function<std::string()>& what) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = what();
    }
  }
  CheckResult result() const { return r_; }

 private:
  CheckResult r_;
};

struct TripleFacts {
  KroneckerTriple t;
  BigInt g, atomic, oracle_char, oracle_schur;
  BravyiReport bravyi;
  bool sufficient;
};

std::vector<TripleFacts> sweep_224(Part max_weight, int threads) {
  std::vector<TripleFacts> facts;
  for (Part w = 0; w <= max_weight; ++w) {
    const std::vector<Partition> lams = partitions_of(w, 4);
    std::vector<std::vector<TripleFacts>> per_lam(lams.size());
    parallel_for(lams.size(), threads, [&](std::size_t li) {
      const SchurExpansion ex = kron_oracle_schur(lams[li], 2, 2, std::max<Part>(w, 20));
      for (Part mu2 = 0; 2 * mu2 <= w; ++mu2) {
        for (Part nu2 = 0; nu2 <= mu2; ++nu2) {
          TripleFacts f;
          f.t = validate_triple(Partition{w - mu2, mu2}, Partition{w - nu2, nu2}, lams[li]);
          f.g = kron224(f.t);
          f.atomic = atomic224(f.t);
          f.oracle_char = kron_oracle_char(f.t, std::max<Part>(w, 30));
          auto it = ex.find({f.t.mu.trimmed(), f.t.nu.trimmed()});
          f.oracle_schur = it == ex.end() ? BigInt(0) : it->second;
          f.bravyi = bravyi_check(f.t);
          f.sufficient = atomic_is_kron_sufficient(f.t);
          per_lam[li].push_back(std::move(f));
        }
      }
    });
    for (auto& v : per_lam)
      for (auto& f : v) facts.push_back(std::move(f));
  }
  return facts;
}

KroneckerTriple random_triple(std::mt19937_64& rng, Part max_part) {
  std::uniform_int_distribution<Part> part(0, max_part);
  std::vector<Part> lam{part(rng), part(rng), part(rng), part(rng)};
  std::sort(lam.begin(), lam.end(), std::greater<>());
  const Part w = lam[0] + lam[1] + lam[2] + lam[3];
  std::uniform_int_distribution<Part> second(0, w / 2);
  Part mu2 = second(rng), nu2 = second(rng);
  if (mu2 < nu2) std::swap(mu2, nu2);
  return validate_triple(Partition{w - mu2, mu2}, Partition{w - nu2, nu2}, Partition(lam));
}

}  // namespace

std::vector<CheckResult> run_invariants(const VerifyOptions& opts,
                                        const std::function<void(const CheckResult&)>& progress) {
  std::vector<CheckResult> results;
  auto done = [&](const Check& c) {
    results.push_back(c.result());
    if (progress) progress(results.back());
  };

  {
    Check c("ps22 closed form equals enumeration over A22, 0 <= n,m <= 40");
    VPCounter counter(a22());
    for (std::int64_t n = 0; n <= 40; ++n)
      for (std::int64_t m = 0; m <= 40; ++m)
        c.expect(ps22(n, m) == counter.count(std::vector<std::int64_t>{n, m}),
                 [&] { return "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")"; });
    done(c);
  }
  {
    Check c("chamber formulas agree on m=n and m=2n, 0 <= n <= 100");
    for (std::int64_t n = 0; n <= 100; ++n) {
      c.expect(chamber_formula(Region::I).evaluate(n, n) == chamber_formula(Region::III).evaluate(n, n),
               [&] { return "m=n, n=" + std::to_string(n); });
      c.expect(chamber_formula(Region::II).evaluate(n, 2 * n) ==
                   chamber_formula(Region::III).evaluate(n, 2 * n),
               [&] { return "m=2n, n=" + std::to_string(n); });
    }
    done(c);
  }
  {
    Check c("ps22 bounded by C(n+2,2), attained for m >= 2n, 0 <= n,m <= 60");
    for (std::int64_t n = 0; n <= 60; ++n) {
      const BigInt binom = BigInt((n + 1) * (n + 2) / 2);
      for (std::int64_t m = 0; m <= 60; ++m) {
        c.expect(ps22(n, m) <= binom, [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
        if (m >= 2 * n)
          c.expect(ps22(n, m) == binom, [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
      }
    }
    done(c);
  }
  {
    Check c("ps22(n,M) >= ps22(n,m) for m/2 < M/2 < n < m < M <= 80");
    for (std::int64_t n = 0; n <= 80; ++n)
      for (std::int64_t m = n + 1; m <= 80; ++m)
        for (std::int64_t M = m + 1; M <= 80 && M < 2 * n; ++M)
          c.expect(ps22(n, M) >= ps22(n, m), [&] {
            return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " M=" + std::to_string(M);
          });
    done(c);
  }
  {
    Check c("ps22(n, n+k) weakly increasing in n for 0 <= k <= n, n+k <= 80");
    for (std::int64_t k = 0; k <= 80; ++k)
      for (std::int64_t n = k; n + 1 + k <= 80; ++n)
        c.expect(ps22(n, n + k) <= ps22(n + 1, n + 1 + k),
                 [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
    done(c);
  }
  {
    Check c("ps22 weakly increasing in each argument, 0..80");
    for (std::int64_t n = 0; n <= 80; ++n)
      for (std::int64_t m = 0; m <= 80; ++m) {
        c.expect(ps22(n, m) <= ps22(n + 1, m), [&] { return "n-step at " + std::to_string(n) + "," + std::to_string(m); });
        c.expect(ps22(n, m) <= ps22(n, m + 1), [&] { return "m-step at " + std::to_string(n) + "," + std::to_string(m); });
      }
    done(c);
  }
  {
    Check c("one-row parts {1,1,2} and {1,1,1}, n <= 60");
    VPCounter s112(make_vp_matrix({"s"}, {{1}, {1}, {2}}));
    VPCounter s111(make_vp_matrix({"s"}, {{1}, {1}, {1}}));
    for (std::int64_t n = 0; n <= 60; ++n) {
      const Rational q = Rational(n * n, 4) + n + (n % 2 == 0 ? Rational(1) : Rational(3, 4));
      c.expect(Rational(s112.count(std::vector<std::int64_t>{n})) == q, [&] { return "{1,1,2} n=" + std::to_string(n); });
      c.expect(s111.count(std::vector<std::int64_t>{n}) == BigInt((n + 1) * (n + 2) / 2),
               [&] { return "{1,1,1} n=" + std::to_string(n); });
    }
    done(c);
  }

  const std::vector<TripleFacts> facts = sweep_224(opts.oracle_weight, opts.threads);
  const std::string range = "weight <= " + std::to_string(opts.oracle_weight);
  {
    Check c("kron224 = character oracle = Schur oracle, " + range);
    for (const auto& f : facts)
      c.expect(f.g == f.oracle_char && f.g == f.oracle_schur, [&] {
        return describe(f.t) + " kron224=" + f.g.str() + " char=" + f.oracle_char.str() +
               " schur=" + f.oracle_schur.str();
      });
    done(c);
  }
  {
    Check c("atomic224 >= kron224, " + range);
    for (const auto& f : facts) c.expect(f.atomic >= f.g, [&] { return describe(f.t); });
    done(c);
  }
  {
    Check c("first or second Bravyi failure implies zero; nonzero implies all three, " + range);
    for (const auto& f : facts) {
      if (!f.bravyi.first || !f.bravyi.second) c.expect(f.g == 0, [&] { return describe(f.t); });
      if (f.g > 0) c.expect(f.bravyi.all(), [&] { return describe(f.t); });
    }
    done(c);
  }
  {
    Check c("sufficient condition implies atomic224 = kron224, " + range);
    for (const auto& f : facts)
      if (f.sufficient) c.expect(f.atomic == f.g, [&] { return describe(f.t); });
    done(c);
  }
  {
    Check c("atomic224 = atomic_nm(2,2), " + range);
    for (const auto& f : facts) c.expect(f.atomic == atomic_nm(2, 2, f.t), [&] { return describe(f.t); });
    done(c);
  }
  {
    Check c("random triples, parts <= " + std::to_string(opts.random_max_part) +
            ": atomic >= kron and Bravyi vanishing");
    std::mt19937_64 rng(opts.seed);
    for (std::size_t i = 0; i < opts.random_triples; ++i) {
      const KroneckerTriple t = random_triple(rng, opts.random_max_part);
      const BigInt g = kron224(t);
      const BravyiReport b = bravyi_check(t);
      c.expect(atomic224(t) >= g, [&] { return "atomic < kron at " + describe(t); });
      c.expect(g >= 0, [&] { return "negative at " + describe(t); });
      if (!b.first || !b.second) c.expect(g == 0, [&] { return "vanishing at " + describe(t); });
      if (g > 0) c.expect(b.all(), [&] { return "Bravyi cone at " + describe(t); });
      if (atomic_is_kron_sufficient(t)) c.expect(atomic224(t) == g, [&] { return "sufficiency at " + describe(t); });
    }
    done(c);
  }
  {
    Check c("two-row lam: kron224 constant in lam1 once lam1 >= mu2 + nu2, parts <= 12");
    for (std::int64_t mu2 = 0; mu2 <= 12; ++mu2)
      for (std::int64_t nu2 = 0; nu2 <= mu2; ++nu2)
        for (std::int64_t l2 = 0; l2 <= 12; ++l2) {
          BigInt first = -1;
          for (std::int64_t l1 = std::max({mu2 + nu2, l2, 2 * mu2 - l2}); l1 <= mu2 + nu2 + 12 + 2 * mu2; ++l1) {
            const std::int64_t w = l1 + l2;
            const BigInt g = kron224(Partition{w - mu2, mu2}, Partition{w - nu2, nu2}, Partition{l1, l2});
            if (first < 0) first = g;
            c.expect(g == first, [&] {
              return "mu2=" + std::to_string(mu2) + " nu2=" + std::to_string(nu2) + " lam=(" +
                     std::to_string(l1) + "," + std::to_string(l2) + ")";
            });
          }
        }
    done(c);
  }
  {
    Check c("reduced_kron_2row matches floor formula and stable kron224, arguments <= 12");
    for (std::int64_t a = 0; a <= 12; ++a)
      for (std::int64_t b = 0; b <= 12; ++b)
        for (std::int64_t d = 0; d <= 12; ++d) {
          const BigInt r = reduced_kron_2row(a, b, d);
          std::array<std::int64_t, 3> v{a, b, d};
          std::sort(v.begin(), v.end(), std::greater<>());
          const std::int64_t ell = v[1] + v[2] - v[0];
          const BigInt expect = ell >= 0 ? BigInt(ell / 2 + 1) : BigInt(0);
          const BigInt g = kron224(reduced_witness_triple(v[0], v[1], v[2]));
          c.expect(r == expect && r == g, [&] {
            return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + ")";
          });
        }
    done(c);
  }
  {
    Check c("stable triples give (1,1), u >= t >= s, u <= 5, k <= 10");
    for (std::int64_t u = 0; u <= 5; ++u)
      for (std::int64_t t = 0; t <= u; ++t)
        for (std::int64_t s = 0; s <= t; ++s)
          for (std::int64_t k = 1; k <= 10; ++k) {
            const auto [g, a] = stable_triple_kron(u, t, s, k);
            c.expect(g == 1 && a == 1, [&] {
              return "(u,t,s,k)=(" + std::to_string(u) + "," + std::to_string(t) + "," +
                     std::to_string(s) + "," + std::to_string(k) + ")";
            });
          }
    done(c);
  }
  {
    Check c("Littlewood-Richardson face: kron224 equals Pieri value, lam2 <= 12");
    for (std::int64_t l2 = 0; l2 <= 12; ++l2)
      for (std::int64_t l3 = 0; l3 <= l2; ++l3)
        for (std::int64_t mu2 = 0; mu2 <= l2 + l3; ++mu2)
          c.expect(lr_face_check(l2, l3, mu2, l2 + l3 - mu2), [&] {
            return "lam2=" + std::to_string(l2) + " lam3=" + std::to_string(l3) + " mu2=" + std::to_string(mu2);
          });
    done(c);
  }
  {
    Check c("F_{n,m} matrix statistics for 2 <= n <= m <= 4");
    for (int n = 2; n <= 4; ++n)
      for (int m = n; m <= 4; ++m) {
        const FnmMatrix f = build_fnm_matrix(n, m);
        const IntMatrix& a = f.matrix.columns;
        const auto choose2 = [](std::int64_t x) { return x * (x - 1) / 2; };
        bool basis = true;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
          bool found = false;
          for (Eigen::Index j = 0; j < a.cols() && !found; ++j)
            found = a(r, j) == 1 && a.col(j).sum() == 1;
          basis = basis && found;
        }
        const Eigen::Index rank = exact_rank(a);
        // without t rows (m = 2) the largest exponent is the 2 in x_{n-1} y_1
        const std::int64_t max_entry = m >= 3 ? 2 * n - 1 : 2;
        c.expect(a.rows() == n + m - 2 && a.cols() == choose2(n * m) - choose2(n) - choose2(m) &&
                     a.maxCoeff() == max_entry && basis && rank == n + m - 2 &&
                     degree_bound(n, m) == a.cols() - rank,
                 [&] { return "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")"; });
      }
    done(c);
  }
  {
    Check c("face restrictions of A23 and A33");
    const VPMatrix a23 = build_fnm_matrix(2, 3).matrix;
    const VPMatrix a33 = build_fnm_matrix(3, 3).matrix;
    VPCounter no_t1(face_restrict(a23, {2})), no_s1(face_restrict(a23, {1})), no_t(face_restrict(a33, {3}));
    VPCounter full33(a33);
    for (std::int64_t p = 0; p <= 20; ++p)
      for (std::int64_t q = 0; q <= 20; ++q) {
        c.expect(no_t1.count(std::vector<std::int64_t>{p, q}) == 1, [&] { return "A23 n3=0"; });
        c.expect(no_s1.count(std::vector<std::int64_t>{p, q}) == 1 + std::min(p, q), [&] { return "A23 n2=0"; });
      }
    for (std::int64_t p = 0; p <= 10; ++p)
      for (std::int64_t q = 0; q <= 10; ++q)
        for (std::int64_t r = 0; r <= 10; ++r)
          c.expect(no_t.count(std::vector<std::int64_t>{p, q, r}) == 1, [&] { return "A33 n4=0"; });
    for (std::int64_t k = 0; k <= 30; ++k)
      c.expect(full33.count(std::vector<std::int64_t>{0, 0, 0, k}) == k + 1, [&] { return "A33 n4 axis"; });
    done(c);
  }
  {
    Check c("Littlewood-Richardson resultant rank (n,m <= 4) and unimodularity (n,m <= 3)");
    for (int n = 1; n <= 4; ++n)
      for (int m = 1; m <= 4; ++m) {
        const LRRankStats s = lr_rank_stats(n, m);
        c.expect(s.rank == n + m - 1 && s.corank == (n - 1) * (m - 1),
                 [&] { return "rank at (" + std::to_string(n) + "," + std::to_string(m) + ")"; });
        if (n <= 3 && m <= 3)
          c.expect(is_totally_unimodular(build_lr_matrix(n, m)),
                   [&] { return "TU at (" + std::to_string(n) + "," + std::to_string(m) + ")"; });
      }
    done(c);
  }
  {
    Check c("holes grid: zero entries inside the Bravyi cone lie on k = weight/2, weight <= " +
            std::to_string(opts.holes_weight));
    for (std::int64_t w = 0; w <= opts.holes_weight; ++w) {
      for (const HolePoint& p : bravyi_holes(holes_grid(w, opts.threads)))
        c.expect(2 * p.k == w || 2 * p.k + 1 == w, [&] {
          return "weight " + std::to_string(w) + " point (" + std::to_string(p.i) + "," +
                 std::to_string(p.j) + "," + std::to_string(p.k) + ")";
        });
    }
    done(c);
  }
  {
    Check c("dilation fit of lam=(132,38,19,11), mu=(110,90), nu=(120,80)");
    const KroneckerTriple t = validate_triple(Partition{110, 90}, Partition{120, 80}, Partition{132, 38, 19, 11});
    const std::vector<BigInt> seq = dilate_sequence(t, 24, DilationMethod::Kron224, opts.threads);
    const Quasipolynomial q = fit_quasipolynomial(seq, 4, 2);
    for (std::int64_t k = 1; k <= 24; ++k) {
      const Rational expect = 52 * Rational(k * k) + Rational(25, 2) * k + Rational(3, 4) +
                              Rational(k % 2 == 0 ? 1 : -1, 4);
      c.expect(q.period == 2 && eval_quasipolynomial(q, k) == expect, [&] { return "k=" + std::to_string(k); });
    }
    done(c);
  }
  return results;
}

}  // namespace kronvp
