#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "kronvp/numeric.hpp"
#include "kronvp/partition.hpp"

namespace kronvp {

struct SignedMonomial {
  int sign;        // +1 or -1
  std::int64_t b;  // exponent of y
  std::int64_t a;  // exponent of x
};

/// Exponents of P_lam: b = l3+l4, a0 = l2+l4, a1 = l2+l3+1, a2 = l1+l4+1,
/// a3 = l1+l3+2.
struct PLambdaExponents {
  std::int64_t b, a0, a1, a2, a3;
};

PLambdaExponents p_lambda_exponents(const Partition& lam);

/// The seven terms y^b (x^a0 - x^a1 - x^a2 + x^a3) + y^(a0+1) (-x^(b-1) + x^a1 + x^a2).
std::vector<SignedMonomial> p_lambda(const Partition& lam);

struct TermContribution {
  SignedMonomial term;
  bool gated;  // true when the term contributes
  std::array<std::int64_t, 2> ps22_args;
  BigInt value;  // sign * ps22(args) when gated, else 0
};

struct Kron224Result {
  BigInt g;
  std::vector<TermContribution> terms;
  KroneckerTriple canonical;
  bool normalized;  // canonical_sort permuted the input
};

/// Kronecker coefficient for lengths (2,2,4) by the gated seven-term sum.
/// A term (s, b_t, a_t) contributes s * ps22(nu2 - b_t, nu2 - b_t + mu2 - a_t)
/// when b_t <= nu2 and a_t + b_t <= mu2 + nu2. Inputs in any order are
/// normalized by canonical_sort.
Kron224Result kron224_terms(const KroneckerTriple& t);
BigInt kron224(const KroneckerTriple& t);
BigInt kron224(const Partition& mu, const Partition& nu, const Partition& lam);

/// ps22(nu2 - (l3+l4), mu2 + nu2 - (l2+l4) - (l3+l4)).
BigInt atomic224(const KroneckerTriple& t);
BigInt atomic224(const Partition& mu, const Partition& nu, const Partition& lam);

struct BravyiReport {
  bool first;   // l2 + l3 + 2 l4 <= mu2 + nu2
  bool second;  // l3 + l4 <= nu2
  bool third;   // |mu2 - nu2| <= min(l1 - l3, l2 - l4)

  bool all() const { return first && second && third; }
};

BravyiReport bravyi_check(const KroneckerTriple& t);

/// l3+l4 <= nu2 <= l2+l4 and (l3+l4)+(l2+l4) <= mu2+nu2 <= (l3+l4) + min(l2+l3, l1+l4).
bool atomic_is_kron_sufficient(const KroneckerTriple& t);

/// Reduced coefficient for one-part reduced partitions: with a >= b >= c the
/// sorted inputs and l = b + c - a, floor(l/2) + 1 when l >= 0, else 0.
BigInt reduced_kron_2row(std::int64_t lam2, std::int64_t mu2, std::int64_t nu2);

/// The triple with lam = (l1, lam2), mu = (w - mu2, mu2), nu = (w - nu2, nu2)
/// for the least l1 >= mu2 + nu2 making all three partitions valid.
KroneckerTriple reduced_witness_triple(std::int64_t lam2, std::int64_t mu2, std::int64_t nu2);

/// lam = k(u,t,s,s), mu = k(u+s,t+s), nu = k(u+t,2s).
KroneckerTriple stable_triple(std::int64_t u, std::int64_t t, std::int64_t s, std::int64_t k);

/// (kron224, atomic224) on the k-th dilate of the stable triple.
std::pair<BigInt, BigInt> stable_triple_kron(std::int64_t u, std::int64_t t, std::int64_t s,
                                             std::int64_t k);

struct LRFaceResult {
  BigInt kronecker;
  int pieri;  // 1 iff lam3 <= mu2 <= lam2 and lam3 <= nu2 <= lam2
  std::int64_t n;

  bool match() const { return kronecker == pieri; }
};

/// On the face lam4 = 0, lam2 + lam3 = mu2 + nu2, compares
/// kron224((N-mu2, mu2), (N-nu2, nu2), (N-lam2-lam3, lam2, lam3, 0)) with the
/// Pieri value. N <= 0 selects the default mu2 + nu2 + lam2 + lam3.
LRFaceResult lr_face_evaluate(std::int64_t lam2, std::int64_t lam3, std::int64_t mu2,
                              std::int64_t nu2, std::int64_t n = 0);
bool lr_face_check(std::int64_t lam2, std::int64_t lam3, std::int64_t mu2, std::int64_t nu2,
                   std::int64_t n = 0);

}  // namespace kronvp
