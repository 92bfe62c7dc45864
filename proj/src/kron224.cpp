#include "kronvp/kron224.hpp"

#include <algorithm>

#include "kronvp/error.hpp"
#include "kronvp/vecpart.hpp"

namespace kronvp {

namespace {

struct Parts {
  std::int64_t mu2, nu2, l1, l2, l3, l4;
};

Parts parts_of(const KroneckerTriple& c) {
  return {c.mu.part(2), c.nu.part(2), c.lam.part(1), c.lam.part(2), c.lam.part(3), c.lam.part(4)};
}

}  // namespace

PLambdaExponents p_lambda_exponents(const Partition& lam) {
  if (lam.length() > 4)
    throw Error(ErrorCode::LengthExceedsBound, "(" + lam.to_string() + ") has more than 4 parts");
  const std::int64_t l1 = lam.part(1), l2 = lam.part(2), l3 = lam.part(3), l4 = lam.part(4);
  return {l3 + l4, l2 + l4, l2 + l3 + 1, l1 + l4 + 1, l1 + l3 + 2};
}

std::vector<SignedMonomial> p_lambda(const Partition& lam) {
  const PLambdaExponents e = p_lambda_exponents(lam);
  return {
      {+1, e.b, e.a0},          {-1, e.b, e.a1},          {-1, e.b, e.a2},
      {+1, e.b, e.a3},          {-1, e.a0 + 1, e.b - 1},  {+1, e.a0 + 1, e.a1},
      {+1, e.a0 + 1, e.a2},
  };
}

Kron224Result kron224_terms(const KroneckerTriple& t) {
  Kron224Result out;
  out.canonical = canonical_sort(t);
  out.normalized = !(out.canonical.mu == t.mu && out.canonical.nu == t.nu &&
                     out.canonical.lam == t.lam);
  const Parts p = parts_of(out.canonical);
  out.g = 0;
  for (const SignedMonomial& term : p_lambda(out.canonical.lam)) {
    TermContribution c{term, false, {p.nu2 - term.b, p.nu2 - term.b + p.mu2 - term.a}, 0};
    c.gated = term.b <= p.nu2 && term.a + term.b <= p.mu2 + p.nu2;
    if (c.gated) {
      c.value = ps22(c.ps22_args[0], c.ps22_args[1]);
      if (term.sign < 0) c.value = -c.value;
      out.g += c.value;
    }
    out.terms.push_back(std::move(c));
  }
  return out;
}

BigInt kron224(const KroneckerTriple& t) { return kron224_terms(t).g; }

BigInt kron224(const Partition& mu, const Partition& nu, const Partition& lam) {
  return kron224(validate_triple(mu, nu, lam, LengthBounds{4, 4, 4}));
}

BigInt atomic224(const KroneckerTriple& t) {
  const Parts p = parts_of(canonical_sort(t));
  return ps22(p.nu2 - (p.l3 + p.l4), p.mu2 + p.nu2 - (p.l2 + p.l4) - (p.l3 + p.l4));
}

BigInt atomic224(const Partition& mu, const Partition& nu, const Partition& lam) {
  return atomic224(validate_triple(mu, nu, lam, LengthBounds{4, 4, 4}));
}

BravyiReport bravyi_check(const KroneckerTriple& t) {
  const Parts p = parts_of(canonical_sort(t));
  const std::int64_t diff = p.mu2 >= p.nu2 ? p.mu2 - p.nu2 : p.nu2 - p.mu2;
  return {p.l2 + p.l3 + 2 * p.l4 <= p.mu2 + p.nu2, p.l3 + p.l4 <= p.nu2,
          diff <= std::min(p.l1 - p.l3, p.l2 - p.l4)};
}

bool atomic_is_kron_sufficient(const KroneckerTriple& t) {
  const Parts p = parts_of(canonical_sort(t));
  const std::int64_t b = p.l3 + p.l4;
  const std::int64_t a0 = p.l2 + p.l4;
  const std::int64_t s = p.mu2 + p.nu2;
  return b <= p.nu2 && p.nu2 <= a0 && b + a0 <= s && s <= b + std::min(p.l2 + p.l3, p.l1 + p.l4);
}

BigInt reduced_kron_2row(std::int64_t lam2, std::int64_t mu2, std::int64_t nu2) {
  std::array<std::int64_t, 3> v{lam2, mu2, nu2};
  if (*std::min_element(v.begin(), v.end()) < 0)
    throw Error(ErrorCode::NegativePart, "reduced coefficient arguments must be nonnegative");
  std::sort(v.begin(), v.end(), std::greater<>());
  const std::int64_t ell = v[1] + v[2] - v[0];
  if (ell < 0) return 0;
  return ell / 2 + 1;
}

KroneckerTriple reduced_witness_triple(std::int64_t lam2, std::int64_t mu2, std::int64_t nu2) {
  // lam1 >= mu2 + nu2 puts the triple in the stable range; the other bounds
  // keep lam, mu and nu partitions when lam2 is not the largest argument
  const std::int64_t l1 = std::max({mu2 + nu2, lam2, 2 * mu2 - lam2, 2 * nu2 - lam2});
  const std::int64_t w = l1 + lam2;
  return validate_triple(Partition{w - mu2, mu2}, Partition{w - nu2, nu2}, Partition{l1, lam2});
}

KroneckerTriple stable_triple(std::int64_t u, std::int64_t t, std::int64_t s, std::int64_t k) {
  if (!(u >= t && t >= s && s >= 0))
    throw Error(ErrorCode::OrderingViolated, "need u >= t >= s >= 0");
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "dilation factor must be positive");
  return validate_triple(Partition{k * (u + s), k * (t + s)}, Partition{k * (u + t), k * 2 * s},
                         Partition{k * u, k * t, k * s, k * s});
}

std::pair<BigInt, BigInt> stable_triple_kron(std::int64_t u, std::int64_t t, std::int64_t s,
                                             std::int64_t k) {
  const KroneckerTriple tr = stable_triple(u, t, s, k);
  return {kron224(tr), atomic224(tr)};
}

LRFaceResult lr_face_evaluate(std::int64_t lam2, std::int64_t lam3, std::int64_t mu2,
                              std::int64_t nu2, std::int64_t n) {
  if (lam3 < 0 || mu2 < 0 || nu2 < 0)
    throw Error(ErrorCode::NegativePart, "face parameters must be nonnegative");
  if (lam2 < lam3 || lam2 + lam3 != mu2 + nu2)
    throw Error(ErrorCode::FaceConditionViolated, "need lam2 >= lam3 and lam2 + lam3 = mu2 + nu2");
  if (n <= 0) n = mu2 + nu2 + lam2 + lam3;
  if (n < 2 * mu2 || n < 2 * nu2 || n < 2 * lam2 + lam3)
    throw Error(ErrorCode::BoundTooSmall, "N = " + std::to_string(n) + " too small for the face triple");
  const KroneckerTriple t = validate_triple(Partition{n - mu2, mu2}, Partition{n - nu2, nu2},
                                            Partition{n - lam2 - lam3, lam2, lam3, 0});
  LRFaceResult r;
  r.kronecker = kron224(t);
  r.pieri = (lam3 <= mu2 && mu2 <= lam2 && lam3 <= nu2 && nu2 <= lam2) ? 1 : 0;
  r.n = n;
  return r;
}

bool lr_face_check(std::int64_t lam2, std::int64_t lam3, std::int64_t mu2, std::int64_t nu2,
                   std::int64_t n) {
  return lr_face_evaluate(lam2, lam3, mu2, nu2, n).match();
}

}  // namespace kronvp
