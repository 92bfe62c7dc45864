#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kronvp/numeric.hpp"
#include "kronvp/partition.hpp"

namespace kronvp {

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(Part n);

/// Partitions of n with at most `max_len` nonzero parts, padded to max_len.
std::vector<Partition> partitions_of(Part n, std::size_t max_len);

BigInt factorial(Part n);

/// z_rho = prod_i i^{m_i} m_i!
BigInt centralizer_order(const Partition& rho);

struct CycleClass {
  Partition rho;
  BigInt z_rho;
};

std::vector<CycleClass> cycle_classes(Part n);

/// Irreducible characters of S_n by the Murnaghan-Nakayama rule, memoized.
///
/// Border strips are removed for the largest remaining part of rho first.
/// Character values are held in int64: |chi| is bounded by sqrt(n!), which
/// fits for n <= 33; larger n is rejected.
///
/// Not thread-safe; keep one table per worker.
class CharacterTable {
 public:
  explicit CharacterTable(Part n);

  Part weight() const { return n_; }
  const std::vector<CycleClass>& classes() const { return classes_; }

  std::int64_t value(const Partition& lam, const Partition& rho);

  /// chi^lam on every class, in `classes()` order.
  const std::vector<std::int64_t>& row(const Partition& lam);

  /// n! / z_rho for every class.
  const std::vector<BigInt>& class_sizes() const { return class_sizes_; }

 private:
  std::int64_t mn(std::vector<int>& beta, const std::vector<int>& rho, std::size_t pos);

  Part n_;
  std::vector<CycleClass> classes_;
  std::vector<BigInt> class_sizes_;
  std::map<std::vector<int>, std::int64_t> memo_;
  std::map<std::vector<Part>, std::vector<std::int64_t>> rows_;
};

BigInt mn_character(const Partition& lam, const Partition& rho);

inline constexpr Part kDefaultCharWeightCap = 30;
inline constexpr Part kDefaultSchurWeightCap = 20;

/// g_{mu,nu,lam} = (1/n!) sum_rho (n!/z_rho) chi^mu chi^nu chi^lam. Uses a
/// thread-local character table cache.
BigInt kron_oracle_char(const KroneckerTriple& t, Part weight_cap = kDefaultCharWeightCap);
BigInt kron_oracle_char(const Partition& mu, const Partition& nu, const Partition& lam,
                        Part weight_cap = kDefaultCharWeightCap);

using SchurExpansion = std::map<std::pair<Partition, Partition>, BigInt>;

/// Expands s_lam(x_i y_j) over n x-variables and m y-variables and peels off
/// s_mu(x) s_nu(y) by greatest monomial, x-exponents compared before
/// y-exponents. Keys are trimmed partitions.
SchurExpansion kron_oracle_schur(const Partition& lam, int n, int m,
                                 Part weight_cap = kDefaultSchurWeightCap);

/// Monomial expansion of s_shape in `vars` variables: exponent vector -> count.
std::map<std::vector<int>, BigInt> schur_monomials(const Partition& shape, int vars);

}  // namespace kronvp
