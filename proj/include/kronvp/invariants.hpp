#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kronvp/partition.hpp"

namespace kronvp {

/// Canonical (2,2,4) triples of weight w: lam with at most four parts and
/// mu2 >= nu2.
std::vector<KroneckerTriple> triples_224(Part w);

struct CheckResult {
  std::string name;
  bool passed;
  std::size_t cases;
  std::string detail;  // first counterexample when failed
};

struct VerifyOptions {
  Part oracle_weight = 16;     // exhaustive oracle sweeps run over weights 0..oracle_weight
  std::size_t random_triples = 10000;
  Part random_max_part = 200;
  std::uint64_t seed = 20240521;
  std::int64_t holes_weight = 24;
  int threads = 1;
};

/// Every named invariant of the library, each evaluated exhaustively on its
/// sweep range.
std::vector<CheckResult> run_invariants(const VerifyOptions& opts,
                                        const std::function<void(const CheckResult&)>& progress = {});

}  // namespace kronvp
