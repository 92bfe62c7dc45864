#pragma once

#include <cstdint>
#include <vector>

#include "kronvp/numeric.hpp"

namespace kronvp {

struct HolePoint {
  std::int64_t i, j, k;
  BigInt g;  // g_{(N-i,i),(N-j,j),(N-k,k)}
};

struct HolesGrid {
  std::int64_t weight;
  std::vector<HolePoint> points;  // 0 <= j <= i <= k <= weight/2, sorted by (i, j, k)
};

HolesGrid holes_grid(std::int64_t weight, int threads = 1);

/// Zero entries passing all three Bravyi inequalities.
std::vector<HolePoint> bravyi_holes(const HolesGrid& grid);

}  // namespace kronvp
