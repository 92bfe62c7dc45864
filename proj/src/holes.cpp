#include "kronvp/holes.hpp"

#include "kronvp/error.hpp"
#include "kronvp/kron224.hpp"
#include "kronvp/parallel.hpp"

namespace kronvp {

namespace {

KroneckerTriple grid_triple(std::int64_t n, const HolePoint& p) {
  return validate_triple(Partition{n - p.i, p.i}, Partition{n - p.j, p.j}, Partition{n - p.k, p.k},
                         LengthBounds{2, 2, 4});
}

}  // namespace

HolesGrid holes_grid(std::int64_t weight, int threads) {
  if (weight < 0) throw Error(ErrorCode::InvalidArgument, "weight must be nonnegative");
  HolesGrid grid{weight, {}};
  const std::int64_t h = weight / 2;
  for (std::int64_t i = 0; i <= h; ++i)
    for (std::int64_t j = 0; j <= i; ++j)
      for (std::int64_t k = i; k <= h; ++k) grid.points.push_back({i, j, k, 0});
  parallel_for(grid.points.size(), threads, [&](std::size_t idx) {
    HolePoint& p = grid.points[idx];
    p.g = kron224(grid_triple(weight, p));
  });
  return grid;
}

std::vector<HolePoint> bravyi_holes(const HolesGrid& grid) {
  std::vector<HolePoint> out;
  for (const HolePoint& p : grid.points) {
    if (p.g == 0 && bravyi_check(grid_triple(grid.weight, p)).all()) out.push_back(p);
  }
  return out;
}

}  // namespace kronvp
