#include "cayley/fibred/stages.hpp"

#include <algorithm>

namespace cayley {

StageReport finite_stage_limit_check(const StageInput& input, double tol) {
  StageReport rep;
  const std::size_t stages = input.spaces.size();

  rep.sup_base_distance.resize(input.labels.size(), 0.0);
  rep.bounded.resize(input.labels.size(), true);
  for (std::size_t g = 0; g < input.labels.size(); ++g) {
    for (std::size_t m = 0; m < stages; ++m) {
      double d = input.spaces[m].distance(input.points[g][m], input.basepoints[m]);
      rep.sup_base_distance[g] = std::max(rep.sup_base_distance[g], d);
    }
    if (rep.sup_base_distance[g] > input.cp.omega(input.dist_to_e[g]) + tol) {
      rep.bounded[g] = false;
      rep.all_bounded = false;
    }
  }

  rep.stable_from.resize(input.pairs.size(), -1);
  for (std::size_t p = 0; p < input.pairs.size(); ++p) {
    auto [i, j, dx] = input.pairs[p];
    double lo = input.cp.rho(dx), hi = input.cp.omega(dx);
    // smallest m such that the sandwich holds for the whole tail
    int threshold = -1;
    for (std::size_t m = stages; m-- > 0;) {
      double d = input.spaces[m].distance(input.points[i][m], input.points[j][m]);
      bool ok = d >= lo - tol && d <= hi + tol;
      if (!ok) break;
      threshold = static_cast<int>(m);
    }
    rep.stable_from[p] = threshold;
    if (threshold < 0) rep.all_stable = false;
  }
  return rep;
}

}  // namespace cayley
