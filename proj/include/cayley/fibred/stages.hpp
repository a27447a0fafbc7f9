#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "cayley/metrics/control_pair.hpp"

namespace cayley {

/// Finite-stage stand-in for the ultraproduct step: per-stage point tuples
/// with base points, checked for uniform boundedness and eventual sandwich
/// stabilization per pair. Certifies the finite-stage hypotheses only, never
/// the limit object itself.
struct StageInput {
  std::vector<MetricSpace> spaces;         // one per stage
  std::vector<Point> basepoints;           // one per stage
  std::vector<std::string> labels;         // tracked elements g
  std::vector<double> dist_to_e;           // d(e, g) per label
  std::vector<std::vector<Point>> points;  // [label][stage]
  std::vector<std::tuple<std::size_t, std::size_t, double>> pairs;  // (i, j, d(g_i, g_j))
  ControlPair cp;
};

struct StageReport {
  std::vector<double> sup_base_distance;  // per label
  std::vector<bool> bounded;              // sup <= omega(d(e,g)) + tol
  std::vector<int> stable_from;           // per pair; -1 when never stable
  bool all_bounded = true;
  bool all_stable = true;
};

StageReport finite_stage_limit_check(const StageInput& input, double tol = 1e-9);

}  // namespace cayley
