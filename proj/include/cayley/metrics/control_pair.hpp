#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cayley/metrics/metric_space.hpp"

namespace cayley {

/// Non-decreasing piecewise-linear function [0,inf) -> [0,inf) given by
/// breakpoints plus a final slope; proper growth means final slope > 0.
class PiecewiseLinear {
public:
  PiecewiseLinear() = default;
  PiecewiseLinear(std::vector<std::pair<double, double>> breakpoints, double final_slope);

  static PiecewiseLinear identity() { return {{{0.0, 0.0}}, 1.0}; }
  static PiecewiseLinear affine(double slope, double offset) { return {{{0.0, offset}}, slope}; }

  double operator()(double x) const;
  bool proper() const { return final_slope_ > 0; }

  PiecewiseLinear scaled(double c) const;      // c * f
  PiecewiseLinear plus_const(double c) const;  // f + c
  const std::vector<std::pair<double, double>>& breakpoints() const { return pts_; }
  double final_slope() const { return final_slope_; }

private:
  std::vector<std::pair<double, double>> pts_{{0.0, 0.0}};
  double final_slope_ = 1.0;
};

/// Compression / expansion pair: rho(d(x,y)) <= d(f(x),f(y)) <= omega(d(x,y)).
struct ControlPair {
  PiecewiseLinear rho;
  PiecewiseLinear omega;

  static ControlPair identity() {
    return {PiecewiseLinear::identity(), PiecewiseLinear::identity()};
  }
  /// ((1-2
  /// delta) rho, omega + 2 delta') degradation of the amenable recovery step.
  ControlPair folner_degraded(double delta, double delta_prime) const {
    return {rho.scaled(1.0 - 2.0 * delta), omega.plus_const(2.0 * delta_prime)};
  }
};

struct ControlViolation {
  std::size_t i = 0, j = 0;
  double dx = 0, dm = 0;
  bool lower = false;  // true: rho bound violated, false: omega bound
};

struct ControlReport {
  bool pass = true;
  std::vector<ControlViolation> violations;
  // per observed domain distance: [min, max] of image distances
  std::map<double, std::pair<double, double>> envelope;
};

/// Measures the control-pair sandwich of a finite map i -> images[i] against
/// the declared pair. Pairs at infinite domain distance are skipped; the
/// comparison tolerance is 1e-9 (domain distances on graphs are exact
/// integers).
ControlReport measure_control_pair(const std::vector<Point>& images, const MetricSpace& target,
                                   const std::function<double(std::size_t, std::size_t)>& dist,
                                   const ControlPair& declared, double tol = 1e-9);

}  // namespace cayley
