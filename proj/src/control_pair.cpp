#include "cayley/metrics/control_pair.hpp"

#include <algorithm>
#include <cmath>

namespace cayley {

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<double, double>> breakpoints,
                                 double final_slope)
    : pts_(std::move(breakpoints)), final_slope_(final_slope) {
  if (pts_.empty()) pts_ = {{0.0, 0.0}};
  std::sort(pts_.begin(), pts_.end());
  for (std::size_t i = 1; i < pts_.size(); ++i)
    if (pts_[i].second < pts_[i - 1].second)
      throw Error("ScaleNonPositive", "piecewise-linear control function must be non-decreasing");
  if (final_slope_ < 0)
    throw Error("ScaleNonPositive", "final slope must be non-negative");
}

double PiecewiseLinear::operator()(double x) const {
  if (x <= pts_.front().first) return pts_.front().second;
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    if (x <= pts_[i].first) {
      auto [x0, y0] = pts_[i - 1];
      auto [x1, y1] = pts_[i];
      if (x1 == x0) return y1;
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  return pts_.back().second + final_slope_ * (x - pts_.back().first);
}

PiecewiseLinear PiecewiseLinear::scaled(double c) const {
  auto pts = pts_;
  for (auto& [x, y] : pts) y *= c;
  return {std::move(pts), final_slope_ * c};
}

PiecewiseLinear PiecewiseLinear::plus_const(double c) const {
  auto pts = pts_;
  for (auto& [x, y] : pts) y += c;
  return {std::move(pts), final_slope_};
}

ControlReport measure_control_pair(const std::vector<Point>& images, const MetricSpace& target,
                                   const std::function<double(std::size_t, std::size_t)>& dist,
                                   const ControlPair& declared, double tol) {
  ControlReport rep;
  const std::size_t n = images.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double dx = dist(i, j);
      if (std::isinf(dx)) continue;  // no condition across components
      double dm = target.distance(images[i], images[j]);
      auto it = rep.envelope.find(dx);
      if (it == rep.envelope.end()) {
        rep.envelope.emplace(dx, std::make_pair(dm, dm));
      } else {
        it->second.first = std::min(it->second.first, dm);
        it->second.second = std::max(it->second.second, dm);
      }
      if (dm < declared.rho(dx) - tol) {
        rep.pass = false;
        rep.violations.push_back({i, j, dx, dm, true});
      }
      if (dm > declared.omega(dx) + tol) {
        rep.pass = false;
        rep.violations.push_back({i, j, dx, dm, false});
      }
    }
  return rep;
}

}  // namespace cayley
