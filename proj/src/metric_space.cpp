#include "cayley/metrics/metric_space.hpp"

#include <cmath>

namespace cayley {

MetricSpace MetricSpace::euclidean(int dim, double q) {
  MetricSpace m;
  m.kind_ = EuclideanLq{dim, q};
  return m;
}

MetricSpace MetricSpace::graph(std::vector<std::vector<double>> dist) {
  MetricSpace m;
  m.kind_ = FiniteGraph{std::make_shared<const std::vector<std::vector<double>>>(std::move(dist))};
  return m;
}

MetricSpace MetricSpace::cayley_metric(const MarkedGroup& mg) {
  auto elems = enumerate_elements(mg);
  auto wm = word_metric(mg);
  std::vector<std::vector<double>> d(elems.size(), std::vector<double>(elems.size(), 0));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) d[i][j] = wm(mg, elems[i], elems[j]);
  return graph(std::move(d));
}

double MetricSpace::distance(const Point& a, const Point& b) const {
  if (auto* e = std::get_if<EuclideanLq>(&kind_)) {
    const auto& x = a.vec();
    const auto& y = b.vec();
    if (e->q == 2.0) return (x - y).norm();
    if (e->q == 1.0) return (x - y).cwiseAbs().sum();
    double s = 0;
    for (int i = 0; i < e->dim; ++i) s += std::pow(std::abs(x[i] - y[i]), e->q);
    return std::pow(s, 1.0 / e->q);
  }
  if (auto* g = std::get_if<FiniteGraph>(&kind_)) {
    return (*g->dist)[static_cast<std::size_t>(a.idx())][static_cast<std::size_t>(b.idx())];
  }
  const auto& p = std::get<ScaledProduct>(kind_);
  const auto& fs = *p.factors;
  const auto& xs = a.parts();
  const auto& ys = b.parts();
  if (xs.size() != fs.size() || ys.size() != fs.size())
    throw Error("BackendMismatch", "product point arity mismatch");
  double s = 0;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    double dj = fs[j].scale * fs[j].space->distance(xs[j], ys[j]);
    s += std::pow(dj, p.q);
  }
  return std::pow(s, 1.0 / p.q);
}

Point MetricSpace::product_basepoint() const {
  const auto& p = std::get<ScaledProduct>(kind_);
  std::vector<Point> parts;
  parts.reserve(p.factors->size());
  for (auto& f : *p.factors) parts.push_back(f.basepoint);
  return Point::tuple(std::move(parts));
}

MetricSpace lq_product(std::vector<MetricSpace> spaces, std::vector<Point> basepoints,
                       std::vector<double> scales, double q) {
  if (spaces.size() != basepoints.size() || spaces.size() != scales.size())
    throw Error("BackendMismatch", "lq_product requires equally long factor lists");
  if (q < 1.0) throw Error("ScaleNonPositive", "q must be at least 1");
  for (double r : scales)
    if (!(r > 0)) throw Error("ScaleNonPositive", "scales must be positive");
  std::vector<MetricSpace::Factor> fs;
  fs.reserve(spaces.size());
  for (std::size_t j = 0; j < spaces.size(); ++j)
    fs.push_back({std::make_shared<const MetricSpace>(std::move(spaces[j])),
                  std::move(basepoints[j]), scales[j]});
  MetricSpace m;
  m.kind_ = MetricSpace::ScaledProduct{
      std::make_shared<const std::vector<MetricSpace::Factor>>(std::move(fs)), q};
  return m;
}

MetricSpace folner_power(const MetricSpace& space, const Point& basepoint, std::size_t n,
                         double q) {
  double scale = std::pow(1.0 / static_cast<double>(n), 1.0 / q);
  std::vector<MetricSpace> spaces(n, space);
  std::vector<Point> bases(n, basepoint);
  std::vector<double> scales(n, scale);
  return lq_product(std::move(spaces), std::move(bases), std::move(scales), q);
}

Point diagonal_point(std::size_t n, const Point& z) {
  return Point::tuple(std::vector<Point>(n, z));
}

}  // namespace cayley
