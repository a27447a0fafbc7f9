#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "cayley/bytes.hpp"
#include "cayley/marked/marked_group.hpp"

namespace cayley {

/// Point of a metric space: a Euclidean vector, a graph vertex index, or a
/// tuple of factor points.
struct Point {
  std::variant<Eigen::VectorXd, std::int64_t, std::vector<Point>> v;

  static Point euclidean(Eigen::VectorXd x) { return {std::move(x)}; }
  static Point real(double x) {
    Eigen::VectorXd v(1);
    v[0] = x;
    return {std::move(v)};
  }
  static Point vertex(std::int64_t i) { return {i}; }
  static Point tuple(std::vector<Point> parts) { return {std::move(parts)}; }

  const Eigen::VectorXd& vec() const { return std::get<Eigen::VectorXd>(v); }
  std::int64_t idx() const { return std::get<std::int64_t>(v); }
  const std::vector<Point>& parts() const { return std::get<std::vector<Point>>(v); }
};

/// Concrete metric space: Euclidean ell_q^d, a finite graph metric, or a
/// scaled ell_q product of finitely many factors.
class MetricSpace {
public:
  struct EuclideanLq {
    int dim;
    double q;
  };
  struct FiniteGraph {
    std::shared_ptr<const std::vector<std::vector<double>>> dist;
  };
  struct Factor {
    std::shared_ptr<const MetricSpace> space;
    Point basepoint;
    double scale;
  };
  struct ScaledProduct {
    std::shared_ptr<const std::vector<Factor>> factors;
    double q;
  };

  static MetricSpace euclidean(int dim, double q = 2.0);
  static MetricSpace graph(std::vector<std::vector<double>> dist);
  /// Shortest-path metric of a finite marked group's Cayley graph.
  static MetricSpace cayley_metric(const MarkedGroup& mg);

  double distance(const Point& a, const Point& b) const;
  const std::variant<EuclideanLq, FiniteGraph, ScaledProduct>& kind() const { return kind_; }
  bool is_product() const { return std::holds_alternative<ScaledProduct>(kind_); }
  const ScaledProduct& product() const { return std::get<ScaledProduct>(kind_); }
  const EuclideanLq& euclidean_kind() const { return std::get<EuclideanLq>(kind_); }

  /// Base point of a product space: the tuple of factor base points.
  Point product_basepoint() const;

  friend MetricSpace lq_product(std::vector<MetricSpace> spaces, std::vector<Point> basepoints,
                                std::vector<double> scales, double q);

private:
  std::variant<EuclideanLq, FiniteGraph, ScaledProduct> kind_;
};

/// (prod_j (M_j, y_j, r_j))_{ell_q} with metric (sum (r_j d_j)^q)^{1/q}.
MetricSpace lq_product(std::vector<MetricSpace> spaces, std::vector<Point> basepoints,
                       std::vector<double> scales, double q);

/// n copies of one space with the scale (1/n)^{1/q} that makes the diagonal
/// embedding isometric.
MetricSpace folner_power(const MetricSpace& space, const Point& basepoint, std::size_t n,
                         double q);
Point diagonal_point(std::size_t n, const Point& z);

}  // namespace cayley
