#pragma once

#include <Eigen/Core>
#include <optional>
#include <variant>
#include <vector>

#include "cayley/metrics/metric_space.hpp"

namespace cayley {

/// Isometry of ell_q^d as an exactly composable record z -> L z + shift with
/// L a signed permutation, or a full orthogonal matrix when q = 2.
struct RigidMotion {
  std::vector<int> perm;     // (Lz)[i] = sign[i] * z[perm[i]]
  std::vector<double> sign;  // entries +-1
  std::optional<Eigen::MatrixXd> orthogonal;  // overrides perm/sign; q = 2 only
  Eigen::VectorXd shift;

  static RigidMotion identity(int dim);
  static RigidMotion translation(Eigen::VectorXd t);
  static RigidMotion translation1(double t) {
    Eigen::VectorXd v(1);
    v[0] = t;
    return translation(std::move(v));
  }
  static RigidMotion orthogonal_motion(Eigen::MatrixXd q, Eigen::VectorXd t);

  int dim() const { return static_cast<int>(shift.size()); }
  Eigen::VectorXd apply(const Eigen::VectorXd& z) const;
  /// Composition in application order: this first, then next.
  RigidMotion then(const RigidMotion& next) const;
  RigidMotion inverse() const;
  bool approx_equal(const RigidMotion& other, double tol) const;
};

struct Isometry;

/// Isometry of a scaled product with equal scales: output coordinate i reads
/// input coordinate src[i] through motion[i]. Bijective src gives a genuine
/// isometry; the amenable recovery step may produce non-bijective reads, and
/// the verifier then measures the defect instead of assuming exactness.
struct ProductIsometry {
  std::vector<std::uint32_t> src;
  std::vector<Isometry> motion;
};

struct Isometry {
  std::variant<RigidMotion, ProductIsometry> v;

  Isometry() : v(RigidMotion{}) {}
  Isometry(RigidMotion m) : v(std::move(m)) {}
  Isometry(ProductIsometry m) : v(std::move(m)) {}

  Point apply(const Point& z) const;
  Isometry then(const Isometry& next) const;
  Isometry inverse() const;
  bool approx_equal(const Isometry& other, double tol) const;
};

/// Identity isometry of a space (recursing through product factors).
Isometry identity_isometry(const MetricSpace& space);

/// Max |d(f(x),f(y)) - d(x,y)| over the given sample pairs.
double isometry_defect(const MetricSpace& space, const Isometry& f,
                       const std::vector<std::pair<Point, Point>>& samples);

}  // namespace cayley
