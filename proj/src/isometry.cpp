#include "cayley/fibred/isometry.hpp"

#include <cmath>

namespace cayley {

RigidMotion RigidMotion::identity(int dim) {
  RigidMotion m;
  m.perm.resize(dim);
  m.sign.assign(dim, 1.0);
  for (int i = 0; i < dim; ++i) m.perm[i] = i;
  m.shift = Eigen::VectorXd::Zero(dim);
  return m;
}

RigidMotion RigidMotion::translation(Eigen::VectorXd t) {
  RigidMotion m = identity(static_cast<int>(t.size()));
  m.shift = std::move(t);
  return m;
}

RigidMotion RigidMotion::orthogonal_motion(Eigen::MatrixXd q, Eigen::VectorXd t) {
  RigidMotion m;
  m.orthogonal = std::move(q);
  m.shift = std::move(t);
  return m;
}

Eigen::VectorXd RigidMotion::apply(const Eigen::VectorXd& z) const {
  if (orthogonal) return *orthogonal * z + shift;
  Eigen::VectorXd w(shift.size());
  for (int i = 0; i < w.size(); ++i) w[i] = sign[i] * z[perm[i]];
  return w + shift;
}

RigidMotion RigidMotion::then(const RigidMotion& b) const {
  // z -> b(this(z)) = L_b L_a z + (L_b shift_a + shift_b)
  RigidMotion c;
  if (orthogonal || b.orthogonal) {
    auto mat = [](const RigidMotion& m) {
      if (m.orthogonal) return *m.orthogonal;
      Eigen::MatrixXd q = Eigen::MatrixXd::Zero(m.shift.size(), m.shift.size());
      for (int i = 0; i < m.shift.size(); ++i) q(i, m.perm[i]) = m.sign[i];
      return q;
    };
    Eigen::MatrixXd la = mat(*this), lb = mat(b);
    c.orthogonal = lb * la;
    c.shift = lb * shift + b.shift;
    return c;
  }
  const int d = dim();
  c.perm.resize(d);
  c.sign.resize(d);
  c.shift.resize(d);
  for (int i = 0; i < d; ++i) {
    c.perm[i] = perm[b.perm[i]];
    c.sign[i] = b.sign[i] * sign[b.perm[i]];
    c.shift[i] = b.sign[i] * shift[b.perm[i]] + b.shift[i];
  }
  return c;
}

RigidMotion RigidMotion::inverse() const {
  RigidMotion c;
  if (orthogonal) {
    c.orthogonal = orthogonal->transpose();
    c.shift = -(*c.orthogonal * shift);
    return c;
  }
  const int d = dim();
  c.perm.resize(d);
  c.sign.resize(d);
  c.shift.resize(d);
  for (int i = 0; i < d; ++i) {
    c.perm[perm[i]] = i;
    c.sign[perm[i]] = sign[i];
  }
  for (int i = 0; i < d; ++i) c.shift[i] = -c.sign[i] * shift[c.perm[i]];
  return c;
}

bool RigidMotion::approx_equal(const RigidMotion& other, double tol) const {
  if (dim() != other.dim()) return false;
  if ((shift - other.shift).cwiseAbs().maxCoeff() > tol) return false;
  auto mat = [](const RigidMotion& m) {
    if (m.orthogonal) return *m.orthogonal;
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(m.shift.size(), m.shift.size());
    for (int i = 0; i < m.shift.size(); ++i) q(i, m.perm[i]) = m.sign[i];
    return q;
  };
  return (mat(*this) - mat(other)).cwiseAbs().maxCoeff() <= tol;
}

Point Isometry::apply(const Point& z) const {
  if (auto* m = std::get_if<RigidMotion>(&v)) return Point::euclidean(m->apply(z.vec()));
  const auto& p = std::get<ProductIsometry>(v);
  const auto& parts = z.parts();
  std::vector<Point> out(p.src.size());
  for (std::size_t i = 0; i < p.src.size(); ++i) out[i] = p.motion[i].apply(parts[p.src[i]]);
  return Point::tuple(std::move(out));
}

Isometry Isometry::then(const Isometry& next) const {
  if (auto* a = std::get_if<RigidMotion>(&v)) {
    auto* b = std::get_if<RigidMotion>(&next.v);
    if (!b) throw Error("BackendMismatch", "isometry kinds differ in composition");
    return Isometry(a->then(*b));
  }
  const auto& a = std::get<ProductIsometry>(v);
  const auto* b = std::get_if<ProductIsometry>(&next.v);
  if (!b) throw Error("BackendMismatch", "isometry kinds differ in composition");
  ProductIsometry c;
  c.src.resize(b->src.size());
  c.motion.resize(b->src.size());
  for (std::size_t i = 0; i < b->src.size(); ++i) {
    c.src[i] = a.src[b->src[i]];
    c.motion[i] = a.motion[b->src[i]].then(b->motion[i]);
  }
  return Isometry(std::move(c));
}

Isometry Isometry::inverse() const {
  if (auto* m = std::get_if<RigidMotion>(&v)) return Isometry(m->inverse());
  const auto& p = std::get<ProductIsometry>(v);
  ProductIsometry c;
  c.src.assign(p.src.size(), 0);
  c.motion.resize(p.src.size());
  std::vector<bool> hit(p.src.size(), false);
  for (std::size_t i = 0; i < p.src.size(); ++i) {
    if (hit[p.src[i]]) throw Error("BackendMismatch", "product isometry not invertible");
    hit[p.src[i]] = true;
    c.src[p.src[i]] = static_cast<std::uint32_t>(i);
    c.motion[p.src[i]] = p.motion[i].inverse();
  }
  return Isometry(std::move(c));
}

bool Isometry::approx_equal(const Isometry& other, double tol) const {
  if (auto* a = std::get_if<RigidMotion>(&v)) {
    auto* b = std::get_if<RigidMotion>(&other.v);
    return b && a->approx_equal(*b, tol);
  }
  const auto& a = std::get<ProductIsometry>(v);
  const auto* b = std::get_if<ProductIsometry>(&other.v);
  if (!b || a.src != b->src || a.motion.size() != b->motion.size()) return false;
  for (std::size_t i = 0; i < a.motion.size(); ++i)
    if (!a.motion[i].approx_equal(b->motion[i], tol)) return false;
  return true;
}

Isometry identity_isometry(const MetricSpace& space) {
  if (auto* e = std::get_if<MetricSpace::EuclideanLq>(&space.kind()))
    return Isometry(RigidMotion::identity(e->dim));
  if (space.is_product()) {
    const auto& fs = *space.product().factors;
    ProductIsometry p;
    p.src.resize(fs.size());
    p.motion.reserve(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      p.src[i] = static_cast<std::uint32_t>(i);
      p.motion.push_back(identity_isometry(*fs[i].space));
    }
    return Isometry(std::move(p));
  }
  throw Error("BackendMismatch", "no isometry model for this space kind");
}

double isometry_defect(const MetricSpace& space, const Isometry& f,
                       const std::vector<std::pair<Point, Point>>& samples) {
  double worst = 0;
  for (auto& [x, y] : samples) {
    double before = space.distance(x, y);
    double after = space.distance(f.apply(x), f.apply(y));
    worst = std::max(worst, std::abs(after - before));
  }
  return worst;
}

}  // namespace cayley
