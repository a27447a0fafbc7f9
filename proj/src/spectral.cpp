#include "cayley/spectral/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace cayley {

CayleyGraph build_cayley_graph(const MarkedGroup& mg, std::uint64_t cap, bool require_full) {
  auto order = mg.group->order();
  auto elems = enumerate_elements(mg, cap);
  if (require_full && order && *order != elems.size())
    throw Error("Disconnected", "marking generates " + std::to_string(elems.size()) + " of " +
                                    std::to_string(*order) + " elements");
  std::unordered_map<Elem, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  CayleyGraph g;
  g.n = elems.size();
  g.degree = static_cast<std::uint32_t>(2 * mg.k());
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> mult;
  for (std::uint32_t u = 0; u < g.n; ++u) {
    for (auto& s : mg.generators) {
      for (const Elem& img :
           {mg.group->mul(s, elems[u]), mg.group->mul(mg.group->inv(s), elems[u])}) {
        auto v = index.at(img);
        if (v == u) continue;  // loops: degree only
        auto key = std::minmax(u, v);
        ++mult[{key.first, key.second}];
      }
    }
  }
  g.adj.assign(g.n, {});
  for (auto& [k, c] : mult) {
    // each unordered edge was seen from both endpoints
    std::uint32_t m = c / 2;
    g.edges.emplace_back(k.first, k.second, m);
    g.adj[k.first].emplace_back(k.second, m);
    g.adj[k.second].emplace_back(k.first, m);
  }
  return g;
}

namespace {

constexpr std::size_t kDenseLimit = 5000;

Eigen::MatrixXd adjacency_dense(const CayleyGraph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto& [u, v, m] : g.edges) {
    a(u, v) += m;
    a(v, u) += m;
  }
  return a;
}

double smallest_positive(const Eigen::VectorXd& eigs, double scale) {
  double best = -1;
  for (int i = 0; i < eigs.size(); ++i) {
    double v = eigs[i];
    if (v > 1e-9 * scale && (best < 0 || v < best)) best = v;
  }
  if (best < 0) throw Error("Disconnected", "no positive eigenvalue found");
  return best;
}

// Lanczos with full reorthogonalization for the largest eigenvalue of
// C = 2I - L restricted to the complement of the constant vector;
// lambda1 = 2 - max.
double lambda1_lanczos(const CayleyGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n);
  const double deg = g.degree;
  auto matvec = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd y = 2.0 * x;
    for (std::uint32_t u = 0; u < g.n; ++u) {
      double acc = 0;
      for (auto& [v, m] : g.adj[u]) acc += m * x[v];
      y[u] += (acc - deg * x[u]) / deg;  // subtract Lx = x - Ax/deg: y = 2x - Lx
    }
    return y;
  };
  auto project = [&](Eigen::VectorXd& x) { x.array() -= x.mean(); };

  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v = Eigen::VectorXd::NullaryExpr(n, [&](Eigen::Index) { return gauss(rng); });
  project(v);
  v.normalize();

  const int max_iter = std::min<int>(400, static_cast<int>(n) - 1);
  std::vector<Eigen::VectorXd> basis;
  std::vector<double> alpha, beta;
  Eigen::VectorXd prev = Eigen::VectorXd::Zero(n);
  double last = -1;
  for (int it = 0; it < max_iter; ++it) {
    basis.push_back(v);
    Eigen::VectorXd w = matvec(v);
    project(w);
    double a = v.dot(w);
    alpha.push_back(a);
    w -= a * v;
    if (!beta.empty()) w -= beta.back() * prev;
    for (auto& b : basis) w -= b.dot(w) * b;  // full reorthogonalization
    for (auto& b : basis) w -= b.dot(w) * b;
    double bnorm = w.norm();

    // Ritz value from the tridiagonal section
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(alpha.size(), alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < alpha.size()) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
    double ritz = es.eigenvalues().maxCoeff();
    if (last >= 0 && std::abs(ritz - last) < 1e-12 * std::max(1.0, std::abs(ritz))) {
      return 2.0 - ritz;
    }
    last = ritz;
    if (bnorm < 1e-13) break;
    beta.push_back(bnorm);
    prev = v;
    v = w / bnorm;
  }
  return 2.0 - last;
}

}  // namespace

double lambda1_graph(const CayleyGraph& g) {
  if (g.n > kDenseLimit) return lambda1_lanczos(g);
  Eigen::MatrixXd lap = -adjacency_dense(g) / static_cast<double>(g.degree);
  lap.diagonal().array() += 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
  return smallest_positive(es.eigenvalues(), 1.0);
}

double lambda1(const MarkedGroup& mg) { return lambda1_graph(build_cayley_graph(mg)); }

double combinatorial_gap(const CayleyGraph& g) {
  Eigen::MatrixXd lap = -adjacency_dense(g);
  lap.diagonal().array() += static_cast<double>(g.degree);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
  return smallest_positive(es.eigenvalues(), static_cast<double>(g.degree));
}

std::string SpectrumReport::csv_header() {
  return "family,m,vertices,deg,lambda1,C_exact,girth,diam";
}

std::string SpectrumReport::csv_row(const std::string& family, std::size_t index) const {
  std::ostringstream os;
  os.precision(17);
  os << family << "," << index << "," << vertices << "," << degree << "," << lambda1 << ","
     << poincare_c2 << "," << girth << "," << diameter;
  return os.str();
}

SpectrumReport spectrum_report(const MarkedGroup& mg) {
  SpectrumReport rep;
  rep.id = mg.name;
  auto g = build_cayley_graph(mg);
  rep.vertices = g.n;
  rep.degree = g.degree;
  rep.lambda1 = lambda1_graph(g);
  rep.poincare_c2 = 1.0 / combinatorial_gap(g);
  auto gd = girth_diameter(mg);
  rep.girth = gd.girth;
  rep.diameter = gd.diameter;
  return rep;
}

namespace {

double poincare_ratio(const CayleyGraph& g, const std::vector<Eigen::VectorXd>& f, double q) {
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(f[0].size());
  for (auto& x : f) mean += x;
  mean /= static_cast<double>(f.size());
  double num = 0;
  for (auto& x : f) num += std::pow((x - mean).norm(), q);
  double den = 0;
  for (auto& [u, v, m] : g.edges) den += m * std::pow((f[u] - f[v]).norm(), q);
  if (den == 0) return 0;  // constant map: both sides vanish, never a violation
  return num / den;
}

}  // namespace

PoincareReport poincare_check(const MarkedGroup& mg, double q, int d, int trials, double C,
                              std::uint64_t seed) {
  auto g = build_cayley_graph(mg);
  PoincareReport rep;
  rep.C = C;
  rep.trials = trials;
  rep.exact_c2 = 1.0 / combinatorial_gap(g);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Eigen::VectorXd> f(g.n);
    for (auto& x : f)
      x = Eigen::VectorXd::NullaryExpr(d, [&](Eigen::Index) { return gauss(rng); });
    best = std::max(best, poincare_ratio(g, f, q));
  }
  // coordinate-ascent refinement: pattern search over single coordinates;
  // only worthwhile at moderate variable counts
  if (g.n * static_cast<std::size_t>(d) <= 2000) {
    std::vector<Eigen::VectorXd> f(g.n);
    for (auto& x : f)
      x = Eigen::VectorXd::NullaryExpr(d, [&](Eigen::Index) { return gauss(rng); });
    double cur = poincare_ratio(g, f, q);
    double step = 0.5;
    for (int sweep = 0; sweep < 40 && step > 1e-4; ++sweep) {
      bool improved = false;
      for (std::size_t v = 0; v < g.n; ++v)
        for (int c = 0; c < d; ++c)
          for (double dir : {+1.0, -1.0}) {
            f[v][c] += dir * step;
            double r = poincare_ratio(g, f, q);
            if (r > cur) {
              cur = r;
              improved = true;
            } else {
              f[v][c] -= dir * step;
            }
          }
      if (!improved) step *= 0.5;
    }
    best = std::max(best, cur);
  }
  rep.best_ratio = best;
  rep.pass = best <= C + 1e-9;
  return rep;
}

}  // namespace cayley
