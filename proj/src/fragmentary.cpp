#include "cayley/fibred/fragmentary.hpp"

#include <cmath>

namespace cayley {

FragmentaryReport verify_fragmentary(const FragmentaryAction& fa, double tol) {
  FragmentaryReport rep;
  CayleyBall b = ball(fa.mg, fa.domain_radius);
  for (auto& g1 : b.vertices)
    for (auto& g2 : b.vertices) {
      Elem prod = fa.mg.group->mul(g1, g2);
      if (!b.find(prod)) continue;
      const Isometry& a1 = fa.alpha.at(g1);
      const Isometry& a2 = fa.alpha.at(g2);
      const Isometry& a12 = fa.alpha.at(prod);
      Point lhs = a12.apply(fa.y);
      Point rhs = a2.apply(a1.apply(fa.y));
      double defect = fa.space.distance(lhs, rhs);
      rep.max_defect = std::max(rep.max_defect, defect);
      ++rep.triples;
      if (defect > fa.eps + tol) {
        rep.pass = false;
        if (rep.witnesses.size() < 16) rep.witnesses.emplace_back(g1, g2);
      }
    }
  return rep;
}

ControlReport fragmentary_orbit_control(const FragmentaryAction& fa, const ControlPair& cp,
                                        double tol, const BallOptions& opts) {
  CayleyBall b = ball(fa.mg, fa.domain_radius, opts);
  // exact word distances between ball elements need the 2R-ball of the group
  CayleyBall wide = ball(fa.mg, 2 * fa.domain_radius, opts);
  std::vector<Point> images;
  images.reserve(b.size());
  for (auto& g : b.vertices) images.push_back(fa.alpha.at(g).apply(fa.y));
  auto dist = [&](std::size_t i, std::size_t j) {
    Elem rel = fa.mg.group->mul(b.vertices[i], fa.mg.group->inv(b.vertices[j]));
    auto u = wide.find(rel);
    if (!u) throw Error("BackendMismatch", "pair distance outside the 2R ball");
    return static_cast<double>(wide.distance[*u]);
  };
  return measure_control_pair(images, fa.space, dist, cp, tol);
}

namespace {

// t_{x,gx,R'_m}: the transition from the chart centered at gx to the chart
// centered at x, evaluated at the common ball point gx.
Isometry transition(const FibredEmbedding& fe, std::size_t m, std::uint32_t x, std::uint32_t gx) {
  const Isometry& at_own = fe.triv[m][gx].at(gx);
  const Isometry& at_x = fe.triv[m][x].at(gx);
  return at_own.inverse().then(at_x);
}

Point base_orbit_point(const FibredEmbedding& fe, std::size_t m, std::uint32_t x) {
  return fe.triv[m][x].at(x).apply(fe.section[m][x]);
}

}  // namespace

FragmentaryAction recover_fragmentary_finite(const FibredEmbedding& fe, std::size_t m, double q) {
  const auto& comp = fe.components[m];
  const auto n = static_cast<std::uint32_t>(comp.elements.size());
  const std::uint32_t Rp = fe.Rp[m];

  FragmentaryAction fa;
  fa.mg = comp.mg;
  fa.domain_radius = Rp;
  fa.space = folner_power(fe.fibre, fe.fibre_base, n, q);

  std::vector<Point> ys;
  ys.reserve(n);
  for (std::uint32_t x = 0; x < n; ++x) ys.push_back(base_orbit_point(fe, m, x));
  fa.y = Point::tuple(std::move(ys));
  fa.eps = 0;

  CayleyBall b = ball(comp.mg, Rp);
  for (auto& g : b.vertices) {
    ProductIsometry p;
    p.src.resize(n);
    p.motion.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t gx = comp.at(comp.mg.group->mul(g, comp.elements[x]));
      p.src[x] = gx;
      p.motion[x] = transition(fe, m, x, gx);
    }
    fa.alpha.emplace(g, Isometry(std::move(p)));
  }
  return fa;
}

FragmentaryAction recover_fragmentary_folner(const FibredEmbedding& fe, std::size_t m, double q,
                                             const FolnerSet& F, const ControlPair& cp) {
  const auto& comp = fe.components[m];
  const std::uint32_t Rp = fe.Rp[m];
  const auto nf = static_cast<std::uint32_t>(F.members.size());

  std::unordered_map<Elem, std::uint32_t> fidx;
  for (std::uint32_t i = 0; i < nf; ++i) fidx.emplace(F.members[i], i);

  FragmentaryAction fa;
  fa.mg = comp.mg;
  fa.domain_radius = Rp / 2;
  fa.space = folner_power(fe.fibre, fe.fibre_base, nf, q);
  double delta_prime = std::pow(F.eps, 1.0 / q) * cp.omega(static_cast<double>(Rp));
  fa.eps = 3.0 * delta_prime;

  std::vector<Point> ys;
  ys.reserve(nf);
  for (std::uint32_t i = 0; i < nf; ++i)
    ys.push_back(base_orbit_point(fe, m, comp.at(F.members[i])));
  fa.y = Point::tuple(std::move(ys));

  Isometry fibre_id = identity_isometry(fe.fibre);
  // alpha is defined on the full R'_m ball; the almost-fragmentary claims are
  // stated on the half ball, which is what verify_fragmentary enumerates
  CayleyBall bfull = ball(comp.mg, Rp);
  for (auto& g : bfull.vertices) {
    ProductIsometry p;
    p.src.resize(nf);
    p.motion.resize(nf);
    for (std::uint32_t i = 0; i < nf; ++i) {
      std::uint32_t x = comp.at(F.members[i]);
      Elem gx_elem = comp.mg.group->mul(g, F.members[i]);
      auto it = fidx.find(gx_elem);
      if (it != fidx.end()) {
        p.src[i] = it->second;
        p.motion[i] = transition(fe, m, x, comp.at(gx_elem));
      } else {
        p.src[i] = i;
        p.motion[i] = fibre_id;
      }
    }
    fa.alpha.emplace(g, Isometry(std::move(p)));
  }
  return fa;
}

ControlPair folner_envelope(const ControlPair& cp, double delta, double q, std::uint32_t Rp) {
  double delta_prime = std::pow(delta, 1.0 / q) * cp.omega(static_cast<double>(Rp));
  return cp.folner_degraded(delta, delta_prime);
}

double fragmentary_isometry_defect(const FragmentaryAction& fa) {
  // sample pairs: orbit points of a few alpha values against y
  std::vector<std::pair<Point, Point>> samples;
  std::size_t count = 0;
  for (auto& [g, iso] : fa.alpha) {
    samples.emplace_back(fa.y, iso.apply(fa.y));
    if (++count == 8) break;
  }
  double worst = 0;
  for (auto& [g, iso] : fa.alpha)
    worst = std::max(worst, isometry_defect(fa.space, iso, samples));
  return worst;
}

}  // namespace cayley
