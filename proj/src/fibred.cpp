#include "cayley/fibred/fibred.hpp"

#include <json.hpp>

namespace cayley {

FibredComponent make_component(const MarkedGroup& mg) {
  FibredComponent c;
  c.mg = mg;
  c.elements = enumerate_elements(mg);
  for (std::uint32_t i = 0; i < c.elements.size(); ++i) c.index.emplace(c.elements[i], i);
  c.metric = word_metric(mg);
  return c;
}

namespace {

// Deterministic fibre point pairs for isometry-defect sampling: section
// values and the base point of the component.
std::vector<std::pair<Point, Point>> sample_pairs(const FibredEmbedding& fe, std::size_t m) {
  std::vector<std::pair<Point, Point>> out;
  const auto& sec = fe.section[m];
  std::size_t step = std::max<std::size_t>(1, sec.size() / 6);
  for (std::size_t i = 0; i < sec.size(); i += step) {
    out.emplace_back(sec[i], fe.fibre_base);
    if (i + step < sec.size()) out.emplace_back(sec[i], sec[i + step]);
  }
  return out;
}

}  // namespace

FibredReport verify_fibred(const FibredEmbedding& fe, const ControlPair& cp, double tol) {
  FibredReport rep;
  for (std::size_t m = 0; m + 1 < fe.Rp.size(); ++m)
    if (fe.Rp[m + 1] < fe.Rp[m]) rep.radii_nondecreasing = false;
  if (fe.Rp.size() > 1 && fe.Rp.back() <= fe.Rp.front()) rep.radii_growing = false;

  for (std::size_t m = 0; m < fe.components.size(); ++m) {
    const auto& comp = fe.components[m];
    const auto n = static_cast<std::uint32_t>(comp.elements.size());
    const std::uint32_t Rp = fe.Rp[m];
    auto samples = sample_pairs(fe, m);

    // (1) every restriction is an isometry of the fibre
    for (std::uint32_t g = 0; g < n; ++g) {
      for (auto& [x, iso] : fe.triv[m][g]) {
        double defect = isometry_defect(fe.fibre, iso, samples);
        rep.max_isometry_defect = std::max(rep.max_isometry_defect, defect);
        if (defect > tol) {
          rep.isometries_ok = false;
          rep.violations.push_back({m, g, 0, x, x, defect, tol, "isometry"});
        }
      }
    }

    // (2) the control-pair sandwich inside every (g, R'_m)-ball
    for (std::uint32_t g = 0; g < n; ++g) {
      const auto& chart = fe.triv[m][g];
      std::vector<std::uint32_t> ball_vertices;
      ball_vertices.reserve(chart.size());
      for (auto& [x, iso] : chart) ball_vertices.push_back(x);
      for (std::size_t a = 0; a < ball_vertices.size(); ++a)
        for (std::size_t b = a + 1; b < ball_vertices.size(); ++b) {
          std::uint32_t x1 = ball_vertices[a], x2 = ball_vertices[b];
          double dx = comp.metric(comp.mg, comp.elements[x1], comp.elements[x2]);
          Point p1 = chart.at(x1).apply(fe.section[m][x1]);
          Point p2 = chart.at(x2).apply(fe.section[m][x2]);
          double dm = fe.fibre.distance(p1, p2);
          if (dm < cp.rho(dx) - tol) {
            rep.sandwich_ok = false;
            rep.violations.push_back({m, g, 0, x1, x2, dm, cp.rho(dx), "sandwich-lower"});
          }
          if (dm > cp.omega(dx) + tol) {
            rep.sandwich_ok = false;
            rep.violations.push_back({m, g, 0, x1, x2, dm, cp.omega(dx), "sandwich-upper"});
          }
        }
    }

    // (3) ball-independent transition isometries on overlaps
    for (std::uint32_t g1 = 0; g1 < n; ++g1)
      for (std::uint32_t g2 = g1 + 1; g2 < n; ++g2) {
        if (comp.metric(comp.mg, comp.elements[g1], comp.elements[g2]) > 2 * Rp) continue;
        std::optional<Isometry> transition;
        bool bit_stable = true;
        for (auto& [x, t1] : fe.triv[m][g1]) {
          auto it2 = fe.triv[m][g2].find(x);
          if (it2 == fe.triv[m][g2].end()) continue;
          Isometry t = it2->second.inverse().then(t1);
          if (!transition) {
            transition = t;
            continue;
          }
          if (!t.approx_equal(*transition, 0.0)) bit_stable = false;
          if (!t.approx_equal(*transition, tol)) {
            rep.transitions_ok = false;
            rep.violations.push_back({m, g1, g2, x, x, 1.0, tol, "transition"});
          }
          double dev = 0;
          for (auto& pair : samples)
            dev = std::max(dev, fe.fibre.distance(t.apply(pair.first), transition->apply(pair.first)));
          rep.max_transition_dev = std::max(rep.max_transition_dev, dev);
          if (dev > tol) rep.transitions_ok = false;
        }
        if (!bit_stable) rep.transitions_bit_stable = false;
      }
  }
  return rep;
}

FibredEmbedding genuine_to_fibred(const std::vector<MarkedGroup>& components,
                                  const std::vector<std::vector<Point>>& images,
                                  MetricSpace fibre, Point fibre_base) {
  FibredEmbedding fe;
  fe.fibre = std::move(fibre);
  fe.fibre_base = std::move(fibre_base);
  for (std::size_t m = 0; m < components.size(); ++m) {
    FibredComponent comp = make_component(components[m]);
    if (images[m].size() != comp.elements.size())
      throw Error("BackendMismatch", "image table must cover every vertex");
    const auto n = static_cast<std::uint32_t>(comp.elements.size());
    std::uint32_t diam = comp.metric.diameter;
    fe.Rp.push_back(diam);
    fe.section.push_back(images[m]);
    std::vector<std::unordered_map<std::uint32_t, Isometry>> charts(n);
    Isometry id = identity_isometry(fe.fibre);
    for (std::uint32_t g = 0; g < n; ++g)
      for (std::uint32_t x = 0; x < n; ++x) charts[g].emplace(x, id);
    fe.triv.push_back(std::move(charts));
    fe.components.push_back(std::move(comp));
  }
  return fe;
}

FibredEmbedding build_from_action(const std::vector<MarkedGroup>& seq,
                                  const EquivariantEmbedding& ee, std::uint32_t Rmax,
                                  const BallOptions& opts) {
  FibredEmbedding fe;
  fe.fibre = ee.space;
  fe.fibre_base = ee.y;
  CayleyBall limit_ball = ball(ee.mg, Rmax, opts);
  for (const auto& mg : seq) {
    FibredComponent comp = make_component(mg);
    CayleyBall b = ball(mg, Rmax, opts);
    int Rm = -1;
    std::optional<PartialIso> beta;
    // largest R with isomorphic R-balls, and its vertex bijection
    if (auto full = diagram_iso(b, limit_ball)) {
      Rm = static_cast<int>(Rmax);
      beta = full;
    } else {
      std::uint32_t lo = 0, hi = Rmax;
      auto iso0 = diagram_iso(b.restrict(0), limit_ball.restrict(0));
      if (!iso0) throw Error("ActionNotTotal", "no isomorphism even at radius 0");
      beta = iso0;
      while (hi - lo > 1) {
        std::uint32_t mid = lo + (hi - lo) / 2;
        if (auto iso = diagram_iso(b.restrict(mid), limit_ball.restrict(mid))) {
          lo = mid;
          beta = iso;
        } else {
          hi = mid;
        }
      }
      Rm = static_cast<int>(lo);
    }
    CayleyBall bm = b.restrict(static_cast<std::uint32_t>(Rm));
    CayleyBall bl = limit_ball.restrict(static_cast<std::uint32_t>(Rm));

    const std::uint32_t Rp = static_cast<std::uint32_t>(Rm) / 2;
    const auto n = static_cast<std::uint32_t>(comp.elements.size());
    fe.Rp.push_back(Rp);
    fe.section.emplace_back(n, ee.y);

    std::vector<std::unordered_map<std::uint32_t, Isometry>> charts(n);
    for (std::uint32_t g = 0; g < n; ++g) {
      Elem ginv = mg.group->inv(comp.elements[g]);
      for (std::uint32_t x = 0; x < n; ++x) {
        if (comp.metric(mg, comp.elements[x], comp.elements[g]) > Rp) continue;
        Elem rel = mg.group->mul(comp.elements[x], ginv);  // x g^-1 in B(e, R'_m)
        auto u = bm.find(rel);
        if (!u) throw Error("ActionNotTotal", "ball element missing from the beta domain");
        const Elem& lim = bl.vertices[beta->map[*u]];
        auto motion = ee.action(lim);
        if (!motion) throw Error("ActionNotTotal", "action undefined on " + bytes::hex(lim));
        charts[g].emplace(x, *motion);
      }
    }
    fe.triv.push_back(std::move(charts));
    fe.components.push_back(std::move(comp));
  }
  return fe;
}

std::vector<std::size_t> cover_assignment(const std::vector<MarkedGroup>& seq,
                                          const std::vector<EquivariantEmbedding>& limits,
                                          std::uint32_t Rmax, const BallOptions& opts) {
  std::vector<std::size_t> out;
  for (const auto& mg : seq) {
    int best = -1;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < limits.size(); ++i) {
      int r = convergence_radius(mg, limits[i].mg, Rmax, opts);
      if (r > best) {
        best = r;
        best_i = i;
      }
    }
    out.push_back(best_i);
  }
  return out;
}

FibredEmbedding build_from_action_cover(const std::vector<MarkedGroup>& seq,
                                        const std::vector<EquivariantEmbedding>& limits, double q,
                                        std::uint32_t Rmax, const BallOptions& opts) {
  // ell_q product of the limit target spaces with their base points
  std::vector<MetricSpace> spaces;
  std::vector<Point> bases;
  std::vector<double> scales;
  for (auto& l : limits) {
    spaces.push_back(l.space);
    bases.push_back(l.y);
    scales.push_back(1.0);
  }
  MetricSpace fibre = lq_product(spaces, bases, scales, q);
  Point base = fibre.product_basepoint();

  auto assign = cover_assignment(seq, limits, Rmax, opts);

  FibredEmbedding fe;
  fe.fibre = fibre;
  fe.fibre_base = base;
  for (std::size_t m = 0; m < seq.size(); ++m) {
    const auto& lim = limits[assign[m]];
    // delegate to the single-limit construction, then widen each motion to a
    // product isometry touching only the assigned coordinate
    FibredEmbedding one = build_from_action({seq[m]}, lim, Rmax, opts);
    fe.Rp.push_back(one.Rp[0]);
    const auto n = one.components[0].elements.size();
    fe.section.emplace_back(n, base);
    std::vector<std::unordered_map<std::uint32_t, Isometry>> charts(n);
    for (std::size_t g = 0; g < n; ++g) {
      for (auto& [x, motion] : one.triv[0][g]) {
        ProductIsometry p;
        for (std::size_t i = 0; i < limits.size(); ++i) {
          p.src.push_back(static_cast<std::uint32_t>(i));
          p.motion.push_back(i == assign[m] ? motion : identity_isometry(limits[i].space));
        }
        charts[g].emplace(x, Isometry(std::move(p)));
      }
    }
    fe.triv.push_back(std::move(charts));
    fe.components.push_back(std::move(one.components[0]));
  }
  return fe;
}

namespace {

using nlohmann::json;

json motion_to_json(const Isometry& iso);

json rigid_to_json(const RigidMotion& m) {
  json j;
  if (m.orthogonal) {
    json rows = json::array();
    for (int i = 0; i < m.orthogonal->rows(); ++i) {
      json row = json::array();
      for (int k = 0; k < m.orthogonal->cols(); ++k) row.push_back((*m.orthogonal)(i, k));
      rows.push_back(row);
    }
    j["orthogonal"] = rows;
  } else {
    j["perm"] = m.perm;
    j["sign"] = m.sign;
  }
  json shift = json::array();
  for (int i = 0; i < m.shift.size(); ++i) shift.push_back(m.shift[i]);
  j["shift"] = shift;
  return j;
}

json motion_to_json(const Isometry& iso) {
  if (auto* m = std::get_if<RigidMotion>(&iso.v)) return rigid_to_json(*m);
  const auto& p = std::get<ProductIsometry>(iso.v);
  json j;
  j["src"] = p.src;
  json motions = json::array();
  for (auto& mm : p.motion) motions.push_back(motion_to_json(mm));
  j["motions"] = motions;
  return j;
}

json point_to_json(const Point& p) {
  if (auto* v = std::get_if<Eigen::VectorXd>(&p.v)) {
    json arr = json::array();
    for (int i = 0; i < v->size(); ++i) arr.push_back((*v)[i]);
    return arr;
  }
  if (auto* i = std::get_if<std::int64_t>(&p.v)) return *i;
  json arr = json::array();
  for (auto& q : p.parts()) arr.push_back(point_to_json(q));
  return arr;
}

}  // namespace

std::string FibredEmbedding::to_json() const {
  json j;
  j["components"] = json::array();
  for (std::size_t m = 0; m < components.size(); ++m) {
    json c;
    c["name"] = components[m].mg.name;
    c["size"] = components[m].elements.size();
    c["radius"] = Rp[m];
    json sec = json::array();
    for (auto& p : section[m]) sec.push_back(point_to_json(p));
    c["section"] = sec;
    json charts = json::array();
    for (std::uint32_t g = 0; g < triv[m].size(); ++g) {
      json chart;
      chart["center"] = g;
      json entries = json::array();
      std::vector<std::uint32_t> xs;
      for (auto& [x, iso] : triv[m][g]) xs.push_back(x);
      std::sort(xs.begin(), xs.end());
      for (auto x : xs) {
        json e;
        e["x"] = x;
        e["motion"] = motion_to_json(triv[m][g].at(x));
        entries.push_back(e);
      }
      chart["entries"] = entries;
      charts.push_back(chart);
    }
    c["trivializations"] = charts;
    j["components"].push_back(c);
  }
  return j.dump();
}

}  // namespace cayley
