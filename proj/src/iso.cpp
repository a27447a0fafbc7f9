#include "cayley/marked/iso.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace cayley {

std::optional<PartialIso> diagram_iso(const CayleyBall& b1, const CayleyBall& b2) {
  if (b1.k != b2.k || b1.radius != b2.radius) return std::nullopt;
  if (b1.size() != b2.size()) return std::nullopt;
  const auto n = static_cast<std::uint32_t>(b1.size());
  const std::uint32_t R = b1.radius;

  // Edges joining two boundary vertices (both at distance exactly R) are
  // invisible to the comparison: they encode products of length 2R that the
  // R-ball does not determine. This keeps the convergence radius of the
  // cyclic family at floor((m-1)/2) for odd m as well as even.
  auto eff1 = [&](std::uint32_t u, std::int32_t v) {
    return v >= 0 && (b1.distance[u] < R || b1.distance[v] < R);
  };
  auto eff2 = [&](std::uint32_t u, std::int32_t v) {
    return v >= 0 && (b2.distance[u] < R || b2.distance[v] < R);
  };

  std::vector<std::int32_t> map(n, -1), rmap(n, -1);
  auto assign = [&](std::uint32_t u, std::uint32_t v) {
    if (b1.distance[u] != b2.distance[v]) return false;
    if (map[u] >= 0) return map[u] == static_cast<std::int32_t>(v);
    if (rmap[v] >= 0) return false;
    map[u] = static_cast<std::int32_t>(v);
    rmap[v] = static_cast<std::int32_t>(u);
    return true;
  };

  if (!assign(0, 0)) return std::nullopt;
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t u = queue.front();
    queue.pop_front();
    auto v = static_cast<std::uint32_t>(map[u]);
    for (std::uint32_t j = 0; j < b1.k; ++j) {
      bool e1 = eff1(u, b1.out[j][u]), e2 = eff2(v, b2.out[j][v]);
      if (e1 != e2) return std::nullopt;
      if (e1) {
        auto uu = static_cast<std::uint32_t>(b1.out[j][u]);
        auto vv = static_cast<std::uint32_t>(b2.out[j][v]);
        bool fresh = map[uu] < 0;
        if (!assign(uu, vv)) return std::nullopt;
        if (fresh) queue.push_back(uu);
      }
      e1 = eff1(u, b1.in[j][u]);
      e2 = eff2(v, b2.in[j][v]);
      if (e1 != e2) return std::nullopt;
      if (e1) {
        auto uu = static_cast<std::uint32_t>(b1.in[j][u]);
        auto vv = static_cast<std::uint32_t>(b2.in[j][v]);
        bool fresh = map[uu] < 0;
        if (!assign(uu, vv)) return std::nullopt;
        if (fresh) queue.push_back(uu);
      }
    }
  }
  // Balls are connected through effective edges, so the grown map must be
  // total; effective-edge preservation in both directions was enforced
  // edge-by-edge above.
  for (std::uint32_t u = 0; u < n; ++u)
    if (map[u] < 0) return std::nullopt;

  PartialIso iso;
  iso.radius = b1.radius;
  iso.witness = PartialIso::Witness::DiagramIso;
  iso.map.assign(map.begin(), map.end());
  return iso;
}

std::optional<PartialIso> partial_group_iso(const MarkedGroup& mg1, const MarkedGroup& mg2,
                                            std::uint32_t R, const BallOptions& opts) {
  CayleyBall b1 = ball(mg1, R, opts), b2 = ball(mg2, R, opts);
  auto iso = diagram_iso(b1, b2);
  if (!iso) return std::nullopt;
  // beta(g1 g2) = beta(g1) beta(g2) whenever g1, g2, g1g2 all lie in the ball.
  for (std::uint32_t u1 = 0; u1 < b1.size(); ++u1)
    for (std::uint32_t u2 = 0; u2 < b1.size(); ++u2) {
      Elem prod = mg1.group->mul(b1.vertices[u1], b1.vertices[u2]);
      auto w = b1.find(prod);
      if (!w) continue;
      Elem img = mg2.group->mul(b2.vertices[iso->map[u1]], b2.vertices[iso->map[u2]]);
      if (img != b2.vertices[iso->map[*w]]) return std::nullopt;
    }
  iso->witness = PartialIso::Witness::WordCollision;
  return iso;
}

int convergence_radius(const MarkedGroup& mg1, const MarkedGroup& mg2, std::uint32_t Rmax,
                       const BallOptions& opts) {
  CayleyBall big1 = ball(mg1, Rmax, opts), big2 = ball(mg2, Rmax, opts);
  if (diagram_iso(big1, big2)) return static_cast<int>(Rmax);
  if (!diagram_iso(big1.restrict(0), big2.restrict(0))) return -1;
  // iso at R implies iso at R' <= R: binary search on the largest good R
  std::uint32_t lo = 0, hi = Rmax;  // iso holds at lo, fails at hi
  while (hi - lo > 1) {
    std::uint32_t mid = lo + (hi - lo) / 2;
    if (diagram_iso(big1.restrict(mid), big2.restrict(mid)))
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<int>(lo);
}

RootedGraph forget_structure(const CayleyBall& b) {
  RootedGraph g;
  g.radius = b.radius;
  g.distance = b.distance;
  g.adj.assign(b.size(), {});
  std::vector<std::vector<bool>> seen(b.size());
  for (auto& row : seen) row.assign(b.size(), false);
  for (std::uint32_t j = 0; j < b.k; ++j)
    for (auto [u, v] : b.edges[j]) {
      if (u == v || seen[u][v]) continue;  // collapse loops and parallels
      seen[u][v] = seen[v][u] = true;
      g.adj[u].push_back(v);
      g.adj[v].push_back(u);
    }
  for (auto& l : g.adj) std::sort(l.begin(), l.end());
  return g;
}

namespace {

// Iterated neighborhood color refinement seeded with (is_root, root distance),
// run jointly on both graphs so color ids are comparable across them.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> refine_pair(
    const RootedGraph& g1, const RootedGraph& g2) {
  auto seed = [](const RootedGraph& g) {
    std::vector<std::uint32_t> c(g.adj.size());
    for (std::uint32_t u = 0; u < c.size(); ++u) c[u] = (u == 0) ? 0 : g.distance[u] + 1;
    return c;
  };
  std::vector<std::uint32_t> c1 = seed(g1), c2 = seed(g2);
  for (;;) {
    using SigKey = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
    auto keys = [](const RootedGraph& g, const std::vector<std::uint32_t>& c) {
      std::vector<SigKey> ks(g.adj.size());
      for (std::uint32_t u = 0; u < g.adj.size(); ++u) {
        std::vector<std::uint32_t> sig;
        sig.reserve(g.adj[u].size());
        for (auto v : g.adj[u]) sig.push_back(c[v]);
        std::sort(sig.begin(), sig.end());
        ks[u] = {c[u], std::move(sig)};
      }
      return ks;
    };
    auto k1 = keys(g1, c1), k2 = keys(g2, c2);
    std::map<SigKey, std::uint32_t> palette;  // sorted keys -> canonical ids
    for (auto& k : k1) palette.emplace(k, 0);
    for (auto& k : k2) palette.emplace(k, 0);
    std::uint32_t id = 0;
    for (auto& [k, v] : palette) v = id++;
    std::vector<std::uint32_t> n1(c1.size()), n2(c2.size());
    for (std::uint32_t u = 0; u < c1.size(); ++u) n1[u] = palette.at(k1[u]);
    for (std::uint32_t u = 0; u < c2.size(); ++u) n2[u] = palette.at(k2[u]);
    if (n1 == c1 && n2 == c2) return {c1, c2};
    c1 = std::move(n1);
    c2 = std::move(n2);
  }
}

bool extend(const RootedGraph& g1, const RootedGraph& g2, const std::vector<std::uint32_t>& c1,
            const std::vector<std::uint32_t>& c2, std::vector<std::int32_t>& map,
            std::vector<std::int32_t>& rmap, std::uint32_t u) {
  const auto n = static_cast<std::uint32_t>(g1.adj.size());
  if (u == n) return true;
  if (map[u] >= 0) return extend(g1, g2, c1, c2, map, rmap, u + 1);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (rmap[v] >= 0 || c1[u] != c2[v]) continue;
    // adjacency consistency with already-mapped vertices
    bool ok = g1.adj[u].size() == g2.adj[v].size();
    for (auto w : g1.adj[u]) {
      if (!ok) break;
      if (map[w] >= 0) {
        auto& l = g2.adj[v];
        ok = std::binary_search(l.begin(), l.end(), static_cast<std::uint32_t>(map[w]));
      }
    }
    for (auto w : g2.adj[v]) {
      if (!ok) break;
      if (rmap[w] >= 0) {
        auto& l = g1.adj[u];
        ok = std::binary_search(l.begin(), l.end(), static_cast<std::uint32_t>(rmap[w]));
      }
    }
    if (!ok) continue;
    map[u] = static_cast<std::int32_t>(v);
    rmap[v] = static_cast<std::int32_t>(u);
    if (extend(g1, g2, c1, c2, map, rmap, u + 1)) return true;
    map[u] = -1;
    rmap[v] = -1;
  }
  return false;
}

}  // namespace

bool rooted_graph_iso(const RootedGraph& g1, const RootedGraph& g2) {
  if (g1.adj.size() != g2.adj.size() || g1.radius != g2.radius) return false;
  auto [c1, c2] = refine_pair(g1, g2);
  // color class histograms must agree (ids are shared between the graphs)
  std::map<std::uint32_t, int> h1, h2;
  for (std::uint32_t u = 0; u < c1.size(); ++u) ++h1[c1[u]];
  for (std::uint32_t v = 0; v < c2.size(); ++v) ++h2[c2[v]];
  if (h1 != h2) return false;
  if (c1[0] != c2[0]) return false;
  std::vector<std::int32_t> map(g1.adj.size(), -1), rmap(g2.adj.size(), -1);
  map[0] = 0;
  rmap[0] = 0;
  return extend(g1, g2, c1, c2, map, rmap, 1);
}

BoundaryScan boundary_scan(const std::vector<MarkedGroup>& seq, std::uint32_t R,
                           int recur_threshold, const BallOptions& opts) {
  BoundaryScan scan;
  scan.class_of.assign(seq.size(), -1);
  std::vector<CayleyBall> reps;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && seq[i].k() != seq[0].k())
      throw Error("BackendMismatch", "boundary_scan requires equal markings size");
    CayleyBall b = ball(seq[i], R, opts);
    int cls = -1;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (diagram_iso(reps[c], b)) {
        cls = static_cast<int>(c);
        break;
      }
    }
    if (cls < 0) {
      cls = static_cast<int>(reps.size());
      reps.push_back(std::move(b));
      scan.classes.emplace_back();
    }
    scan.class_of[i] = cls;
    scan.classes[cls].push_back(static_cast<int>(i));
  }
  scan.boundary_candidate.resize(scan.classes.size());
  for (std::size_t c = 0; c < scan.classes.size(); ++c)
    scan.boundary_candidate[c] = static_cast<int>(scan.classes[c].size()) >= recur_threshold;
  return scan;
}

}  // namespace cayley
