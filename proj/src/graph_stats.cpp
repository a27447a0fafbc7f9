#include "cayley/metrics/graph_stats.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cayley {

GirthDiameter girth_diameter(const MarkedGroup& mg, std::uint64_t cap) {
  auto elems = enumerate_elements(mg, cap);
  std::unordered_map<Elem, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  // simple underlying graph: distinct endpoints, parallels collapsed
  std::vector<std::set<std::uint32_t>> adj(elems.size());
  for (std::uint32_t u = 0; u < elems.size(); ++u) {
    for (auto& s : mg.generators) {
      for (const Elem& img : {mg.group->mul(s, elems[u]), mg.group->mul(mg.group->inv(s), elems[u])}) {
        auto v = index.at(img);
        if (v != u) {
          adj[u].insert(v);
          adj[v].insert(u);
        }
      }
    }
  }

  // single-root BFS: diameter = eccentricity of e, girth = min over non-tree
  // edges of d(u)+d(v)+1 (vertex transitivity)
  std::vector<std::int64_t> dist(elems.size(), -1);
  std::vector<std::int64_t> parent(elems.size(), -1);
  std::deque<std::uint32_t> queue{0};
  dist[0] = 0;
  GirthDiameter out;
  std::uint32_t best_cycle = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    out.diameter = std::max<std::uint32_t>(out.diameter, static_cast<std::uint32_t>(dist[u]));
    for (auto v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      } else if (static_cast<std::int64_t>(v) != parent[u] && u < v) {
        auto len = static_cast<std::uint32_t>(dist[u] + dist[v] + 1);
        if (best_cycle == 0 || len < best_cycle) best_cycle = len;
      }
    }
  }
  out.girth = best_cycle;
  return out;
}

}  // namespace cayley
