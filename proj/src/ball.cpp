#include "cayley/marked/ball.hpp"

#include <deque>
#include <sstream>

namespace cayley {

CayleyBall ball(const MarkedGroup& mg, std::uint32_t R, const BallOptions& opts) {
  const Group& G = *mg.group;
  const std::uint32_t k = static_cast<std::uint32_t>(mg.k());

  CayleyBall b;
  b.radius = R;
  b.k = k;

  std::vector<Elem> arrows;  // (color, orientation) pairs in lex order
  for (auto& s : mg.generators) {
    arrows.push_back(s);
    arrows.push_back(G.inv(s));
  }

  Elem e = G.identity();
  b.vertices.push_back(e);
  b.distance.push_back(0);
  b.index.emplace(e, 0);

  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t u = queue.front();
    queue.pop_front();
    if (b.distance[u] == R) continue;
    Elem g = b.vertices[u];  // copy: vertex storage may reallocate below
    for (auto& a : arrows) {
      Elem h = G.mul(a, g);
      if (b.index.count(h)) continue;
      if (b.vertices.size() >= opts.max_vertices)
        throw Error("BallOverflow", "ball exceeded " + std::to_string(opts.max_vertices));
      auto v = static_cast<std::uint32_t>(b.vertices.size());
      b.index.emplace(h, v);
      b.vertices.push_back(std::move(h));
      b.distance.push_back(b.distance[u] + 1);
      queue.push_back(v);
    }
  }

  // Induced edges: color j from u to the vertex of s_j·u, if present.
  b.edges.assign(k, {});
  b.out.assign(k, std::vector<std::int32_t>(b.size(), -1));
  b.in.assign(k, std::vector<std::int32_t>(b.size(), -1));
  for (std::uint32_t j = 0; j < k; ++j) {
    for (std::uint32_t u = 0; u < b.size(); ++u) {
      Elem h = G.mul(mg.generators[j], b.vertices[u]);
      auto it = b.index.find(h);
      if (it == b.index.end()) continue;
      b.edges[j].emplace_back(u, it->second);
      b.out[j][u] = static_cast<std::int32_t>(it->second);
      b.in[j][it->second] = static_cast<std::int32_t>(u);
    }
  }
  return b;
}

CayleyBall CayleyBall::restrict(std::uint32_t r) const {
  if (r >= radius) return *this;
  CayleyBall b;
  b.radius = r;
  b.k = k;
  std::vector<std::int32_t> remap(size(), -1);
  for (std::uint32_t u = 0; u < size(); ++u) {
    if (distance[u] > r) continue;
    remap[u] = static_cast<std::int32_t>(b.vertices.size());
    b.vertices.push_back(vertices[u]);
    b.distance.push_back(distance[u]);
    b.index.emplace(vertices[u], static_cast<std::uint32_t>(b.vertices.size() - 1));
  }
  b.edges.assign(k, {});
  b.out.assign(k, std::vector<std::int32_t>(b.size(), -1));
  b.in.assign(k, std::vector<std::int32_t>(b.size(), -1));
  for (std::uint32_t j = 0; j < k; ++j)
    for (auto [u, v] : edges[j]) {
      if (remap[u] < 0 || remap[v] < 0) continue;
      auto uu = static_cast<std::uint32_t>(remap[u]), vv = static_cast<std::uint32_t>(remap[v]);
      b.edges[j].emplace_back(uu, vv);
      b.out[j][uu] = static_cast<std::int32_t>(vv);
      b.in[j][vv] = static_cast<std::int32_t>(uu);
    }
  return b;
}

std::string CayleyBall::to_dot() const {
  std::ostringstream os;
  os << "digraph ball {\n  rankdir=LR;\n";
  for (std::uint32_t u = 0; u < size(); ++u)
    os << "  v" << u << " [label=\"" << u << (u == 0 ? " (root)" : "")
       << "\\nd=" << distance[u] << "\"];\n";
  for (std::uint32_t j = 0; j < k; ++j)
    for (auto [u, v] : edges[j])
      os << "  v" << u << " -> v" << v << " [label=\"" << j << "\", colorscheme=dark28, color="
         << (j % 8) + 1 << "];\n";
  os << "}\n";
  return os.str();
}

std::string CayleyBall::to_json() const {
  std::ostringstream os;
  os << "{\"radius\":" << radius << ",\"k\":" << k << ",\"vertices\":[";
  for (std::uint32_t u = 0; u < size(); ++u)
    os << (u ? "," : "") << "\"" << bytes::hex(vertices[u]) << "\"";
  os << "],\"distances\":[";
  for (std::uint32_t u = 0; u < size(); ++u) os << (u ? "," : "") << distance[u];
  os << "],\"edges\":[";
  for (std::uint32_t j = 0; j < k; ++j) {
    os << (j ? "," : "") << "[";
    for (std::size_t i = 0; i < edges[j].size(); ++i)
      os << (i ? "," : "") << "[" << edges[j][i].first << "," << edges[j][i].second << "]";
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace cayley
