#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/marked/marked_group.hpp"

namespace cayley {

/// Rooted, edge-colored, edge-oriented Cayley diagram ball B(e, R) as a finite
/// combinatorial record. Vertex 0 is the root; vertices are ordered by
/// (distance, first-reaching word in lex order on (color, orientation)).
/// Edges of color j are oriented pairs (u, v) with s_j · elem(u) = elem(v),
/// present iff both endpoints lie in the ball (induced sub-diagram).
struct CayleyBall {
  std::uint32_t radius = 0;
  std::uint32_t k = 0;
  std::vector<Elem> vertices;
  std::vector<std::uint32_t> distance;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> edges;  // per color
  std::unordered_map<Elem, std::uint32_t> index;

  // Deterministic per-color adjacency: out[j][u] / in[j][u] is the unique
  // neighbor through color j, or -1.
  std::vector<std::vector<std::int32_t>> out, in;

  std::size_t size() const { return vertices.size(); }
  std::optional<std::uint32_t> find(const Elem& e) const {
    auto it = index.find(e);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  /// Sub-ball of radius r <= radius (vertices at distance <= r, induced edges).
  CayleyBall restrict(std::uint32_t r) const;

  std::string to_dot() const;
  std::string to_json() const;
};

struct BallOptions {
  std::uint64_t max_vertices = 5'000'000;
};

CayleyBall ball(const MarkedGroup& mg, std::uint32_t R, const BallOptions& opts = {});

}  // namespace cayley
