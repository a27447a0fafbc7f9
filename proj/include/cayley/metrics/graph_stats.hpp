#pragma once

#include <cstdint>

#include "cayley/marked/marked_group.hpp"

namespace cayley {

/// Girth (0 when the simple underlying graph is a tree) and diameter of the
/// Cayley graph of a finite marked group. Parallel colored edges and loops are
/// collapsed for the girth; vertex transitivity makes a single BFS root
/// sufficient for both values.
struct GirthDiameter {
  std::uint32_t girth = 0;
  std::uint32_t diameter = 0;
};
GirthDiameter girth_diameter(const MarkedGroup& mg, std::uint64_t cap = 1u << 22);

}  // namespace cayley
