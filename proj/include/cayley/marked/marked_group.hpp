#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/algebra/group.hpp"

namespace cayley {

/// A group together with an ordered generator tuple. Carries the
/// right-invariant word metric d(g,h) = |g·h^{-1}|.
struct MarkedGroup {
  GroupPtr group;
  std::vector<Elem> generators;
  std::string name;

  std::size_t k() const { return generators.size(); }

  /// Evaluate a word given as signed 1-based generator indices
  /// (+j = s_j, -j = s_j^{-1}).
  Elem eval_word(const std::vector<int>& word) const;
};

/// BFS closure of the generators and their inverses; stops (returning
/// nullopt) once `cap` elements have been found without exhausting the group.
std::optional<std::uint64_t> closure_size(const MarkedGroup& mg, std::uint64_t cap);

/// Checks that the generators generate the (finite) group, comparing BFS
/// closure against the backend order. Groups larger than `cap` are skipped.
bool generates(const MarkedGroup& mg, std::uint64_t cap = 1u << 22);

/// All elements of a finite marked group in ball BFS order.
std::vector<Elem> enumerate_elements(const MarkedGroup& mg, std::uint64_t cap = 1u << 22);

/// Word-metric table for a finite marked group: element -> distance from e.
struct WordMetric {
  std::unordered_map<Elem, std::uint32_t> dist;
  std::uint32_t diameter = 0;
  std::uint32_t operator()(const MarkedGroup& mg, const Elem& a, const Elem& b) const;
};
WordMetric word_metric(const MarkedGroup& mg, std::uint64_t cap = 1u << 22);

}  // namespace cayley
