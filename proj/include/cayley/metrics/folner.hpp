#pragma once

#include <cstdint>
#include <vector>

#include "cayley/marked/marked_group.hpp"

namespace cayley {

/// (eps, R)-Folner set: sharp(boundary(F,R) \ F) / sharp(F) < eps, reading the
/// R-neighborhood boundary in the strict sense (the literal neighborhood of
/// the source text contains F and would never beat eps < 1; the report of any
/// consumer carries this convention).
struct FolnerSet {
  std::vector<Elem> members;
  double eps = 0;
  std::uint32_t R = 0;
  double ratio = 0;
  bool whole_group = false;
};

struct FolnerOptions {
  // when false the search stops at proper balls and may fail with
  // NoFolnerSetFound; when true the whole group (ratio 0) is the fallback
  bool allow_whole_group = true;
  // candidate balls are kept at most this fraction of the group; 0.5 is the
  // regime where the expander edge-expansion bound applies
  double max_fraction = 1.0;
};

/// Grows balls around e and returns the first one satisfying the ratio bound;
/// the whole group (ratio 0) is the final candidate unless disallowed.
/// Throws Error("NoFolnerSetFound") when nothing qualifies.
FolnerSet folner_search(const MarkedGroup& mg, double eps, std::uint32_t R,
                        const FolnerOptions& opts = {});

/// Wraps an explicit subset as a FolnerSet, computing its exact ratio.
FolnerSet folner_from_set(const MarkedGroup& mg, std::vector<Elem> members, double eps,
                          std::uint32_t R);

}  // namespace cayley
