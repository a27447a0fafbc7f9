#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/marked/ball.hpp"

namespace cayley {

/// Root-preserving bijection between two balls. `witness` records which test
/// produced it: rooted-diagram isomorphism, or the word-collision test (a
/// partial isomorphism of groups in the sense of the neighborhood basis).
struct PartialIso {
  enum class Witness { DiagramIso, WordCollision };
  std::uint32_t radius = 0;
  std::vector<std::uint32_t> map;  // b1 vertex -> b2 vertex
  Witness witness = Witness::DiagramIso;
};

/// Isomorphism of rooted edge-colored edge-oriented diagrams. Exploits
/// determinism: the only candidate map grows from the roots along colored
/// oriented edges; returns it iff it is a total bijection preserving every
/// edge in both directions.
std::optional<PartialIso> diagram_iso(const CayleyBall& b1, const CayleyBall& b2);

/// Partial isomorphism of groups induced by t_j -> s_j on the R-balls:
/// the diagram-grown bijection, additionally required to satisfy
/// beta(g1·g2) = beta(g1)·beta(g2) for all ball pairs with product in the
/// ball. Strictly stronger than diagram_iso at the same radius.
std::optional<PartialIso> partial_group_iso(const MarkedGroup& mg1, const MarkedGroup& mg2,
                                            std::uint32_t R, const BallOptions& opts = {});

/// Largest R <= Rmax with diagram-isomorphic R-balls (monotone in R, so a
/// binary search over restrictions of the two Rmax-balls); -1 when even R=0
/// fails (possible only through identity-generator color mismatches).
int convergence_radius(const MarkedGroup& mg1, const MarkedGroup& mg2, std::uint32_t Rmax,
                       const BallOptions& opts = {});

/// Rooted unlabeled graph ball: forgets colors and orientations.
struct RootedGraph {
  std::uint32_t radius = 0;
  std::vector<std::vector<std::uint32_t>> adj;  // simple adjacency, vertex 0 = root
  std::vector<std::uint32_t> distance;
};
RootedGraph forget_structure(const CayleyBall& b);

/// Rooted graph isomorphism via iterated color refinement seeded by root
/// distance, with backtracking over refinement cells.
bool rooted_graph_iso(const RootedGraph& g1, const RootedGraph& g2);

/// Groups indices of a same-k family into classes with pairwise
/// diagram-isomorphic R-balls. Classes recurring at least `recur_threshold`
/// times within the window are flagged boundary candidates (finite-window
/// approximation only; the true boundary is a limit object).
struct BoundaryScan {
  std::vector<int> class_of;                 // per index
  std::vector<std::vector<int>> classes;     // class -> indices
  std::vector<bool> boundary_candidate;      // per class
};
BoundaryScan boundary_scan(const std::vector<MarkedGroup>& seq, std::uint32_t R,
                           int recur_threshold = 2, const BallOptions& opts = {});

}  // namespace cayley
