#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/fibred/isometry.hpp"
#include "cayley/marked/iso.hpp"
#include "cayley/metrics/control_pair.hpp"

namespace cayley {

/// One component of the disjoint union: a finite marked group with its
/// canonical element enumeration and exact word metric.
struct FibredComponent {
  MarkedGroup mg;
  std::vector<Elem> elements;
  std::unordered_map<Elem, std::uint32_t> index;
  WordMetric metric;

  std::uint32_t at(const Elem& e) const {
    auto it = index.find(e);
    if (it == index.end()) throw Error("BackendMismatch", "element outside component");
    return it->second;
  }
};
FibredComponent make_component(const MarkedGroup& mg);

/// Ball form of a fibred coarse embedding of a disjoint union: per component
/// a radius R'_m, a section point per vertex, and for each center g a
/// trivialization assigning an isometry of the model fibre to every vertex of
/// B(g, R'_m).
struct FibredEmbedding {
  std::vector<FibredComponent> components;
  MetricSpace fibre;
  Point fibre_base;
  std::vector<std::uint32_t> Rp;
  std::vector<std::vector<Point>> section;                                   // [m][x]
  std::vector<std::vector<std::unordered_map<std::uint32_t, Isometry>>> triv;  // [m][g][x]

  std::string to_json() const;
};

struct FibredWitness {
  std::size_t m = 0;
  std::uint32_t g = 0, g2 = 0, x1 = 0, x2 = 0;
  double value = 0, bound = 0;
  std::string what;
};

struct FibredReport {
  bool isometries_ok = true;    // condition (1)
  bool sandwich_ok = true;      // condition (2)
  bool transitions_ok = true;   // condition (3)
  bool radii_nondecreasing = true;
  bool radii_growing = true;    // finite-window proxy for R'_m -> infinity
  bool transitions_bit_stable = true;  // records identical, not just within tol
  double max_isometry_defect = 0;
  double max_transition_dev = 0;
  std::vector<FibredWitness> violations;
  bool pass() const { return isometries_ok && sandwich_ok && transitions_ok; }
};

FibredReport verify_fibred(const FibredEmbedding& fe, const ControlPair& cp, double tol = 1e-9);

/// A genuine coarse embedding as the degenerate fibred one: constant fibres,
/// section = f, identity trivializations, R'_m = diam(G_m).
FibredEmbedding genuine_to_fibred(const std::vector<MarkedGroup>& components,
                                  const std::vector<std::vector<Point>>& images,
                                  MetricSpace fibre, Point fibre_base);

/// Equivariant coarse embedding of a (possibly limit-backend) marked group:
/// f(g) = y · action(g), right action by isometries, total on the window the
/// builders request.
struct EquivariantEmbedding {
  MarkedGroup mg;
  MetricSpace space;
  Point y;
  std::function<std::optional<Isometry>(const Elem&)> action;
  ControlPair cp;
};

/// Fibred embedding from an equivariant action on the Cayley limit of a
/// convergent sequence: R'_m = floor(R_m/2), s(x) = y, and
/// t_{g,R'_m}(x) = z -> z · action(beta_m(x g^-1)).
FibredEmbedding build_from_action(const std::vector<MarkedGroup>& seq,
                                  const EquivariantEmbedding& ee, std::uint32_t Rmax,
                                  const BallOptions& opts = {});

/// Finite-boundary variant: several candidate limits with their actions; each
/// component is assigned the limit of largest convergence radius (smallest
/// index on ties), the fibre is the ell_q product of the target spaces, and
/// the trivialization acts on the assigned coordinate only.
FibredEmbedding build_from_action_cover(const std::vector<MarkedGroup>& seq,
                                        const std::vector<EquivariantEmbedding>& limits, double q,
                                        std::uint32_t Rmax, const BallOptions& opts = {});

/// Indices of the limit assigned per component by build_from_action_cover.
std::vector<std::size_t> cover_assignment(const std::vector<MarkedGroup>& seq,
                                          const std::vector<EquivariantEmbedding>& limits,
                                          std::uint32_t Rmax, const BallOptions& opts = {});

}  // namespace cayley
