#pragma once

#include "cayley/fibred/fibred.hpp"
#include "cayley/metrics/folner.hpp"

namespace cayley {

/// Almost-fragmentary action of the ball K = B(e, r) of a marked group on a
/// metric space at base point y: alpha assigns isometries to ball elements;
/// d(y·alpha(g1 g2), (y·alpha(g1))·alpha(g2)) <= eps for composable pairs.
struct FragmentaryAction {
  MarkedGroup mg;
  std::uint32_t domain_radius = 0;
  MetricSpace space;
  std::unordered_map<Elem, Isometry> alpha;
  Point y;
  double eps = 0;
};

struct FragmentaryReport {
  double max_defect = 0;
  std::size_t triples = 0;
  bool pass = true;
  std::vector<std::pair<Elem, Elem>> witnesses;  // violating (g1, g2)
};

/// Exhaustive check of the almost-fragmentary inequality over all (g1, g2)
/// with g1, g2, g1g2 in the domain ball.
FragmentaryReport verify_fragmentary(const FragmentaryAction& fa, double tol = 1e-9);

/// Control-pair sandwich of the orbit map g -> y·alpha(g) over the domain
/// ball, with exact word distances.
ControlReport fragmentary_orbit_control(const FragmentaryAction& fa, const ControlPair& cp,
                                        double tol = 1e-9, const BallOptions& opts = {});

/// Recovery of a fragmentary action from a fibred embedding, component m:
/// space = scaled ell_q product over all of G_m, alpha(g) reads coordinate gx
/// through the transition isometry t_{x,gx,R'_m}; eps = 0.
FragmentaryAction recover_fragmentary_finite(const FibredEmbedding& fe, std::size_t m, double q);

/// Folner variant: product over F only, identity outside gx in F; declared
/// eps = 3 delta^{1/q} omega(R'_m), domain ball radius floor(R'_m/2).
FragmentaryAction recover_fragmentary_folner(const FibredEmbedding& fe, std::size_t m, double q,
                                             const FolnerSet& F, const ControlPair& cp);

/// The quantitative envelope ((1-2 delta) rho, omega + 2 delta') for the
/// Folner recovery of a (delta, R') set.
ControlPair folner_envelope(const ControlPair& cp, double delta, double q, std::uint32_t Rp);

/// Measures isometry defects of every alpha(g) on the orbit sample; exact 0
/// for the finite recovery, Folner-small for the amenable one.
double fragmentary_isometry_defect(const FragmentaryAction& fa);

}  // namespace cayley
