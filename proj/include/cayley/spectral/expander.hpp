#pragma once

#include <functional>

#include "cayley/metrics/control_pair.hpp"
#include "cayley/spectral/spectral.hpp"

namespace cayley {

/// Embedded-expander data: word-specified subgroups Lambda_m inside the
/// ambient family, with the D-Lipschitz subgroup inclusion and per-member
/// spectral gaps.
struct EmbeddedExpanderCertificate {
  std::vector<std::size_t> indices;
  std::vector<MarkedGroup> subgroups;          // Lambda_m = Cay(H_m; t_j^{(m)})
  std::vector<std::vector<Elem>> sub_elements; // vertex sets, BFS order
  std::vector<double> lambda1s;
  double inf_lambda1 = 0;
  std::uint32_t D = 0;             // max word length
  std::uint32_t degree_bound = 0;  // 2l
  bool lipschitz_verified = false; // exhaustive pair check on ambients <= cap
  bool sizes_increasing = true;
};

/// Evaluates the words over each ambient marking, generates the subgroup,
/// builds its Cayley graph and spectral gap. Throws
/// Error("SubgroupTrivial") when every word evaluates to the identity in
/// every member.
EmbeddedExpanderCertificate embedded_expander_search(const std::vector<MarkedGroup>& seq,
                                                     const std::vector<std::vector<int>>& words,
                                                     std::uint64_t lipschitz_cap = 5000);

struct ConcentrationEntry {
  std::size_t index = 0;
  double moment = 0;       // (1/|V|) sum ||f(iota v) - mean||^q
  double edge_energy = 0;  // (1/|V|) sum over unordered edges ||f(v)-f(w)||^q
  double bound = 0;        // C_E * d * omega(D)^q
  double t_half = 0;       // radius with at least half the mass by Markov
  std::size_t n_half = 0;
  std::uint32_t r_allowed = 0;  // largest r with rho(r) <= 2 t_half
  std::uint32_t r_fit = 0;      // radius needed to hold n_half points
  bool violated = false;        // concentration incompatible with injectivity
};

struct ConcentrationReport {
  std::vector<ConcentrationEntry> entries;
  bool any_violation = false;
};

/// Quantitative non-embeddability witness: mean-centered q-moments of a
/// candidate embedding against the Poincare bound, and the ball-counting
/// contradiction with the claimed compression rho at the tested scale.
ConcentrationReport concentration_witness(
    const EmbeddedExpanderCertificate& cert, const std::vector<MarkedGroup>& ambient_seq,
    const std::function<Eigen::VectorXd(std::size_t, const Elem&)>& f, int target_dim, double q,
    double C_E, const ControlPair& cp);

}  // namespace cayley
