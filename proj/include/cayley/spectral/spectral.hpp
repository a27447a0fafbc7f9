#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/marked/marked_group.hpp"
#include "cayley/metrics/graph_stats.hpp"

namespace cayley {

/// Cayley multigraph of a finite marked group: adjacency multiset
/// {s x, s^-1 x : s in S}; degree is the multiset size 2k; loops from
/// identity generators stay in the degree but not in the edge list; edges are
/// kept once per unordered pair with multiplicity.
struct CayleyGraph {
  std::size_t n = 0;
  std::uint32_t degree = 0;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> edges;  // (u, v, mult)
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;       // (v, mult)
};
/// With require_full the BFS closure must exhaust the backend order
/// (Error("Disconnected") otherwise); subgroup graphs pass false, their
/// closure being the vertex set by construction.
CayleyGraph build_cayley_graph(const MarkedGroup& mg, std::uint64_t cap = 1u << 22,
                               bool require_full = true);

/// First strictly positive eigenvalue of the normalized Laplacian I - A/deg.
/// Dense symmetric solver below 5000 vertices, Lanczos with full
/// reorthogonalization above; tolerance 1e-8. Throws Error("Disconnected")
/// when the marking does not generate.
double lambda1(const MarkedGroup& mg);
double lambda1_graph(const CayleyGraph& g);

/// lambda_min^+ of the combinatorial Laplacian deg·I - A (dense route,
/// independent of the normalized computation).
double combinatorial_gap(const CayleyGraph& g);

struct SpectrumReport {
  std::string id;
  std::size_t vertices = 0;
  std::uint32_t degree = 0;
  double lambda1 = 0;
  double poincare_c2 = 0;  // exact q=2 scalar constant 1/lambda_min^+(comb)
  std::uint32_t girth = 0;
  std::uint32_t diameter = 0;
  static std::string csv_header();
  std::string csv_row(const std::string& family, std::size_t index) const;
};
SpectrumReport spectrum_report(const MarkedGroup& mg);

struct PoincareReport {
  double exact_c2 = 0;     // exact optimal constant for q=2, d=1
  double best_ratio = 0;   // best randomized ratio found
  double C = 0;            // declared constant under test
  bool pass = true;        // best_ratio <= C (+1e-9)
  int trials = 0;
};

/// q=2, d=1: exact optimal constant by eigendecomposition; any (q,d):
/// randomized maximization (Gaussian starts + coordinate-ascent refinement)
/// of sum_v ||f(v)-mean||^q / sum_e ||f(v)-f(w)||^q against C.
PoincareReport poincare_check(const MarkedGroup& mg, double q, int d, int trials, double C,
                              std::uint64_t seed);

}  // namespace cayley
