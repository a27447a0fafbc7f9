#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/marked/marked_group.hpp"

namespace cayley {

/// Elementary + cycle generator systems of SL(m, F_{p^n}), m odd:
/// S_m = (sigma, upsilon, tau), T_m = (sigma, sigma^T, upsilon, tau), where
/// sigma has a 1 at (1,2), upsilon carries the chosen generator of the
/// multiplicative group there, and tau is the cyclic permutation matrix with
/// 1s at (i+1, i) and (1, m). With `explicit_ring` the coefficients live in
/// F_p[t]/(t^n - t) and upsilon carries t instead of a primitive element.
struct SLMarkings {
  MarkedGroup S;  // 3 generators
  MarkedGroup T;  // 4 generators
  Elem sigma, sigma_t, upsilon, tau;
  std::uint64_t primitive = 0;  // encoding of the chosen generator (field case)
};
SLMarkings sl_markings(std::uint32_t m, std::uint32_t p, std::uint32_t n,
                       bool explicit_ring = false);

/// P_m = (sigma, tau), Q_m = (sigma, sigma^T, tau) over SL(m, Z/lZ).
struct SLZMarkings {
  MarkedGroup P;
  MarkedGroup Q;
};
SLZMarkings slz_markings(std::uint32_t m, std::uint64_t l);

/// The mod-p Selberg pair [[1,2],[0,1]], [[1,0],[2,1]] over SL(2, F_p).
MarkedGroup selberg(std::uint32_t p);

/// Cayley limit of the S_m system: N_>(Z, F_p[t]) ⋊ Z with the derived
/// marking (I+E01, I+tE01, shift); and of the T_m system: SL(Z, F_p[t]) ⋊ Z
/// with (I+E01, I+E10, I+tE01, shift).
MarkedGroup sl_limit_ntri(std::uint32_t p);
MarkedGroup sl_limit_full(std::uint32_t p);

/// Standard (k+l)-marking of G wr H:
/// ((s_1 d_e, e), ..., (s_k d_e, e), (e, t_1), ..., (e, t_l)).
MarkedGroup standard_wreath_marking(const MarkedGroup& mgG, const MarkedGroup& mgH);

/// Marking of G wr P with the base generators placed at centers of pairwise
/// disjoint r-balls of Cay(P): ((g_1 d_{x_1}, e), ..., (g_k d_{x_k}, e),
/// (e, t_1), ..., (e, t_l)), x_1 = e_P, centers greedy in BFS order.
struct AbsorptionMarking {
  MarkedGroup marked;
  std::vector<Elem> centers;  // k elements of P
};
AbsorptionMarking absorption_marking(const MarkedGroup& mgG, const MarkedGroup& mgP,
                                     std::uint32_t r);

/// r_m = min{R_m, floor(diam(Cay(P_m))/(4k))} from the absorption argument.
std::uint32_t absorption_radius(int R_m, const MarkedGroup& mgP, std::size_t k);

/// Cayley limit of the absorption family over P_m = Z/mZ:
/// (C_1 x ... x C_k) wr Z where C_j is cyclic of the order of g_j, marked
/// ((c_1 d_0, 0), ..., (c_k d_0, 0), (e, 1)). The marking is derived from the
/// generator correspondence, not printed in the source construction.
MarkedGroup absorption_limit_marking(const MarkedGroup& mgG);

std::uint64_t element_order(const Group& g, const Elem& a, std::uint64_t cap = 1 << 20);

/// Direct-product marked group (k1+k2 generators, identity padding).
MarkedGroup direct_product_marking(const MarkedGroup& a, const MarkedGroup& b);

/// Upper triangular product: G_m x H_n for m <= n, enumerated in the order
/// (0,0) < (0,1) < (1,1) < (0,2) < (1,2) < (2,2) < ...
std::vector<MarkedGroup> upper_triangular_product(const std::vector<MarkedGroup>& seqG,
                                                  const std::vector<MarkedGroup>& seqH);
/// Index pair (m, n) of the l-th upper-triangular product element.
std::pair<std::size_t, std::size_t> upper_triangular_index(std::size_t l);

/// Symmetric group encoding: 2k generators chi_{s_1}..chi_{s_k},
/// theta_{s_1}..theta_{s_k} over Sym(G) (finite G) or
/// Sym_{<aleph_0}(G_inf) ⋊ G_inf (limit backends); requires every s_j != e.
MarkedGroup sym_encoding(const MarkedGroup& mg);

/// The three (k+4)-marking systems of G_n wr SL(2n+3, F_{p^{l_n}}), with the
/// conjugators h_i, k_i with h_i^-1 s_i h_i = t_i and k_i^-1 s_i k_i = u_i.
struct TheoremDMarkings {
  MarkedGroup S, T, U;
  std::vector<Elem> h;  // per slot, elements of the wreath group
  std::vector<Elem> k;
  std::vector<Elem> centers;  // x_j in the SL factor
  std::uint32_t r = 0;
};
TheoremDMarkings theorem_d_markings(const MarkedGroup& lef_member, std::uint32_t p,
                                    std::uint32_t l_n, std::uint32_t n,
                                    std::uint32_t conv_rmax = 3);

/// Theorem E systems over Sym(K_l), K_l = SL(m_i, F_{p^{n_i}}) x Z/n_jZ taken
/// along the upper-triangular enumeration of the two families:
/// Xi_l has 8 generators, Omega_l = Xi_l plus theta_{b1'}.
struct TheoremEMarkings {
  MarkedGroup Xi;     // 8 generators
  MarkedGroup Omega;  // 9 generators
  MarkedGroup K;      // the underlying top marked group (4 generators b1,b2,b3,c)
  std::size_t sl_index = 0, z_index = 0;
};
TheoremEMarkings theorem_e_markings(std::size_t l, std::uint32_t p,
                                    const std::vector<std::uint32_t>& n_seq,
                                    bool explicit_ring = false);

}  // namespace cayley
