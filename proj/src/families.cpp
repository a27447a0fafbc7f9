#include "cayley/families/families.hpp"

#include <algorithm>

#include "cayley/algebra/poly.hpp"
#include "cayley/algebra/ring.hpp"
#include "cayley/marked/iso.hpp"

namespace cayley {

namespace {

std::vector<std::uint64_t> identity_mat(std::uint32_t m, const FiniteRing& R) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(m) * m, R.zero());
  for (std::uint32_t i = 0; i < m; ++i) a[i * m + i] = R.one();
  return a;
}

std::vector<std::uint64_t> cycle_mat(std::uint32_t m, const FiniteRing& R) {
  // 1s at (1, m) and (i+1, i): row 0 has the 1 in the last column
  std::vector<std::uint64_t> a(static_cast<std::size_t>(m) * m, R.zero());
  a[0 * m + (m - 1)] = R.one();
  for (std::uint32_t i = 1; i < m; ++i) a[i * m + (i - 1)] = R.one();
  return a;
}

}  // namespace

SLMarkings sl_markings(std::uint32_t m, std::uint32_t p, std::uint32_t n, bool explicit_ring) {
  if (m < 3 || m % 2 == 0)
    throw Error("EvenRank", "rank must be odd and at least 3, got " + std::to_string(m));

  std::shared_ptr<const FiniteRing> ring;
  std::uint64_t gen;
  if (explicit_ring && n >= 2) {
    // F_p[t]/(t^n - t), generator entry is t itself
    std::vector<std::uint32_t> c(n + 1, 0);
    c[1] = p - 1;  // -t
    c[n] = 1;
    ring = std::make_shared<FiniteRing>(FiniteRing::poly_quotient(p, PolyFp(p, std::move(c)), false));
    gen = ring->from_poly(PolyFp::x(p));
  } else {
    auto fw = make_field(p, n);
    ring = fw.field;
    gen = fw.primitive;
  }

  auto G = matrix_group(m, ring);
  auto sigma_m = identity_mat(m, *ring);
  sigma_m[0 * m + 1] = ring->one();
  auto upsilon_m = identity_mat(m, *ring);
  upsilon_m[0 * m + 1] = gen;
  auto sigma_t_m = identity_mat(m, *ring);
  sigma_t_m[1 * m + 0] = ring->one();

  SLMarkings out;
  out.sigma = matrix_elem(*G, sigma_m);
  out.sigma_t = matrix_elem(*G, sigma_t_m);
  out.upsilon = matrix_elem(*G, upsilon_m);
  out.tau = matrix_elem(*G, cycle_mat(m, *ring));
  out.primitive = gen;
  std::string base = "SL(" + std::to_string(m) + "," + ring->describe() + ")";
  out.S = MarkedGroup{G, {out.sigma, out.upsilon, out.tau}, base + ";S"};
  out.T = MarkedGroup{G, {out.sigma, out.sigma_t, out.upsilon, out.tau}, base + ";T"};
  return out;
}

SLZMarkings slz_markings(std::uint32_t m, std::uint64_t l) {
  if (m < 3 || m % 2 == 0)
    throw Error("EvenRank", "rank must be odd and at least 3, got " + std::to_string(m));
  if (l < 2) throw Error("CompositeModulus", "modulus must be at least 2");
  auto ring = std::make_shared<FiniteRing>(FiniteRing::residue(l));
  auto G = matrix_group(m, ring);
  auto sigma_m = identity_mat(m, *ring);
  sigma_m[0 * m + 1] = ring->one();
  auto sigma_t_m = identity_mat(m, *ring);
  sigma_t_m[1 * m + 0] = ring->one();
  Elem sigma = matrix_elem(*G, sigma_m);
  Elem sigma_t = matrix_elem(*G, sigma_t_m);
  Elem tau = matrix_elem(*G, cycle_mat(m, *ring));
  std::string base = "SL(" + std::to_string(m) + ",Z/" + std::to_string(l) + "Z)";
  return {MarkedGroup{G, {sigma, tau}, base + ";P"},
          MarkedGroup{G, {sigma, sigma_t, tau}, base + ";Q"}};
}

MarkedGroup selberg(std::uint32_t p) {
  auto f = make_field(p, 1);
  auto G = matrix_group(2, f.field);
  Elem a = matrix_elem(*G, {1, 2 % p, 0, 1});
  Elem b = matrix_elem(*G, {1, 0, 2 % p, 1});
  return {G, {a, b}, "selberg(" + std::to_string(p) + ")"};
}

MarkedGroup sl_limit_ntri(std::uint32_t p) {
  auto G = ntri_semidirect_group(p);
  PolyFp one = PolyFp::constant(p, 1), t = PolyFp::x(p);
  Elem sigma = ntri_elem(*G, {{0, 1, one}}, 0);
  Elem upsilon = ntri_elem(*G, {{0, 1, t}}, 0);
  Elem tau = ntri_elem(*G, {}, 1);
  return {G, {sigma, upsilon, tau}, "N>(Z,F_" + std::to_string(p) + "[t])xZ"};
}

MarkedGroup sl_limit_full(std::uint32_t p) {
  auto G = sl_semidirect_group(p);
  PolyFp zero(p, {}), one = PolyFp::constant(p, 1), t = PolyFp::x(p);
  Elem sigma = sl_window_elem(*G, 0, 2, {one, one, zero, one}, 0);
  Elem sigma_t = sl_window_elem(*G, 0, 2, {one, zero, one, one}, 0);
  Elem upsilon = sl_window_elem(*G, 0, 2, {one, t, zero, one}, 0);
  Elem tau = sl_window_elem(*G, 0, 0, {}, 1);
  return {G, {sigma, sigma_t, upsilon, tau}, "SL(Z,F_" + std::to_string(p) + "[t])xZ"};
}

MarkedGroup standard_wreath_marking(const MarkedGroup& mgG, const MarkedGroup& mgH) {
  auto W = wreath_group(mgG.group, mgH.group);
  Elem eH = mgH.group->identity();
  std::vector<Elem> gens;
  for (auto& s : mgG.generators) gens.push_back(wreath_elem(*W, {{eH, s}}, eH));
  for (auto& t : mgH.generators) gens.push_back(wreath_elem(*W, {}, t));
  return {W, gens, mgG.name + " wr " + mgH.name};
}

AbsorptionMarking absorption_marking(const MarkedGroup& mgG, const MarkedGroup& mgP,
                                     std::uint32_t r) {
  const std::size_t k = mgG.k();
  auto elems = enumerate_elements(mgP);  // BFS order from e
  auto wm = word_metric(mgP);

  std::vector<Elem> centers{mgP.group->identity()};
  for (const Elem& cand : elems) {
    if (centers.size() == k) break;
    bool ok = true;
    for (auto& c : centers)
      if (wm(mgP, cand, c) <= 2 * r) {
        ok = false;
        break;
      }
    if (ok) centers.push_back(cand);
  }
  if (centers.size() < k)
    throw Error("NoDisjointCenters", "group of order " + std::to_string(elems.size()) +
                                         " has no " + std::to_string(k) +
                                         " disjoint balls of radius " + std::to_string(r));

  auto W = wreath_group(mgG.group, mgP.group);
  Elem eP = mgP.group->identity();
  std::vector<Elem> gens;
  for (std::size_t j = 0; j < k; ++j)
    gens.push_back(wreath_elem(*W, {{centers[j], mgG.generators[j]}}, eP));
  for (auto& t : mgP.generators) gens.push_back(wreath_elem(*W, {}, t));
  return {MarkedGroup{W, gens, mgG.name + " wr " + mgP.name + ";absorb r=" + std::to_string(r)},
          centers};
}

std::uint32_t absorption_radius(int R_m, const MarkedGroup& mgP, std::size_t k) {
  auto wm = word_metric(mgP);
  std::uint32_t by_diam = wm.diameter / static_cast<std::uint32_t>(4 * k);
  if (R_m < 0) return 0;
  return std::min(static_cast<std::uint32_t>(R_m), by_diam);
}

std::uint64_t element_order(const Group& g, const Elem& a, std::uint64_t cap) {
  Elem x = a;
  std::uint64_t n = 1;
  while (!g.is_identity(x)) {
    x = g.mul(x, a);
    if (++n > cap) throw Error("BallOverflow", "element order exceeds cap");
  }
  return n;
}

MarkedGroup absorption_limit_marking(const MarkedGroup& mgG) {
  std::vector<GroupPtr> cyclics;
  for (auto& s : mgG.generators) cyclics.push_back(cyclic_group(element_order(*mgG.group, s)));
  auto base = product_group(cyclics);
  auto W = wreath_over_z_group(base);
  Elem z0 = z_elem(0);
  std::vector<Elem> gens;
  for (std::size_t j = 0; j < cyclics.size(); ++j) {
    std::vector<Elem> parts;
    for (std::size_t i = 0; i < cyclics.size(); ++i)
      parts.push_back(cyclic_elem(*cyclics[i], i == j ? 1 : 0));
    gens.push_back(wreath_elem(*W, {{z0, product_elem(*base, parts)}}, z0));
  }
  gens.push_back(wreath_elem(*W, {}, z_elem(1)));
  return {W, gens, "(C1x...xCk) wr Z"};
}

MarkedGroup direct_product_marking(const MarkedGroup& a, const MarkedGroup& b) {
  auto P = product_group({a.group, b.group});
  Elem ea = a.group->identity(), eb = b.group->identity();
  std::vector<Elem> gens;
  for (auto& s : a.generators) gens.push_back(product_elem(*P, {s, eb}));
  for (auto& t : b.generators) gens.push_back(product_elem(*P, {ea, t}));
  return {P, gens, a.name + " x " + b.name};
}

std::pair<std::size_t, std::size_t> upper_triangular_index(std::size_t l) {
  // enumeration (0,0) < (0,1) < (1,1) < (0,2) < (1,2) < (2,2) < ...: for each
  // n the pairs (0,n)..(n,n)
  std::size_t n = 0, consumed = 0;
  while (consumed + n + 1 <= l) {
    consumed += n + 1;
    ++n;
  }
  return {l - consumed, n};
}

std::vector<MarkedGroup> upper_triangular_product(const std::vector<MarkedGroup>& seqG,
                                                  const std::vector<MarkedGroup>& seqH) {
  std::vector<MarkedGroup> out;
  for (std::size_t l = 0;; ++l) {
    auto [m, n] = upper_triangular_index(l);
    if (n >= seqH.size() || n >= seqG.size()) break;
    out.push_back(direct_product_marking(seqG[m], seqH[n]));
  }
  return out;
}

MarkedGroup sym_encoding(const MarkedGroup& mg) {
  for (auto& s : mg.generators)
    if (mg.group->is_identity(s))
      throw Error("IdentityGenerator", "sym encoding requires nontrivial generators");
  auto S = sym_semidirect_group(mg.group);
  std::vector<Elem> gens;
  for (auto& s : mg.generators) gens.push_back(sym_chi(*S, s));
  for (auto& s : mg.generators) gens.push_back(sym_theta(*S, s));
  return {S, gens, "symenc(" + mg.name + ")"};
}

TheoremDMarkings theorem_d_markings(const MarkedGroup& lef_member, std::uint32_t p,
                                    std::uint32_t l_n, std::uint32_t n, std::uint32_t conv_rmax) {
  const std::uint32_t m = 2 * n + 3;
  auto sl = sl_markings(m, p, l_n);
  const std::size_t k = lef_member.k();

  int R_n = convergence_radius(sl.S, sl_limit_ntri(p), conv_rmax);
  std::uint32_t r = absorption_radius(R_n, sl.S, k);

  auto absorbed = absorption_marking(lef_member, sl.S, r);
  auto& W = *absorbed.marked.group;
  Elem eSL = sl.S.group->identity();
  Elem eW = W.identity();

  auto lamp_at = [&](const Elem& g, const Elem& x) {
    return wreath_elem(W, {{x, g}}, eSL);
  };
  auto top_only = [&](const Elem& x) { return wreath_elem(W, {}, x); };

  TheoremDMarkings out;
  out.centers = absorbed.centers;
  out.r = r;

  std::vector<Elem> Sg, Tg, Ug;
  for (std::size_t j = 0; j < k; ++j) {
    Sg.push_back(lamp_at(lef_member.generators[j], out.centers[j]));
    Tg.push_back(lamp_at(lef_member.generators[j], eSL));
    Ug.push_back(lamp_at(lef_member.generators[j], eSL));
  }
  Elem sigma_inv = sl.S.group->inv(sl.sigma);
  for (auto& e : {sl.sigma, sigma_inv, sl.upsilon, sl.tau}) Sg.push_back(top_only(e));
  for (auto& e : {sl.sigma, sigma_inv, sl.upsilon, sl.tau}) Tg.push_back(top_only(e));
  for (auto& e : {sl.sigma, sl.sigma_t, sl.upsilon, sl.tau}) Ug.push_back(top_only(e));

  out.S = MarkedGroup{absorbed.marked.group, Sg, "thmD;S"};
  out.T = MarkedGroup{absorbed.marked.group, Tg, "thmD;T"};
  out.U = MarkedGroup{absorbed.marked.group, Ug, "thmD;U"};

  // conjugators: base slots move the lamp from x_j back to e via (e, x_j);
  // the sigma^-1 slot of U needs w with w^-1 sigma^-1 w = sigma^T, found by
  // exhaustive search in the SL factor
  for (std::size_t j = 0; j < k; ++j) {
    out.h.push_back(top_only(out.centers[j]));
    out.k.push_back(top_only(out.centers[j]));
  }
  std::optional<Elem> w;
  for (auto& cand : enumerate_elements(sl.S)) {
    if (sl.S.group->conj(cand, sigma_inv) == sl.sigma_t) {
      w = cand;
      break;
    }
  }
  if (!w) throw Error("NoDisjointCenters", "no conjugator from sigma^-1 to sigma^T found");
  for (std::size_t slot = 0; slot < 4; ++slot) {
    out.h.push_back(eW);
    out.k.push_back(slot == 1 ? top_only(*w) : eW);
  }
  return out;
}

TheoremEMarkings theorem_e_markings(std::size_t l, std::uint32_t p,
                                    const std::vector<std::uint32_t>& n_seq, bool explicit_ring) {
  auto [i, j] = upper_triangular_index(l);
  const std::uint32_t sl_rank = static_cast<std::uint32_t>(3 + 2 * i);
  const std::uint32_t z_mod = static_cast<std::uint32_t>(3 + j);
  if (i >= n_seq.size())
    throw Error("BackendMismatch", "n_seq too short for requested family index");

  auto sl = sl_markings(sl_rank, p, n_seq[i], explicit_ring);
  auto cz = cyclic_group(z_mod);
  MarkedGroup zpart{cz, {cyclic_elem(*cz, 1)}, "Z/" + std::to_string(z_mod)};
  MarkedGroup K = direct_product_marking(sl.S, zpart);  // (b1, b2, b3, c)

  auto& P = *K.group;
  Elem b1p = product_elem(P, {sl.sigma_t, cyclic_elem(*cz, 0)});

  auto S = sym_semidirect_group(K.group);
  std::vector<Elem> xi;
  for (auto& b : K.generators) xi.push_back(sym_chi(*S, b));
  for (auto& b : K.generators) xi.push_back(sym_theta(*S, b));
  std::vector<Elem> omega = xi;
  omega.push_back(sym_theta(*S, b1p));

  TheoremEMarkings out;
  out.K = K;
  out.Xi = MarkedGroup{S, xi, "thmE;Xi_" + std::to_string(l)};
  out.Omega = MarkedGroup{S, omega, "thmE;Omega_" + std::to_string(l)};
  out.sl_index = i;
  out.z_index = j;
  return out;
}

}  // namespace cayley
