#include "cayley/spectral/expander.hpp"

#include <cmath>

namespace cayley {

EmbeddedExpanderCertificate embedded_expander_search(const std::vector<MarkedGroup>& seq,
                                                     const std::vector<std::vector<int>>& words,
                                                     std::uint64_t lipschitz_cap) {
  if (words.empty()) throw Error("SubgroupTrivial", "no word expressions supplied");
  EmbeddedExpanderCertificate cert;
  for (auto& w : words)
    cert.D = std::max<std::uint32_t>(cert.D, static_cast<std::uint32_t>(w.size()));
  cert.degree_bound = static_cast<std::uint32_t>(2 * words.size());
  cert.inf_lambda1 = std::numeric_limits<double>::infinity();
  cert.lipschitz_verified = true;

  bool any_nontrivial = false;
  for (std::size_t m = 0; m < seq.size(); ++m) {
    const auto& amb = seq[m];
    std::vector<Elem> gens;
    gens.reserve(words.size());
    bool nontrivial = false;
    for (auto& w : words) {
      Elem t = amb.eval_word(w);
      if (!amb.group->is_identity(t)) nontrivial = true;
      gens.push_back(std::move(t));
    }
    if (!nontrivial) continue;  // degenerate member: subgroup is trivial here
    any_nontrivial = true;

    MarkedGroup sub{amb.group, gens, amb.name + ";sub"};
    auto elements = enumerate_elements(sub);
    cert.indices.push_back(m);
    cert.lambda1s.push_back([&] {
      auto g = build_cayley_graph(sub, 1u << 22, /*require_full=*/false);
      return lambda1_graph(g);
    }());
    cert.inf_lambda1 = std::min(cert.inf_lambda1, cert.lambda1s.back());

    // D-Lipschitz inclusion: d_Gamma(v, w) <= D * d_Lambda(v, w); exhaustive
    // when the ambient is small enough for the full word metric
    auto amb_order = amb.group->order();
    if (amb_order && *amb_order <= lipschitz_cap) {
      auto amb_metric = word_metric(amb);
      auto sub_metric = word_metric(sub);
      for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t b = a + 1; b < elements.size(); ++b) {
          auto dg = amb_metric(amb, elements[a], elements[b]);
          auto dl = sub_metric(sub, elements[a], elements[b]);
          if (dg > cert.D * dl) cert.lipschitz_verified = false;
        }
    }
    if (!cert.sub_elements.empty() && elements.size() <= cert.sub_elements.back().size())
      cert.sizes_increasing = false;
    cert.subgroups.push_back(std::move(sub));
    cert.sub_elements.push_back(std::move(elements));
  }
  if (!any_nontrivial)
    throw Error("SubgroupTrivial", "every word evaluates to the identity in every member");
  return cert;
}

ConcentrationReport concentration_witness(
    const EmbeddedExpanderCertificate& cert, const std::vector<MarkedGroup>& ambient_seq,
    const std::function<Eigen::VectorXd(std::size_t, const Elem&)>& f, int target_dim, double q,
    double C_E, const ControlPair& cp) {
  ConcentrationReport rep;
  for (std::size_t n = 0; n < cert.subgroups.size(); ++n) {
    ConcentrationEntry entry;
    entry.index = cert.indices[n];
    const auto& verts = cert.sub_elements[n];
    const auto& amb = ambient_seq[cert.indices[n]];

    std::vector<Eigen::VectorXd> images;
    images.reserve(verts.size());
    for (auto& v : verts) images.push_back(f(cert.indices[n], v));
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(target_dim);
    for (auto& x : images) mean += x;
    mean /= static_cast<double>(images.size());

    for (auto& x : images) entry.moment += std::pow((x - mean).norm(), q);
    entry.moment /= static_cast<double>(images.size());

    auto g = build_cayley_graph(cert.subgroups[n], 1u << 22, /*require_full=*/false);
    for (auto& [u, v, m] : g.edges)
      entry.edge_energy += m * std::pow((images[u] - images[v]).norm(), q);
    entry.edge_energy /= static_cast<double>(images.size());

    entry.bound = C_E * static_cast<double>(cert.degree_bound) *
                  std::pow(cp.omega(static_cast<double>(cert.D)), q);

    // Markov: at least half the vertices lie within t_half of the mean
    entry.t_half = std::pow(2.0 * entry.moment, 1.0 / q);
    for (auto& x : images)
      if ((x - mean).norm() <= entry.t_half + 1e-12) ++entry.n_half;

    // injectivity + compression rho force the concentrated vertices into an
    // ambient ball; count how large a radius they would need
    std::uint32_t r_allowed = 0;
    while (cp.rho(static_cast<double>(r_allowed + 1)) <= 2.0 * entry.t_half + 1e-12 &&
           r_allowed < 1u << 20)
      ++r_allowed;
    entry.r_allowed = r_allowed;
    const double amb_degree = 2.0 * static_cast<double>(amb.k());
    auto ball_bound = [&](std::uint32_t r) {
      double size = 1, shell = 1;
      for (std::uint32_t i = 0; i < r; ++i) {
        shell *= amb_degree;
        size += shell;
        if (size > 1e18) return 1e18;
      }
      return size;
    };
    std::uint32_t r_fit = 0;
    while (ball_bound(r_fit) < static_cast<double>(entry.n_half) && r_fit < 1u << 20) ++r_fit;
    entry.r_fit = r_fit;
    entry.violated = ball_bound(entry.r_allowed) < static_cast<double>(entry.n_half);
    rep.any_violation = rep.any_violation || entry.violated;
    rep.entries.push_back(entry);
  }
  return rep;
}

}  // namespace cayley
