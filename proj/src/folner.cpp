#include "cayley/metrics/folner.hpp"

#include <algorithm>

namespace cayley {

FolnerSet folner_search(const MarkedGroup& mg, double eps, std::uint32_t R,
                        const FolnerOptions& opts) {
  if (!mg.group->order()) throw Error("NoFolnerSetFound", "search requires a finite group");
  auto elems = enumerate_elements(mg);  // BFS order: prefix = ball of radius r
  auto wm = word_metric(mg);
  const std::uint64_t n = elems.size();

  // cumulative ball sizes by radius
  std::vector<std::uint64_t> ball_size(wm.diameter + 1, 0);
  for (auto& e : elems) ++ball_size[wm.dist.at(e)];
  for (std::uint32_t r = 1; r <= wm.diameter; ++r) ball_size[r] += ball_size[r - 1];

  for (std::uint32_t r = 0; r < wm.diameter; ++r) {
    std::uint64_t inner = ball_size[r];
    if (inner == n) break;  // ball saturated early
    if (static_cast<double>(inner) > opts.max_fraction * static_cast<double>(n)) break;
    std::uint64_t outer = ball_size[std::min<std::uint32_t>(r + R, wm.diameter)];
    double ratio = static_cast<double>(outer - inner) / static_cast<double>(inner);
    if (ratio < eps) {
      FolnerSet out;
      out.members.assign(elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(inner));
      out.eps = eps;
      out.R = R;
      out.ratio = ratio;
      return out;
    }
  }
  if (opts.allow_whole_group) {
    FolnerSet out;
    out.members = std::move(elems);
    out.eps = eps;
    out.R = R;
    out.ratio = 0;
    out.whole_group = true;
    return out;
  }
  throw Error("NoFolnerSetFound", "no proper ball satisfies the (eps,R) bound in " + mg.name);
}

FolnerSet folner_from_set(const MarkedGroup& mg, std::vector<Elem> members, double eps,
                          std::uint32_t R) {
  auto elems = enumerate_elements(mg);
  std::unordered_map<Elem, bool> in_f;
  for (auto& m : members) in_f.emplace(m, true);
  auto wm = word_metric(mg);
  std::uint64_t boundary = 0;
  for (auto& h : elems) {
    if (in_f.count(h)) continue;
    for (auto& g : members) {
      if (wm(mg, g, h) <= R) {
        ++boundary;
        break;
      }
    }
  }
  FolnerSet out;
  out.ratio = static_cast<double>(boundary) / static_cast<double>(members.size());
  out.members = std::move(members);
  out.eps = eps;
  out.R = R;
  out.whole_group = out.members.size() == elems.size();
  return out;
}

}  // namespace cayley
