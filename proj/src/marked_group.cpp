#include "cayley/marked/marked_group.hpp"

#include <deque>

namespace cayley {

Elem MarkedGroup::eval_word(const std::vector<int>& word) const {
  Elem acc = group->identity();
  for (int t : word) {
    if (t == 0 || static_cast<std::size_t>(std::abs(t)) > generators.size())
      throw Error("BackendMismatch", "word letter out of range");
    const Elem& s = generators[std::abs(t) - 1];
    acc = group->mul(acc, t > 0 ? s : group->inv(s));
  }
  return acc;
}

namespace {

// BFS over left multiplication by generators and inverses, visiting in the
// canonical arrow order (color, orientation).
template <typename Visit>
void bfs(const MarkedGroup& mg, std::uint64_t cap, Visit&& visit) {
  const Group& G = *mg.group;
  std::vector<Elem> arrows;
  for (auto& s : mg.generators) {
    arrows.push_back(s);
    arrows.push_back(G.inv(s));
  }
  std::unordered_map<Elem, std::uint32_t> dist;
  std::deque<Elem> queue;
  Elem e = G.identity();
  dist.emplace(e, 0);
  if (!visit(e, 0)) return;
  queue.push_back(e);
  while (!queue.empty()) {
    Elem g = std::move(queue.front());
    queue.pop_front();
    std::uint32_t d = dist.at(g);
    for (auto& a : arrows) {
      Elem h = G.mul(a, g);
      if (dist.count(h)) continue;
      dist.emplace(h, d + 1);
      if (dist.size() > cap) throw Error("BallOverflow", "closure exceeded cap");
      if (!visit(h, d + 1)) return;
      queue.push_back(h);
    }
  }
}

}  // namespace

std::optional<std::uint64_t> closure_size(const MarkedGroup& mg, std::uint64_t cap) {
  std::uint64_t n = 0;
  try {
    bfs(mg, cap, [&](const Elem&, std::uint32_t) {
      ++n;
      return true;
    });
  } catch (const Error& err) {
    if (std::string(err.code()) == "BallOverflow") return std::nullopt;
    throw;
  }
  return n;
}

bool generates(const MarkedGroup& mg, std::uint64_t cap) {
  auto order = mg.group->order();
  if (!order) return true;  // infinite backends: not checkable by closure
  if (*order > cap) return true;
  auto n = closure_size(mg, *order);
  return n && *n == *order;
}

std::vector<Elem> enumerate_elements(const MarkedGroup& mg, std::uint64_t cap) {
  std::vector<Elem> all;
  bfs(mg, cap, [&](const Elem& g, std::uint32_t) {
    all.push_back(g);
    return true;
  });
  return all;
}

WordMetric word_metric(const MarkedGroup& mg, std::uint64_t cap) {
  WordMetric wm;
  bfs(mg, cap, [&](const Elem& g, std::uint32_t d) {
    wm.dist.emplace(g, d);
    wm.diameter = std::max(wm.diameter, d);
    return true;
  });
  return wm;
}

std::uint32_t WordMetric::operator()(const MarkedGroup& mg, const Elem& a, const Elem& b) const {
  // right-invariant: d(a,b) = |a·b^{-1}|
  Elem g = mg.group->mul(a, mg.group->inv(b));
  auto it = dist.find(g);
  if (it == dist.end()) throw Error("BackendMismatch", "element outside metric table");
  return it->second;
}

}  // namespace cayley
