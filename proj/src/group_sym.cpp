#include <algorithm>
#include <map>

#include "cayley/algebra/group.hpp"

namespace cayley {

namespace {

// Element: the permutation x ↦ sigma(x·g) of the top group T, stored as the
// fixed-point-free partial bijection sigma plus the germ g. For infinite T
// the germ is forced (sigma must be finitely supported); for finite T the
// representative with minimal support is canonical (it is unique whenever
// 2·|supp| < |T|, and settled by exhaustive germ enumeration otherwise).
class SymSemidirectGroup final : public Group {
public:
  explicit SymSemidirectGroup(GroupPtr top) : top_(std::move(top)) {}

  using Bij = std::map<Elem, Elem>;

  Elem identity() const override { return enc({}, top_->identity()); }

  Elem mul(const Elem& a, const Elem& b) const override {
    auto [sig, g] = dec(a);
    auto [tau, h] = dec(b);
    // (sigma,g)(tau,h) = (ups, gh) with ups(y) = tau(sigma(y·h^-1)·h).
    Elem hinv = top_->inv(h);
    Bij ups;
    auto consider = [&](const Elem& y) {
      if (ups.count(y)) return;
      Elem z = apply(sig, top_->mul(y, hinv));
      Elem w = apply(tau, top_->mul(z, h));
      if (w != y) ups.emplace(y, std::move(w));
    };
    for (auto& [from, to] : sig) consider(top_->mul(from, h));
    for (auto& [from, to] : tau) consider(from);
    return canonical(ups, top_->mul(g, h));
  }

  Elem inv(const Elem& a) const override {
    auto [sig, g] = dec(a);
    Elem ginv = top_->inv(g);
    Bij out;
    for (auto& [from, to] : sig)
      out.emplace(top_->mul(to, ginv), top_->mul(from, ginv));
    return canonical(out, ginv);
  }

  std::optional<std::uint64_t> order() const override {
    auto ot = top_->order();
    if (!ot) return std::nullopt;  // Sym_{<aleph_0}(T) ⋊ T, infinite
    // The finite backend realizes Sym(T) itself.
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= *ot; ++i) {
      if (f > UINT64_MAX / i) return std::nullopt;
      f *= i;
    }
    return f;
  }

  std::string signature() const override { return "symsd(" + top_->signature() + ")"; }

  std::string describe_elem(const Elem& e) const override {
    auto [sig, g] = dec(e);
    std::string s = "{";
    bool first = true;
    for (auto& [from, to] : sig) {
      s += (first ? "" : ",") + top_->describe_elem(from) + "->" + top_->describe_elem(to);
      first = false;
    }
    return s + "};" + top_->describe_elem(g);
  }

  Elem enc(const Bij& sig, const Elem& germ) const {
    Elem e;
    bytes::put_u64(e, sig.size());
    for (auto& [from, to] : sig) {
      bytes::put_str(e, from);
      bytes::put_str(e, to);
    }
    bytes::put_str(e, germ);
    return e;
  }
  std::pair<Bij, Elem> dec(const Elem& e) const {
    std::size_t pos = 0;
    auto n = bytes::get_u64(e, pos);
    Bij sig;
    for (std::uint64_t i = 0; i < n; ++i) {
      Elem from = bytes::get_str(e, pos);
      Elem to = bytes::get_str(e, pos);
      sig.emplace(std::move(from), std::move(to));
    }
    Elem germ = bytes::get_str(e, pos);
    if (pos != e.size()) throw Error("BackendMismatch", "bad symsd element");
    return {std::move(sig), std::move(germ)};
  }

  Elem canonical(const Bij& sig, const Elem& germ) const {
    auto ot = top_->order();
    if (!ot || 2 * sig.size() < *ot) return enc(sig, germ);
    // Small finite top: enumerate all germ choices and keep the minimal
    // (support size, encoding) representative of the same permutation of T.
    auto all = top_->enumerate();
    if (!all)
      throw Error("BackendMismatch",
                  "support too large for canonical form and top group not enumerable");
    Elem best;
    bool have = false;
    for (const Elem& g2 : *all) {
      Elem g2inv = top_->inv(g2);
      Bij sig2;
      for (const Elem& y : *all) {
        // P(x) = sigma(x·germ); sigma2(y) = P(y·g2^-1).
        Elem w = apply(sig, top_->mul(top_->mul(y, g2inv), germ));
        if (w != y) sig2.emplace(y, std::move(w));
      }
      Elem cand = enc(sig2, g2);
      if (!have || key(cand) < key(best)) {
        best = std::move(cand);
        have = true;
      }
    }
    return best;
  }

  const Group& top() const { return *top_; }

private:
  static Elem apply(const Bij& sig, const Elem& x) {
    auto it = sig.find(x);
    return it == sig.end() ? x : it->second;
  }
  std::pair<std::size_t, Elem> key(const Elem& e) const {
    std::size_t pos = 0;
    auto n = bytes::get_u64(e, pos);
    return {static_cast<std::size_t>(n), e};
  }

  GroupPtr top_;
};

}  // namespace

GroupPtr sym_semidirect_group(GroupPtr top) {
  return std::make_shared<SymSemidirectGroup>(std::move(top));
}

Elem sym_semidirect_elem(const Group& g, const std::vector<std::pair<Elem, Elem>>& bij,
                         const Elem& germ) {
  auto& s = dynamic_cast<const SymSemidirectGroup&>(g);
  SymSemidirectGroup::Bij m;
  for (auto& [from, to] : bij) {
    if (from == to) continue;
    if (!m.emplace(from, to).second) throw Error("BackendMismatch", "duplicate bijection entry");
  }
  // validate bijectivity on the support
  std::map<Elem, int> seen;
  for (auto& [from, to] : m) {
    ++seen[to];
    if (!m.count(to)) throw Error("BackendMismatch", "partial bijection support not closed");
  }
  for (auto& [to, cnt] : seen)
    if (cnt != 1) throw Error("BackendMismatch", "partial map not injective");
  return s.canonical(m, germ);
}

std::pair<std::vector<std::pair<Elem, Elem>>, Elem> sym_semidirect_parts(const Group& g,
                                                                         const Elem& e) {
  auto [sig, germ] = dynamic_cast<const SymSemidirectGroup&>(g).dec(e);
  return {{sig.begin(), sig.end()}, germ};
}

Elem sym_chi(const Group& g, const Elem& gamma) {
  auto& s = dynamic_cast<const SymSemidirectGroup&>(g);
  Elem e_top = s.top().identity();
  if (gamma == e_top) throw Error("IdentityGenerator", "chi requires gamma != identity");
  return sym_semidirect_elem(g, {{e_top, gamma}, {gamma, e_top}}, e_top);
}

Elem sym_theta(const Group& g, const Elem& gamma) {
  auto& s = dynamic_cast<const SymSemidirectGroup&>(g);
  return s.canonical({}, gamma);
}

}  // namespace cayley
