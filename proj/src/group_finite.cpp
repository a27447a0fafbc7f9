#include <algorithm>
#include <map>

#include "cayley/algebra/group.hpp"
#include "cayley/algebra/ring.hpp"

namespace cayley {

namespace {

class CyclicGroup final : public Group {
public:
  explicit CyclicGroup(std::uint64_t n) : n_(n) {}

  Elem identity() const override { return enc(0); }
  Elem mul(const Elem& a, const Elem& b) const override { return enc((dec(a) + dec(b)) % n_); }
  Elem inv(const Elem& a) const override { return enc((n_ - dec(a)) % n_); }
  std::optional<std::uint64_t> order() const override { return n_; }
  std::string signature() const override { return "cyclic(" + std::to_string(n_) + ")"; }
  std::string describe_elem(const Elem& e) const override { return std::to_string(dec(e)); }

  std::optional<std::vector<Elem>> enumerate() const override {
    std::vector<Elem> all;
    all.reserve(n_);
    for (std::uint64_t v = 0; v < n_; ++v) all.push_back(enc(v));
    return all;
  }

  Elem enc(std::uint64_t v) const {
    Elem e;
    bytes::put_u64(e, v);
    return e;
  }
  std::uint64_t dec(const Elem& e) const {
    std::size_t pos = 0;
    auto v = bytes::get_u64(e, pos);
    if (pos != e.size() || v >= n_) throw Error("BackendMismatch", "bad cyclic element");
    return v;
  }

private:
  std::uint64_t n_;
};

class PermutationGroup final : public Group {
public:
  explicit PermutationGroup(std::uint32_t deg) : deg_(deg) {}

  Elem identity() const override {
    std::vector<std::uint32_t> im(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) im[i] = i;
    return enc(im);
  }
  // x·(ab) = b(a(x)): apply a first, matching the right-action convention
  // used throughout.
  Elem mul(const Elem& a, const Elem& b) const override {
    auto pa = dec(a), pb = dec(b);
    std::vector<std::uint32_t> im(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) im[i] = pb[pa[i]];
    return enc(im);
  }
  Elem inv(const Elem& a) const override {
    auto pa = dec(a);
    std::vector<std::uint32_t> im(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) im[pa[i]] = i;
    return enc(im);
  }
  std::optional<std::uint64_t> order() const override {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= deg_; ++i) f *= i;
    return f;
  }
  std::string signature() const override { return "sym(" + std::to_string(deg_) + ")"; }
  std::string describe_elem(const Elem& e) const override {
    auto im = dec(e);
    std::string s = "[";
    for (std::uint32_t i = 0; i < deg_; ++i) s += (i ? " " : "") + std::to_string(im[i]);
    return s + "]";
  }

  std::optional<std::vector<Elem>> enumerate() const override {
    if (deg_ > 8) return std::nullopt;
    std::vector<std::uint32_t> im(deg_);
    for (std::uint32_t i = 0; i < deg_; ++i) im[i] = i;
    std::vector<Elem> all;
    do {
      all.push_back(enc(im));
    } while (std::next_permutation(im.begin(), im.end()));
    std::sort(all.begin(), all.end());
    return all;
  }

  Elem enc(const std::vector<std::uint32_t>& im) const {
    Elem e;
    for (auto v : im) bytes::put_u64(e, v);
    return e;
  }
  std::vector<std::uint32_t> dec(const Elem& e) const {
    std::size_t pos = 0;
    std::vector<std::uint32_t> im(deg_);
    for (auto& v : im) v = static_cast<std::uint32_t>(bytes::get_u64(e, pos));
    if (pos != e.size()) throw Error("BackendMismatch", "bad permutation element");
    return im;
  }

private:
  std::uint32_t deg_;
};

class MatrixGroup final : public Group {
public:
  MatrixGroup(std::uint32_t m, std::shared_ptr<const FiniteRing> ring, bool sl)
      : m_(m), ring_(std::move(ring)), sl_(sl) {}

  using Mat = std::vector<std::uint64_t>;  // row-major ring elements

  Elem identity() const override {
    Mat a(m_ * m_, ring_->zero());
    for (std::uint32_t i = 0; i < m_; ++i) a[i * m_ + i] = ring_->one();
    return enc(a);
  }
  Elem mul(const Elem& ea, const Elem& eb) const override {
    Mat a = dec(ea), b = dec(eb), c(m_ * m_, ring_->zero());
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t k = 0; k < m_; ++k) {
        auto aik = a[i * m_ + k];
        if (aik == ring_->zero()) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
          c[i * m_ + j] = ring_->add(c[i * m_ + j], ring_->mul(aik, b[k * m_ + j]));
      }
    return enc(c);
  }
  Elem inv(const Elem& ea) const override {
    Mat a = dec(ea);
    auto d = det(a, m_);
    auto dinv = ring_->inv(d);
    if (!dinv) throw Error("BackendMismatch", "matrix not invertible");
    Mat adj(m_ * m_);
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j) {
        auto c = det(minor_of(a, j, i), m_ - 1);
        if ((i + j) % 2) c = ring_->neg(c);
        adj[i * m_ + j] = ring_->mul(c, *dinv);
      }
    return enc(adj);
  }
  std::optional<std::uint64_t> order() const override {
    if (!sl_ || !ring_->is_field()) return std::nullopt;  // only the SL/field order formula is exposed
    std::uint64_t q = ring_->size(), r = 1;
    for (std::uint32_t i = 0; i < m_ * (m_ - 1) / 2; ++i) r *= q;
    for (std::uint32_t i = 2; i <= m_; ++i) {
      std::uint64_t qi = 1;
      for (std::uint32_t j = 0; j < i; ++j) qi *= q;
      r *= qi - 1;
    }
    return r;
  }
  std::string signature() const override {
    return std::string(sl_ ? "SL" : "GL") + "(" + std::to_string(m_) + "," + ring_->describe() + ")";
  }
  std::string describe_elem(const Elem& e) const override {
    Mat a = dec(e);
    std::string s = "[";
    for (std::uint32_t i = 0; i < m_; ++i) {
      s += i ? "; " : "";
      for (std::uint32_t j = 0; j < m_; ++j) s += (j ? "," : "") + ring_->str(a[i * m_ + j]);
    }
    return s + "]";
  }

  Elem enc(const Mat& a) const {
    Elem e;
    for (auto v : a) ring_->encode(e, v);
    return e;
  }
  Mat dec(const Elem& e) const {
    std::size_t pos = 0;
    Mat a(m_ * m_);
    for (auto& v : a) v = ring_->decode(e, pos);
    if (pos != e.size()) throw Error("BackendMismatch", "bad matrix element");
    return a;
  }

  std::uint64_t det(const Mat& a, std::uint32_t n) const {
    if (n == 0) return ring_->one();
    if (n == 1) return a[0];
    std::uint64_t s = ring_->zero();
    for (std::uint32_t j = 0; j < n; ++j) {
      if (a[j] == ring_->zero()) continue;
      auto sub = det(minor_n(a, n, 0, j), n - 1);
      auto term = ring_->mul(a[j], sub);
      s = (j % 2) ? ring_->sub(s, term) : ring_->add(s, term);
    }
    return s;
  }

  std::uint32_t dim() const { return m_; }
  const FiniteRing& ring() const { return *ring_; }

private:
  Mat minor_of(const Mat& a, std::uint32_t row, std::uint32_t col) const {
    return minor_n(a, m_, row, col);
  }
  Mat minor_n(const Mat& a, std::uint32_t n, std::uint32_t row, std::uint32_t col) const {
    Mat b((n - 1) * (n - 1));
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i == row) continue;
      std::uint32_t c = 0;
      for (std::uint32_t j = 0; j < n; ++j) {
        if (j == col) continue;
        b[r * (n - 1) + c] = a[i * n + j];
        ++c;
      }
      ++r;
    }
    return b;
  }

  std::uint32_t m_;
  std::shared_ptr<const FiniteRing> ring_;
  bool sl_;
};

class ProductGroup final : public Group {
public:
  explicit ProductGroup(std::vector<GroupPtr> fs) : fs_(std::move(fs)) {}

  Elem identity() const override {
    std::vector<Elem> parts;
    parts.reserve(fs_.size());
    for (auto& f : fs_) parts.push_back(f->identity());
    return enc(parts);
  }
  Elem mul(const Elem& a, const Elem& b) const override {
    auto pa = dec(a), pb = dec(b);
    std::vector<Elem> parts(fs_.size());
    for (std::size_t i = 0; i < fs_.size(); ++i) parts[i] = fs_[i]->mul(pa[i], pb[i]);
    return enc(parts);
  }
  Elem inv(const Elem& a) const override {
    auto pa = dec(a);
    std::vector<Elem> parts(fs_.size());
    for (std::size_t i = 0; i < fs_.size(); ++i) parts[i] = fs_[i]->inv(pa[i]);
    return enc(parts);
  }
  std::optional<std::uint64_t> order() const override {
    std::uint64_t r = 1;
    for (auto& f : fs_) {
      auto o = f->order();
      if (!o) return std::nullopt;
      r *= *o;
    }
    return r;
  }
  std::optional<std::vector<Elem>> enumerate() const override {
    std::vector<std::vector<Elem>> lists;
    std::uint64_t total = 1;
    for (auto& f : fs_) {
      auto l = f->enumerate();
      if (!l) return std::nullopt;
      total *= l->size();
      if (total > 100000) return std::nullopt;
      lists.push_back(std::move(*l));
    }
    std::vector<Elem> all;
    std::vector<std::size_t> idx(fs_.size(), 0);
    for (;;) {
      std::vector<Elem> parts;
      for (std::size_t i = 0; i < fs_.size(); ++i) parts.push_back(lists[i][idx[i]]);
      all.push_back(enc(parts));
      std::size_t i = fs_.size();
      while (i-- > 0) {
        if (++idx[i] < lists[i].size()) break;
        idx[i] = 0;
        if (i == 0) {
          std::sort(all.begin(), all.end());
          return all;
        }
      }
    }
  }
  std::string signature() const override {
    std::string s = "product(";
    for (std::size_t i = 0; i < fs_.size(); ++i) s += (i ? "," : "") + fs_[i]->signature();
    return s + ")";
  }
  std::string describe_elem(const Elem& e) const override {
    auto parts = dec(e);
    std::string s = "(";
    for (std::size_t i = 0; i < fs_.size(); ++i)
      s += (i ? "," : "") + fs_[i]->describe_elem(parts[i]);
    return s + ")";
  }

  Elem enc(const std::vector<Elem>& parts) const {
    Elem e;
    for (auto& p : parts) bytes::put_str(e, p);
    return e;
  }
  std::vector<Elem> dec(const Elem& e) const {
    std::size_t pos = 0;
    std::vector<Elem> parts(fs_.size());
    for (auto& p : parts) p = bytes::get_str(e, pos);
    if (pos != e.size()) throw Error("BackendMismatch", "bad product element");
    return parts;
  }

  const std::vector<GroupPtr>& factors() const { return fs_; }

private:
  std::vector<GroupPtr> fs_;
};

class WreathGroup final : public Group {
public:
  WreathGroup(GroupPtr base, GroupPtr top) : base_(std::move(base)), top_(std::move(top)) {}

  using Lamps = std::vector<std::pair<Elem, Elem>>;  // (top position, base value), sorted

  Elem identity() const override { return enc({}, top_->identity()); }

  Elem mul(const Elem& a, const Elem& b) const override {
    auto [fa, ha] = dec(a);
    auto [fb, hb] = dec(b);
    std::map<Elem, Elem> merged(fa.begin(), fa.end());
    for (auto& [pos, val] : fb) {
      Elem shifted = top_->mul(ha, pos);
      auto it = merged.find(shifted);
      if (it == merged.end()) {
        merged.emplace(std::move(shifted), val);
      } else {
        it->second = base_->mul(it->second, val);
        if (base_->is_identity(it->second)) merged.erase(it);
      }
    }
    Lamps out(merged.begin(), merged.end());
    return enc(out, top_->mul(ha, hb));
  }

  Elem inv(const Elem& a) const override {
    auto [fa, ha] = dec(a);
    Elem hinv = top_->inv(ha);
    std::map<Elem, Elem> merged;
    for (auto& [pos, val] : fa) merged.emplace(top_->mul(hinv, pos), base_->inv(val));
    Lamps out(merged.begin(), merged.end());
    return enc(out, hinv);
  }

  std::optional<std::uint64_t> order() const override {
    auto ob = base_->order();
    auto ot = top_->order();
    if (!ob || !ot) return std::nullopt;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < *ot; ++i) {
      if (*ob != 0 && r > UINT64_MAX / *ob) return std::nullopt;  // overflow: treat as unknown
      r *= *ob;
    }
    return r * *ot;
  }

  std::string signature() const override {
    return "wreath(" + base_->signature() + "," + top_->signature() + ")";
  }
  std::string describe_elem(const Elem& e) const override {
    auto [f, h] = dec(e);
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i)
      s += (i ? "," : "") + top_->describe_elem(f[i].first) + ":" + base_->describe_elem(f[i].second);
    return s + "};" + top_->describe_elem(h);
  }

  Elem enc(const Lamps& lamps, const Elem& top) const {
    Elem e;
    bytes::put_u64(e, lamps.size());
    for (auto& [pos, val] : lamps) {
      bytes::put_str(e, pos);
      bytes::put_str(e, val);
    }
    bytes::put_str(e, top);
    return e;
  }
  std::pair<Lamps, Elem> dec(const Elem& e) const {
    std::size_t pos = 0;
    auto n = bytes::get_u64(e, pos);
    Lamps lamps;
    lamps.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      Elem p = bytes::get_str(e, pos);
      Elem v = bytes::get_str(e, pos);
      lamps.emplace_back(std::move(p), std::move(v));
    }
    Elem top = bytes::get_str(e, pos);
    if (pos != e.size()) throw Error("BackendMismatch", "bad wreath element");
    return {std::move(lamps), std::move(top)};
  }

  const Group& base() const { return *base_; }
  const Group& top() const { return *top_; }

private:
  GroupPtr base_, top_;
};

}  // namespace

GroupPtr cyclic_group(std::uint64_t n) { return std::make_shared<CyclicGroup>(n); }

Elem cyclic_elem(const Group& g, std::int64_t v) {
  auto& c = dynamic_cast<const CyclicGroup&>(g);
  auto n = static_cast<std::int64_t>(*c.order());
  std::int64_t m = v % n;
  return c.enc(static_cast<std::uint64_t>(m < 0 ? m + n : m));
}

std::int64_t cyclic_value(const Elem& e) {
  std::size_t pos = 0;
  return static_cast<std::int64_t>(bytes::get_u64(e, pos));
}

GroupPtr permutation_group(std::uint32_t deg) { return std::make_shared<PermutationGroup>(deg); }

Elem perm_elem(const Group& g, const std::vector<std::uint32_t>& images) {
  return dynamic_cast<const PermutationGroup&>(g).enc(images);
}

std::vector<std::uint32_t> perm_images(const Group& g, const Elem& e) {
  return dynamic_cast<const PermutationGroup&>(g).dec(e);
}

GroupPtr matrix_group(std::uint32_t m, std::shared_ptr<const FiniteRing> ring, bool sl) {
  return std::make_shared<MatrixGroup>(m, std::move(ring), sl);
}

Elem matrix_elem(const Group& g, const std::vector<std::uint64_t>& row_major) {
  return dynamic_cast<const MatrixGroup&>(g).enc(row_major);
}

std::vector<std::uint64_t> matrix_entries(const Group& g, const Elem& e) {
  return dynamic_cast<const MatrixGroup&>(g).dec(e);
}

GroupPtr product_group(std::vector<GroupPtr> factors) {
  return std::make_shared<ProductGroup>(std::move(factors));
}

Elem product_elem(const Group& g, const std::vector<Elem>& parts) {
  return dynamic_cast<const ProductGroup&>(g).enc(parts);
}

std::vector<Elem> product_parts(const Group& g, const Elem& e) {
  return dynamic_cast<const ProductGroup&>(g).dec(e);
}

GroupPtr wreath_group(GroupPtr base, GroupPtr top) {
  return std::make_shared<WreathGroup>(std::move(base), std::move(top));
}

Elem wreath_elem(const Group& g, const std::vector<std::pair<Elem, Elem>>& lamps,
                 const Elem& top) {
  auto& w = dynamic_cast<const WreathGroup&>(g);
  std::map<Elem, Elem> sorted;
  for (auto& [pos, val] : lamps) {
    if (w.base().is_identity(val)) continue;
    if (!sorted.emplace(pos, val).second)
      throw Error("BackendMismatch", "duplicate lamp position");
  }
  return w.enc({sorted.begin(), sorted.end()}, top);
}

std::pair<std::vector<std::pair<Elem, Elem>>, Elem> wreath_parts(const Group& g, const Elem& e) {
  return dynamic_cast<const WreathGroup&>(g).dec(e);
}

}  // namespace cayley
