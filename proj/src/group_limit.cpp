#include <algorithm>
#include <map>

#include "cayley/algebra/group.hpp"
#include "cayley/algebra/poly.hpp"

namespace cayley {

namespace {

class IntegersGroup final : public Group {
public:
  Elem identity() const override { return enc(0); }
  Elem mul(const Elem& a, const Elem& b) const override { return enc(dec(a) + dec(b)); }
  Elem inv(const Elem& a) const override { return enc(-dec(a)); }
  std::optional<std::uint64_t> order() const override { return std::nullopt; }
  std::string signature() const override { return "Z"; }
  std::string describe_elem(const Elem& e) const override { return std::to_string(dec(e)); }

  static Elem enc(std::int64_t v) {
    Elem e;
    bytes::put_i64(e, v);
    return e;
  }
  static std::int64_t dec(const Elem& e) {
    std::size_t pos = 0;
    auto v = bytes::get_i64(e, pos);
    if (pos != e.size()) throw Error("BackendMismatch", "bad Z element");
    return v;
  }
};

using Key = std::pair<std::int64_t, std::int64_t>;
using SparsePoly = std::map<Key, PolyFp>;  // (row, col) -> entry, zero entries absent

SparsePoly sparse_mul(std::uint32_t p, const SparsePoly& a, const SparsePoly& b) {
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, const PolyFp*>>> b_rows;
  for (auto& [k, v] : b) b_rows[k.first].emplace_back(k.second, &v);
  SparsePoly c;
  for (auto& [ka, va] : a) {
    auto it = b_rows.find(ka.second);
    if (it == b_rows.end()) continue;
    for (auto& [col, vb] : it->second) {
      Key k{ka.first, col};
      auto found = c.find(k);
      if (found == c.end()) {
        c.emplace(k, va * *vb);
      } else {
        found->second = found->second + va * *vb;
      }
    }
  }
  for (auto it = c.begin(); it != c.end();)
    it = it->second.is_zero() ? c.erase(it) : std::next(it);
  return c;
}

SparsePoly sparse_add(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly c = a;
  for (auto& [k, v] : b) {
    auto it = c.find(k);
    if (it == c.end()) {
      c.emplace(k, v);
    } else {
      it->second = it->second + v;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  return c;
}

SparsePoly sparse_shift(const SparsePoly& a, std::int64_t s) {
  SparsePoly c;
  for (auto& [k, v] : a) c.emplace(Key{k.first + s, k.second + s}, v);
  return c;
}

void encode_sparse(Elem& e, const SparsePoly& a) {
  bytes::put_u64(e, a.size());
  for (auto& [k, v] : a) {
    bytes::put_i64(e, k.first);
    bytes::put_i64(e, k.second);
    v.encode(e);
  }
}

SparsePoly decode_sparse(std::uint32_t p, const Elem& e, std::size_t& pos) {
  auto n = bytes::get_u64(e, pos);
  SparsePoly a;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto r = bytes::get_i64(e, pos);
    auto c = bytes::get_i64(e, pos);
    a.emplace(Key{r, c}, PolyFp::decode(p, e, pos));
  }
  return a;
}

// N_>(Z, F_p[t]) ⋊ Z. The matrix part is stored as the strictly upper
// off-diagonal entries N (so the element is I + N); the Z part shifts both
// indices: (A, s)(B, u) = (A·B^(s), s+u), B^(s)(i,j) = B(i-s, j-s).
class NTriSemidirectGroup final : public Group {
public:
  explicit NTriSemidirectGroup(std::uint32_t p) : p_(p) {}

  Elem identity() const override { return enc({}, 0); }

  Elem mul(const Elem& a, const Elem& b) const override {
    auto [na, sa] = dec(a);
    auto [nb, sb] = dec(b);
    SparsePoly nbs = sparse_shift(nb, sa);
    // (I+A)(I+B) = I + A + B + AB
    SparsePoly out = sparse_add(sparse_add(na, nbs), sparse_mul(p_, na, nbs));
    return enc(out, sa + sb);
  }

  Elem inv(const Elem& a) const override {
    auto [na, sa] = dec(a);
    // (I+N)^-1 = I - N + N^2 - ... (N nilpotent on its index window)
    SparsePoly acc;     // inverse minus identity
    SparsePoly pw = na; // N^k
    int sign = -1;
    while (!pw.empty()) {
      SparsePoly term = pw;
      if (sign < 0)
        for (auto& [k, v] : term) v = v.negate();
      acc = sparse_add(acc, term);
      pw = sparse_mul(p_, pw, na);
      sign = -sign;
    }
    return enc(sparse_shift(acc, -sa), -sa);
  }

  std::optional<std::uint64_t> order() const override { return std::nullopt; }
  std::string signature() const override { return "ntri_sd(F_" + std::to_string(p_) + "[t])"; }
  std::string describe_elem(const Elem& e) const override {
    auto [n, s] = dec(e);
    std::string out = "{";
    bool first = true;
    for (auto& [k, v] : n) {
      out += (first ? "" : ",") + std::to_string(k.first) + "," + std::to_string(k.second) + ":" +
             v.str();
      first = false;
    }
    return out + "};" + std::to_string(s);
  }

  Elem enc(const SparsePoly& n, std::int64_t s) const {
    for (auto& [k, v] : n)
      if (k.first >= k.second) throw Error("BackendMismatch", "entry not strictly upper");
    Elem e;
    encode_sparse(e, n);
    bytes::put_i64(e, s);
    return e;
  }
  std::pair<SparsePoly, std::int64_t> dec(const Elem& e) const {
    std::size_t pos = 0;
    SparsePoly n = decode_sparse(p_, e, pos);
    auto s = bytes::get_i64(e, pos);
    if (pos != e.size()) throw Error("BackendMismatch", "bad ntri element");
    return {std::move(n), s};
  }

private:
  std::uint32_t p_;
};

// Dense square block over F_p[t] on an index interval, used for the SL(Z)
// window arithmetic.
struct Block {
  std::int64_t lo = 0;
  std::uint32_t n = 0;
  std::vector<PolyFp> a;  // row-major
  PolyFp& at(std::uint32_t i, std::uint32_t j) { return a[i * n + j]; }
  const PolyFp& at(std::uint32_t i, std::uint32_t j) const { return a[i * n + j]; }
};

Block block_identity(std::uint32_t p, std::int64_t lo, std::uint32_t n) {
  Block b{lo, n, std::vector<PolyFp>(static_cast<std::size_t>(n) * n, PolyFp(p, {}))};
  for (std::uint32_t i = 0; i < n; ++i) b.at(i, i) = PolyFp::constant(p, 1);
  return b;
}

PolyFp block_det(std::uint32_t p, const Block& b) {
  // Fraction-free Bareiss; divisions are exact in F_p[t].
  Block w = b;
  const std::uint32_t n = w.n;
  if (n == 0) return PolyFp::constant(p, 1);
  PolyFp prev = PolyFp::constant(p, 1);
  int sign = 1;
  for (std::uint32_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      std::uint32_t pivot = k + 1;
      while (pivot < n && w.at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return PolyFp(p, {});
      for (std::uint32_t j = 0; j < n; ++j) std::swap(w.a[k * n + j], w.a[pivot * n + j]);
      sign = -sign;
    }
    for (std::uint32_t i = k + 1; i < n; ++i)
      for (std::uint32_t j = k + 1; j < n; ++j) {
        PolyFp num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        PolyFp q, r;
        PolyFp::divmod(num, prev, q, r);
        if (!r.is_zero()) throw Error("BackendMismatch", "Bareiss division not exact");
        w.at(i, j) = q;
      }
    prev = w.at(k, k);
  }
  PolyFp d = w.at(n - 1, n - 1);
  return sign < 0 ? d.negate() : d;
}

class SLSemidirectGroup final : public Group {
public:
  explicit SLSemidirectGroup(std::uint32_t p) : p_(p) {}

  Elem identity() const override { return enc({}, 0); }

  Elem mul(const Elem& ea, const Elem& eb) const override {
    auto [da, sa] = dec(ea);
    auto [db, sb] = dec(eb);
    SparsePoly dbs = sparse_shift(db, sa);
    auto [lo, hi] = hull(da, dbs);
    if (lo >= hi) return enc({}, sa + sb);
    Block A = to_block(da, lo, hi);
    Block B = to_block(dbs, lo, hi);
    Block C = block_identity(p_, lo, A.n);
    for (std::uint32_t i = 0; i < A.n; ++i)
      for (std::uint32_t j = 0; j < A.n; ++j) {
        PolyFp s(p_, {});
        for (std::uint32_t k = 0; k < A.n; ++k) s = s + A.at(i, k) * B.at(k, j);
        C.at(i, j) = s;
      }
    return enc(to_sparse(C), sa + sb);
  }

  Elem inv(const Elem& ea) const override {
    auto [da, sa] = dec(ea);
    auto [lo, hi] = hull(da, {});
    if (lo >= hi) return enc({}, -sa);
    Block A = to_block(da, lo, hi);
    // det = 1 on the window, so the inverse is the adjugate.
    const std::uint32_t n = A.n;
    Block adj = block_identity(p_, lo, n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        Block m;
        m.lo = 0;
        m.n = n - 1;
        m.a.assign(static_cast<std::size_t>(n - 1) * (n - 1), PolyFp(p_, {}));
        std::uint32_t r = 0;
        for (std::uint32_t ii = 0; ii < n; ++ii) {
          if (ii == j) continue;  // adjugate: minor with row j, col i removed, transposed
          std::uint32_t c = 0;
          for (std::uint32_t jj = 0; jj < n; ++jj) {
            if (jj == i) continue;
            m.at(r, c) = A.at(ii, jj);
            ++c;
          }
          ++r;
        }
        PolyFp cof = block_det(p_, m);
        adj.at(i, j) = ((i + j) % 2) ? cof.negate() : cof;
      }
    return enc(sparse_shift(to_sparse(adj), -sa), -sa);
  }

  std::optional<std::uint64_t> order() const override { return std::nullopt; }
  std::string signature() const override { return "sl_sd(F_" + std::to_string(p_) + "[t])"; }

  Elem enc(const SparsePoly& delta, std::int64_t s) const {
    Elem e;
    encode_sparse(e, delta);
    bytes::put_i64(e, s);
    return e;
  }
  std::pair<SparsePoly, std::int64_t> dec(const Elem& e) const {
    std::size_t pos = 0;
    SparsePoly d = decode_sparse(p_, e, pos);
    auto s = bytes::get_i64(e, pos);
    if (pos != e.size()) throw Error("BackendMismatch", "bad sl window element");
    return {std::move(d), s};
  }

  // delta: entries differing from the identity (value stored, not offset).
  Block to_block(const SparsePoly& delta, std::int64_t lo, std::int64_t hi) const {
    Block b = block_identity(p_, lo, static_cast<std::uint32_t>(hi - lo));
    for (auto& [k, v] : delta) b.at(static_cast<std::uint32_t>(k.first - lo),
                                    static_cast<std::uint32_t>(k.second - lo)) = v;
    return b;
  }
  SparsePoly to_sparse(const Block& b) const {
    SparsePoly d;
    for (std::uint32_t i = 0; i < b.n; ++i)
      for (std::uint32_t j = 0; j < b.n; ++j) {
        const PolyFp& v = b.at(i, j);
        bool is_id = (i == j) ? v.is_one() : v.is_zero();
        if (!is_id) d.emplace(Key{b.lo + i, b.lo + j}, v);
      }
    return d;
  }
  static std::pair<std::int64_t, std::int64_t> hull(const SparsePoly& a, const SparsePoly& b) {
    std::int64_t lo = 0, hi = 0;
    bool any = false;
    auto upd = [&](const SparsePoly& s) {
      for (auto& [k, v] : s) {
        std::int64_t l = std::min(k.first, k.second), h = std::max(k.first, k.second) + 1;
        if (!any) {
          lo = l;
          hi = h;
          any = true;
        } else {
          lo = std::min(lo, l);
          hi = std::max(hi, h);
        }
      }
    };
    upd(a);
    upd(b);
    return {lo, hi};
  }

  std::uint32_t p() const { return p_; }

private:
  std::uint32_t p_;
};

}  // namespace

GroupPtr integers_group() { return std::make_shared<IntegersGroup>(); }

Elem z_elem(std::int64_t v) { return IntegersGroup::enc(v); }

std::int64_t z_value(const Elem& e) { return IntegersGroup::dec(e); }

GroupPtr wreath_over_z_group(GroupPtr base) {
  return wreath_group(std::move(base), integers_group());
}

GroupPtr ntri_semidirect_group(std::uint32_t p) {
  return std::make_shared<NTriSemidirectGroup>(p);
}

Elem ntri_elem(const Group& g,
               const std::vector<std::tuple<std::int64_t, std::int64_t, PolyFp>>& entries,
               std::int64_t shift) {
  auto& n = dynamic_cast<const NTriSemidirectGroup&>(g);
  SparsePoly s;
  for (auto& [i, j, v] : entries)
    if (!v.is_zero()) s.emplace(Key{i, j}, v);
  return n.enc(s, shift);
}

GroupPtr sl_semidirect_group(std::uint32_t p) { return std::make_shared<SLSemidirectGroup>(p); }

Elem sl_window_elem(const Group& g, std::int64_t lo, std::uint32_t size,
                    const std::vector<PolyFp>& row_major, std::int64_t shift) {
  auto& sl = dynamic_cast<const SLSemidirectGroup&>(g);
  if (row_major.size() != static_cast<std::size_t>(size) * size)
    throw Error("BackendMismatch", "window entries must be size*size");
  Block b{lo, size, row_major};
  if (!block_det(sl.p(), b).is_one())
    throw Error("BackendMismatch", "window determinant must be 1");
  return sl.enc(sl.to_sparse(b), shift);
}

}  // namespace cayley
