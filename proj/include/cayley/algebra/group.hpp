#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/bytes.hpp"

namespace cayley {

/// Group backend. Elements are opaque canonical byte strings: equal group
/// elements have byte-identical encodings, so frontier hashing during BFS is
/// plain string hashing. Backends are immutable after construction and all
/// operations are pure.
class Group {
public:
  virtual ~Group() = default;

  virtual Elem identity() const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem inv(const Elem& a) const = 0;

  /// Exact order, or nullopt for the computable-infinite backends.
  virtual std::optional<std::uint64_t> order() const = 0;

  /// Full element list for backends that support cheap enumeration (cyclic,
  /// small permutation/product groups). Needed only by the symmetric
  /// semidirect canonicalizer on very small top groups.
  virtual std::optional<std::vector<Elem>> enumerate() const { return std::nullopt; }

  /// Structural signature; two Group objects with equal signatures are the
  /// same backend with the same parameters. Used for BackendMismatch checks.
  virtual std::string signature() const = 0;

  virtual std::string describe_elem(const Elem& e) const { return bytes::hex(e); }
  virtual std::string describe() const { return signature(); }

  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_identity(const Elem& a) const { return a == identity(); }

  Elem conj(const Elem& h, const Elem& g) const { return mul(mul(inv(h), g), h); }

  void check_same(const Group& other) const {
    if (signature() != other.signature())
      throw Error("BackendMismatch", signature() + " vs " + other.signature());
  }
};

using GroupPtr = std::shared_ptr<const Group>;

// ---- finite backends ----

GroupPtr cyclic_group(std::uint64_t n);
Elem cyclic_elem(const Group& g, std::int64_t v);
std::int64_t cyclic_value(const Elem& e);

/// Sym(deg) on points 0..deg-1; elements are image tables.
GroupPtr permutation_group(std::uint32_t deg);
Elem perm_elem(const Group& g, const std::vector<std::uint32_t>& images);
std::vector<std::uint32_t> perm_images(const Group& g, const Elem& e);

class FiniteRing;
/// m-by-m matrices over a finite ring (invertible ones; constructors are
/// expected to supply unit-determinant matrices).
GroupPtr matrix_group(std::uint32_t m, std::shared_ptr<const FiniteRing> ring,
                      bool sl_constraint = true);
Elem matrix_elem(const Group& g, const std::vector<std::uint64_t>& row_major);
std::vector<std::uint64_t> matrix_entries(const Group& g, const Elem& e);

GroupPtr product_group(std::vector<GroupPtr> factors);
Elem product_elem(const Group& g, const std::vector<Elem>& parts);
std::vector<Elem> product_parts(const Group& g, const Elem& e);

/// Restricted wreath product base wr top: (⊕_top base) ⋊ top. An element is a
/// finitely supported map top -> base (no identity values stored) plus a top
/// element; (f1,h1)(f2,h2) = (f1 · (f2 shifted by h1), h1h2), where the shift
/// moves supp(f2) to h1·supp(f2).
GroupPtr wreath_group(GroupPtr base, GroupPtr top);
Elem wreath_elem(const Group& g, const std::vector<std::pair<Elem, Elem>>& lamps,
                 const Elem& top);
std::pair<std::vector<std::pair<Elem, Elem>>, Elem> wreath_parts(const Group& g, const Elem& e);

/// Sym_{<aleph_0}(T) ⋊ T for a top group T (finite or a limit backend), T
/// acting by right multiplication. An element is the permutation
/// x ↦ sigma(x·g) of T, stored as the fixed-point-free partial bijection
/// sigma plus the germ g; for finite T the representative with minimal
/// support (ties by least germ encoding) is the canonical one.
GroupPtr sym_semidirect_group(GroupPtr top);
Elem sym_semidirect_elem(const Group& g, const std::vector<std::pair<Elem, Elem>>& bij,
                         const Elem& germ);
std::pair<std::vector<std::pair<Elem, Elem>>, Elem> sym_semidirect_parts(const Group& g,
                                                                         const Elem& e);
/// Transposition of {e_T, gamma} (gamma != e_T) paired with trivial germ.
Elem sym_chi(const Group& g, const Elem& gamma);
/// Right multiplication by gamma.
Elem sym_theta(const Group& g, const Elem& gamma);

// ---- computable-infinite limit backends ----

GroupPtr integers_group();
Elem z_elem(std::int64_t v);
std::int64_t z_value(const Elem& e);

/// base wr Z with the same product convention as wreath_group.
GroupPtr wreath_over_z_group(GroupPtr base);

/// N_>(Z, F_p[t]) ⋊ Z: finitely supported strictly-upper-triangular Z×Z
/// matrices over F_p[t], with Z shifting both indices.
GroupPtr ntri_semidirect_group(std::uint32_t p);
class PolyFp;
Elem ntri_elem(const Group& g,
               const std::vector<std::tuple<std::int64_t, std::int64_t, PolyFp>>& entries,
               std::int64_t shift);

/// SL(Z, F_p[t]) ⋊ Z: matrices equal to the identity outside a finite window,
/// unit determinant on the window, with Z shifting indices.
GroupPtr sl_semidirect_group(std::uint32_t p);
Elem sl_window_elem(const Group& g, std::int64_t lo, std::uint32_t size,
                    const std::vector<PolyFp>& row_major, std::int64_t shift);

}  // namespace cayley
