#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/algebra/poly.hpp"
#include "cayley/bytes.hpp"

namespace cayley {

/// Finite commutative ring with unit. Two kinds:
///  - Z/nZ, elements = residues;
///  - F_p[t]/(f), elements = coefficient vectors of length deg f. When f is
///    irreducible this is the field F_{p^d}; reducible moduli (e.g. t^n - t)
///    are admitted behind the `require_field` flag for the fully explicit
///    coefficient-ring variant.
class FiniteRing {
public:
  enum class Kind { Residue, PolyQuotient };

  static FiniteRing residue(std::uint64_t n);
  // f must be monic of degree >= 1 over F_p. Throws Error("Reducible") when
  // require_field is set and f has a nontrivial factor.
  static FiniteRing poly_quotient(std::uint32_t p, PolyFp f, bool require_field);

  Kind kind() const { return kind_; }
  std::uint64_t size() const { return size_; }
  bool is_field() const { return is_field_; }
  std::uint32_t characteristic_p() const { return p_; }
  int degree() const { return modulus_.degree(); }
  const PolyFp& modulus() const { return modulus_; }
  std::uint64_t residue_modulus() const { return n_; }

  using RElem = std::uint64_t;  // index into the ring's element enumeration

  RElem zero() const { return 0; }
  RElem one() const;
  RElem add(RElem a, RElem b) const;
  RElem sub(RElem a, RElem b) const;
  RElem mul(RElem a, RElem b) const;
  RElem neg(RElem a) const;
  RElem from_int(std::int64_t v) const;
  /// Multiplicative inverse; nullopt when a is not a unit.
  std::optional<RElem> inv(RElem a) const;

  RElem from_poly(const PolyFp& q) const;  // PolyQuotient only
  PolyFp to_poly(RElem a) const;

  /// Multiplicative order of a (finite ring, exhaustive); 0 for non-units.
  std::uint64_t mult_order(RElem a) const;

  void encode(std::string& out, RElem a) const { bytes::put_u64(out, a); }
  RElem decode(const std::string& in, std::size_t& pos) const {
    auto v = bytes::get_u64(in, pos);
    if (v >= size_) throw Error("BackendMismatch", "ring element out of range");
    return v;
  }

  std::string str(RElem a) const;
  std::string describe() const;

  static bool is_prime(std::uint64_t n);
  static bool is_irreducible(const PolyFp& f);

private:
  Kind kind_ = Kind::Residue;
  std::uint64_t n_ = 0;     // Residue
  std::uint32_t p_ = 0;     // PolyQuotient
  PolyFp modulus_;          // PolyQuotient
  std::uint64_t size_ = 0;
  bool is_field_ = false;
};

/// F_{p^d} with a deterministically chosen monic irreducible modulus when f is
/// omitted (lexicographic coefficient order, constant term first) and the
/// lexicographically least primitive element, found by exhaustive order check.
struct FieldWithGenerator {
  std::shared_ptr<const FiniteRing> field;
  FiniteRing::RElem primitive;
};
FieldWithGenerator make_field(std::uint64_t p, std::uint32_t d,
                              std::optional<PolyFp> f = std::nullopt);

}  // namespace cayley
