#include "cayley/algebra/ring.hpp"

#include <cmath>

namespace cayley {

bool FiniteRing::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Enumerate monic polynomials of the given degree over F_p whose coefficient
// tuples (c_0,...,c_{deg-1}) ascend lexicographically, c_0 most significant.
bool next_coeff_tuple(std::vector<std::uint32_t>& c, std::uint32_t p) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

PolyFp with_leading_one(std::uint32_t p, const std::vector<std::uint32_t>& low, int d) {
  std::vector<std::uint32_t> c(low.begin(), low.end());
  c.resize(d + 1, 0);
  c[d] = 1;
  return PolyFp(p, std::move(c));
}

}  // namespace

bool FiniteRing::is_irreducible(const PolyFp& f) {
  const std::uint32_t p = f.p();
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  // No roots in F_p.
  for (std::uint32_t r = 0; r < p; ++r) {
    std::uint64_t acc = 0;
    for (int i = d; i >= 0; --i) acc = (acc * r + f.coeff(i)) % p;
    if (acc == 0) return false;
  }
  // Trial division by every monic polynomial of degree 2..d/2.
  for (int e = 2; 2 * e <= d; ++e) {
    std::vector<std::uint32_t> low(e, 0);
    do {
      PolyFp g = with_leading_one(p, low, e);
      if (PolyFp::mod(f, g).is_zero()) return false;
    } while (next_coeff_tuple(low, p));
  }
  return true;
}

FiniteRing FiniteRing::residue(std::uint64_t n) {
  FiniteRing r;
  r.kind_ = Kind::Residue;
  r.n_ = n;
  r.size_ = n;
  r.is_field_ = is_prime(n);
  return r;
}

FiniteRing FiniteRing::poly_quotient(std::uint32_t p, PolyFp f, bool require_field) {
  if (!is_prime(p)) throw Error("CompositeModulus", std::to_string(p) + " is not prime");
  if (f.degree() < 1 || f.coeffs().back() != 1)
    throw Error("Reducible", "modulus must be monic of degree >= 1");
  FiniteRing r;
  r.kind_ = Kind::PolyQuotient;
  r.p_ = p;
  r.is_field_ = is_irreducible(f);
  if (require_field && !r.is_field_)
    throw Error("Reducible", "modulus " + f.str() + " is reducible over F_" + std::to_string(p));
  r.size_ = 1;
  for (int i = 0; i < f.degree(); ++i) r.size_ *= p;
  r.modulus_ = std::move(f);
  return r;
}

FiniteRing::RElem FiniteRing::one() const { return from_int(1); }

FiniteRing::RElem FiniteRing::from_int(std::int64_t v) const {
  if (kind_ == Kind::Residue) {
    std::int64_t m = v % static_cast<std::int64_t>(n_);
    return static_cast<RElem>(m < 0 ? m + static_cast<std::int64_t>(n_) : m);
  }
  std::int64_t m = v % p_;
  return static_cast<RElem>(m < 0 ? m + p_ : m);
}

PolyFp FiniteRing::to_poly(RElem a) const {
  std::vector<std::uint32_t> c;
  std::uint64_t v = a;
  while (v) {
    c.push_back(static_cast<std::uint32_t>(v % p_));
    v /= p_;
  }
  return PolyFp(p_, std::move(c));
}

FiniteRing::RElem FiniteRing::from_poly(const PolyFp& q) const {
  PolyFp r = q.degree() >= modulus_.degree() ? PolyFp::mod(q, modulus_) : q;
  std::uint64_t v = 0;
  for (int i = r.degree(); i >= 0; --i) v = v * p_ + r.coeff(i);
  return v;
}

FiniteRing::RElem FiniteRing::add(RElem a, RElem b) const {
  if (kind_ == Kind::Residue) return (a + b) % n_;
  return from_poly(to_poly(a) + to_poly(b));
}

FiniteRing::RElem FiniteRing::sub(RElem a, RElem b) const {
  if (kind_ == Kind::Residue) return (a + n_ - b) % n_;
  return from_poly(to_poly(a) - to_poly(b));
}

FiniteRing::RElem FiniteRing::neg(RElem a) const {
  if (kind_ == Kind::Residue) return (n_ - a) % n_;
  return from_poly(to_poly(a).negate());
}

FiniteRing::RElem FiniteRing::mul(RElem a, RElem b) const {
  if (kind_ == Kind::Residue)
    return static_cast<RElem>(static_cast<unsigned __int128>(a) * b % n_);
  return from_poly(to_poly(a) * to_poly(b));
}

std::optional<FiniteRing::RElem> FiniteRing::inv(RElem a) const {
  if (a == 0) return std::nullopt;
  if (kind_ == Kind::Residue) {
    std::int64_t t = 0, newt = 1, r = static_cast<std::int64_t>(n_), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::swap(t -= q * newt, newt);
      std::swap(r -= q * newr, newr);
    }
    if (r != 1) return std::nullopt;
    return static_cast<RElem>(t < 0 ? t + static_cast<std::int64_t>(n_) : t);
  }
  // Unit iff gcd with the modulus is 1; compute by extended Euclid in F_p[t].
  PolyFp r0 = modulus_, r1 = to_poly(a);
  PolyFp t0 = PolyFp(p_, {}), t1 = PolyFp::constant(p_, 1);
  while (!r1.is_zero()) {
    PolyFp q, rem;
    PolyFp::divmod(r0, r1, q, rem);
    PolyFp tn = t0 - q * t1;
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = tn;
  }
  if (r0.degree() != 0) return std::nullopt;
  std::uint32_t lead_inv = PolyFp::inv_mod(r0.coeff(0), p_);
  return from_poly(t0 * PolyFp::constant(p_, lead_inv));
}

std::uint64_t FiniteRing::mult_order(RElem a) const {
  if (!inv(a)) return 0;
  std::uint64_t ord = 1;
  RElem x = a;
  while (x != one()) {
    x = mul(x, a);
    ++ord;
    if (ord > size_) throw Error("BackendMismatch", "order check diverged");
  }
  return ord;
}

std::string FiniteRing::str(RElem a) const {
  if (kind_ == Kind::Residue) return std::to_string(a);
  return to_poly(a).str();
}

std::string FiniteRing::describe() const {
  if (kind_ == Kind::Residue) return "Z/" + std::to_string(n_) + "Z";
  std::string base = "F_" + std::to_string(p_) + "[t]/(" + modulus_.str() + ")";
  return base;
}

FieldWithGenerator make_field(std::uint64_t p, std::uint32_t d, std::optional<PolyFp> f) {
  if (!FiniteRing::is_prime(p)) throw Error("CompositeModulus", std::to_string(p) + " is not prime");
  auto pp = static_cast<std::uint32_t>(p);
  PolyFp modulus;
  if (f) {
    if (f->p() != pp || f->degree() != static_cast<int>(d) || f->coeffs().back() != 1)
      throw Error("Reducible", "supplied modulus must be monic of degree d over F_p");
    modulus = *f;
  } else if (d == 1) {
    modulus = PolyFp(pp, {0, 1});  // t itself: F_p[t]/(t) = F_p
  } else {
    std::vector<std::uint32_t> low(d, 0);
    bool found = false;
    do {
      PolyFp cand = with_leading_one(pp, low, static_cast<int>(d));
      if (FiniteRing::is_irreducible(cand)) {
        modulus = cand;
        found = true;
        break;
      }
    } while (next_coeff_tuple(low, pp));
    if (!found) throw Error("Reducible", "no irreducible modulus found");  // unreachable
  }
  auto ring = std::make_shared<FiniteRing>(FiniteRing::poly_quotient(pp, modulus, true));
  // Least element in encoding order (degree-major coefficient tuples) whose
  // multiplicative order is p^d - 1.
  std::uint64_t target = ring->size() - 1;
  for (FiniteRing::RElem a = 1; a < ring->size(); ++a) {
    if (ring->mult_order(a) == target) return {ring, a};
  }
  throw Error("Reducible", "no primitive element found");  // unreachable for fields
}

}  // namespace cayley
