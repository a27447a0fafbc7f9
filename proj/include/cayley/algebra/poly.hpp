#pragma once

#include <cstdint>
#include <vector>

#include "cayley/bytes.hpp"

namespace cayley {

/// Polynomial over F_p in one variable, coefficients normalized to [0,p) with
/// no trailing zeros. Used both for extension-field element arithmetic and as
/// the coefficient ring of the infinite-matrix limit backends.
class PolyFp {
public:
  PolyFp() = default;
  PolyFp(std::uint32_t p, std::vector<std::uint32_t> coeffs): p_(p), c_(std::move(coeffs)) {
    trim();
  }
  static PolyFp constant(std::uint32_t p, std::uint32_t v) { return PolyFp(p, {v % p}); }
  static PolyFp x(std::uint32_t p) { return PolyFp(p, {0, 1}); }

  std::uint32_t p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.c_ == b.c_; }

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % p;
    return PolyFp(p, std::move(c));
  }
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + p - b.coeff(i) % p) % p;
    return PolyFp(p, std::move(c));
  }
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (a.is_zero() || b.is_zero()) return PolyFp(p, {});
    std::vector<std::uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = (c[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % p;
    return PolyFp(p, std::move(c));
  }
  PolyFp negate() const {
    std::vector<std::uint32_t> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = (p_ - c_[i]) % p_;
    return PolyFp(p_, std::move(c));
  }

  // Division with remainder by a nonzero divisor.
  static void divmod(const PolyFp& num, const PolyFp& den, PolyFp& q, PolyFp& r) {
    std::uint32_t p = den.p_;
    std::vector<std::uint32_t> rem = num.c_;
    std::vector<std::uint32_t> quot;
    int dd = den.degree();
    std::uint32_t lead_inv = inv_mod(den.c_.back(), p);
    while (static_cast<int>(rem.size()) - 1 >= dd && !rem.empty()) {
      int shift = static_cast<int>(rem.size()) - 1 - dd;
      std::uint32_t f = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(rem.back()) * lead_inv % p);
      if (quot.size() < static_cast<std::size_t>(shift + 1)) quot.resize(shift + 1, 0);
      quot[shift] = f;
      for (int i = 0; i <= dd; ++i) {
        auto sub = static_cast<std::uint64_t>(den.c_[i]) * f % p;
        rem[i + shift] = static_cast<std::uint32_t>((rem[i + shift] + p - sub) % p);
      }
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    q = PolyFp(p, std::move(quot));
    r = PolyFp(p, std::move(rem));
  }

  static PolyFp mod(const PolyFp& num, const PolyFp& den) {
    PolyFp q, r;
    divmod(num, den, q, r);
    return r;
  }

  static std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p is prime in every use here
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
      std::int64_t qq = r / newr;
      std::swap(t -= qq * newt, newt);
      std::swap(r -= qq * newr, newr);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
  }

  void encode(std::string& out) const {
    bytes::put_u64(out, c_.size());
    for (auto v : c_) bytes::put_u64(out, v);
  }
  static PolyFp decode(std::uint32_t p, const std::string& in, std::size_t& pos) {
    auto n = bytes::get_u64(in, pos);
    std::vector<std::uint32_t> c(n);
    for (auto& v : c) v = static_cast<std::uint32_t>(bytes::get_u64(in, pos));
    return PolyFp(p, std::move(c));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (!c_[i]) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
      if (i >= 1) s += (i == 1 ? "t" : "t^" + std::to_string(i));
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (auto& v : c_) v %= p_;
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
};

}  // namespace cayley
