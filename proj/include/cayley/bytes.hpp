#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cayley {

// Canonical element encoding: a plain byte string. Equal elements of a group
// backend have byte-identical encodings, so hashing and equality are free.
using Elem = std::string;

/// Error with a stable machine-readable code ("Reducible", "BallOverflow", ...).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

namespace bytes {

inline void put_u64(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

inline std::uint64_t get_u64(const std::string& in, std::size_t& pos) {
  std::uint64_t v = 0;
  int shift = 0;
  for (;;) {
    if (pos >= in.size()) throw Error("BackendMismatch", "truncated element encoding");
    auto b = static_cast<unsigned char>(in[pos++]);
    v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
    if (!(b & 0x80)) return v;
    shift += 7;
    if (shift > 63) throw Error("BackendMismatch", "overlong varint");
  }
}

inline void put_i64(std::string& out, std::int64_t v) {
  put_u64(out, (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63));
}

inline std::int64_t get_i64(const std::string& in, std::size_t& pos) {
  std::uint64_t z = get_u64(in, pos);
  return static_cast<std::int64_t>(z >> 1) ^ -static_cast<std::int64_t>(z & 1);
}

inline void put_str(std::string& out, const std::string& s) {
  put_u64(out, s.size());
  out.append(s);
}

inline std::string get_str(const std::string& in, std::size_t& pos) {
  std::uint64_t n = get_u64(in, pos);
  if (pos + n > in.size()) throw Error("BackendMismatch", "truncated element encoding");
  std::string s = in.substr(pos, n);
  pos += n;
  return s;
}

inline std::string hex(const Elem& e) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * e.size());
  for (unsigned char c : e) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

}  // namespace bytes
}  // namespace cayley
