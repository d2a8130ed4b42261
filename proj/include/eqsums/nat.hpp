// Exact non-negative integer arithmetic: an arbitrary-precision Nat plus
// checked fixed-width helpers. The counting engine picks a fixed-width lane
// (u64 / u128) once per run when the largest possible power sum fits; Nat is
// the always-correct fallback and the type every report carries.
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqsums {

using Nat = boost::multiprecision::cpp_int;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline Nat nat_from_u128(u128 v) {
  Nat hi = static_cast<u64>(v >> 64);
  return (hi << 64) | static_cast<u64>(v);
}

inline bool fits_u64(const Nat& n) { return n >= 0 && (n >> 64) == 0; }
inline bool fits_u128(const Nat& n) { return n >= 0 && (n >> 128) == 0; }

inline u128 to_u128(const Nat& n) {
  if (!fits_u128(n)) throw std::overflow_error("Nat does not fit in 128 bits");
  u128 hi = (n >> 64).convert_to<u64>();
  u128 lo = (n & Nat(std::numeric_limits<u64>::max())).convert_to<u64>();
  return (hi << 64) | lo;
}

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

inline std::string nat_to_string(const Nat& n) { return n.str(); }

inline Nat nat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  return Nat(s);
}

// x^k with overflow detection; nullopt when the exact value needs > 128 bits.
inline std::optional<u128> pow_u128_checked(u128 x, unsigned k) {
  u128 acc = 1;
  u128 base = x;
  while (k > 0) {
    if (k & 1u) {
      if (__builtin_mul_overflow(acc, base, &acc)) return std::nullopt;
    }
    k >>= 1u;
    if (k == 0) break;
    if (__builtin_mul_overflow(base, base, &base)) return std::nullopt;
  }
  return acc;
}

inline std::optional<u64> pow_u64_checked(u64 x, unsigned k) {
  u64 acc = 1;
  u64 base = x;
  while (k > 0) {
    if (k & 1u) {
      if (__builtin_mul_overflow(acc, base, &acc)) return std::nullopt;
    }
    k >>= 1u;
    if (k == 0) break;
    if (__builtin_mul_overflow(base, base, &base)) return std::nullopt;
  }
  return acc;
}

}  // namespace eqsums
