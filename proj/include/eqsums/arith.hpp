// Elementary number theory used by the counting layers: exact powers, the
// Moebius function via a linear sieve, and gcd over coordinate vectors.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "eqsums/nat.hpp"

namespace eqsums {

// x^k, exact, escalating to arbitrary precision as needed.
inline Nat pow_nat(const Nat& x, unsigned k) {
  if (x < 1) throw std::invalid_argument("pow_nat: base must be >= 1");
  if (k < 1) throw std::invalid_argument("pow_nat: exponent must be >= 1");
  return boost::multiprecision::pow(x, k);
}

// mu(m) for all m <= limit, linear sieve. Immutable once built.
class MobiusSieve {
 public:
  explicit MobiusSieve(std::uint32_t limit) : mu_(std::size_t(limit) + 1, 0) {
    if (limit == 0) throw std::invalid_argument("MobiusSieve: limit must be >= 1");
    mu_[1] = 1;
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(std::size_t(limit) + 1, false);
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (!composite[i]) {
        primes.push_back(i);
        mu_[i] = -1;
      }
      for (std::uint32_t p : primes) {
        std::uint64_t ip = std::uint64_t(i) * p;
        if (ip > limit) break;
        composite[ip] = true;
        if (i % p == 0) {
          mu_[ip] = 0;  // squared factor
          break;
        }
        mu_[ip] = -mu_[i];
      }
    }
  }

  int operator()(std::uint64_t m) const {
    if (m == 0 || m >= mu_.size())
      throw std::out_of_range("MobiusSieve: argument outside sieve range");
    return mu_[m];
  }

  std::uint32_t limit() const { return std::uint32_t(mu_.size() - 1); }

 private:
  std::vector<std::int8_t> mu_;
};

// Convenience entry point; keeps a thread-local sieve grown geometrically.
inline int mobius(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mobius: argument must be >= 1");
  thread_local std::unique_ptr<MobiusSieve> sieve;
  if (!sieve || m > sieve->limit()) {
    std::uint64_t want = 1024;
    while (want < m) want *= 2;
    sieve = std::make_unique<MobiusSieve>(std::uint32_t(want));
  }
  return (*sieve)(m);
}

inline Nat gcd6(const std::array<Nat, 6>& x) {
  Nat g = 0;
  for (const Nat& v : x) {
    if (v < 1) throw std::invalid_argument("gcd6: coordinates must be >= 1");
    g = boost::multiprecision::gcd(g, v);
  }
  return g;
}

inline std::uint64_t gcd6(const std::array<std::uint64_t, 6>& x) {
  std::uint64_t g = 0;
  for (std::uint64_t v : x) {
    if (v == 0) throw std::invalid_argument("gcd6: coordinates must be >= 1");
    g = std::gcd(g, v);
  }
  return g;
}

// (2m+1)!! = (2m+1)(2m-1)...3*1 — the number of perfect matchings of 2m+2 items.
inline Nat double_factorial_odd(unsigned m) {
  Nat r = 1;
  for (unsigned f = 2 * m + 1; f >= 3; f -= 2) r *= f;
  return r;
}

}  // namespace eqsums
