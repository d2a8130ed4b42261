#pragma once

#include <cstdint>
#include <stdexcept>

namespace eqsums {

// The exponent pair (c, d) of the simultaneous equations, 1 <= c < d.
struct ExponentPair {
  std::uint32_t c = 0;
  std::uint32_t d = 0;

  ExponentPair(std::uint32_t c_, std::uint32_t d_) : c(c_), d(d_) {
    if (c < 1 || c >= d)
      throw std::invalid_argument("ExponentPair: require 1 <= c < d");
  }

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

}  // namespace eqsums
